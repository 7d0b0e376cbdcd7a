#pragma once

#include <cstddef>
#include <vector>

#include "orbizeta/rational.hpp"

namespace orbizeta {

// a_n + c_1 a_{n-1} + ... + c_d a_{n-d} = 0 for n >= d, with c_0 = 1.
struct LinearRecurrence {
  std::vector<BigRational> connection{BigRational(1)};

  std::size_t order() const { return connection.size() - 1; }

  // Runs the recurrence forward from the first order() terms of seed and
  // returns `length` terms.
  std::vector<BigRational> generate(const std::vector<BigRational>& seed, std::size_t length) const;
  // True when every term of seq at index >= order() is reproduced.
  bool reproduces(const std::vector<BigRational>& seq) const;
};

// Minimal connection polynomial of the sequence over Q.
LinearRecurrence berlekamp_massey(const std::vector<BigRational>& seq);

}  // namespace orbizeta
