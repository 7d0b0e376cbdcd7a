#include "orbizeta/recurrence.hpp"

#include <utility>

#include "orbizeta/error.hpp"

namespace orbizeta {

std::vector<BigRational> LinearRecurrence::generate(const std::vector<BigRational>& seed,
                                                    std::size_t length) const {
  std::size_t d = order();
  if (seed.size() < d) throw Error(Error::Kind::Precondition, "seed shorter than recurrence order");
  std::vector<BigRational> out(seed.begin(), seed.begin() + static_cast<std::ptrdiff_t>(d));
  out.reserve(length);
  for (std::size_t n = d; n < length; ++n) {
    BigRational next = 0;
    for (std::size_t i = 1; i <= d; ++i) next -= connection[i] * out[n - i];
    out.push_back(next);
  }
  out.resize(length);
  return out;
}

bool LinearRecurrence::reproduces(const std::vector<BigRational>& seq) const {
  if (seq.size() <= order()) return true;
  return generate(seq, seq.size()) == seq;
}

LinearRecurrence berlekamp_massey(const std::vector<BigRational>& seq) {
  std::vector<BigRational> current{1}, previous{1};
  std::size_t length = 0;
  std::size_t shift = 1;
  BigRational previous_discrepancy = 1;

  for (std::size_t n = 0; n < seq.size(); ++n) {
    BigRational discrepancy = seq[n];
    for (std::size_t i = 1; i <= length && i < current.size(); ++i)
      discrepancy += current[i] * seq[n - i];
    if (discrepancy == 0) {
      ++shift;
      continue;
    }
    BigRational scale = discrepancy / previous_discrepancy;
    std::vector<BigRational> candidate = current;
    if (candidate.size() < previous.size() + shift) candidate.resize(previous.size() + shift, 0);
    for (std::size_t i = 0; i < previous.size(); ++i) candidate[i + shift] -= scale * previous[i];

    if (2 * length <= n) {
      previous = std::move(current);
      previous_discrepancy = discrepancy;
      length = n + 1 - length;
      shift = 1;
    } else {
      ++shift;
    }
    current = std::move(candidate);
  }

  current.resize(length + 1, 0);
  return LinearRecurrence{std::move(current)};
}

}  // namespace orbizeta
