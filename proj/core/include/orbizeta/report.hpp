#pragma once

#include <string>
#include <vector>

namespace orbizeta {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

// Ordered list of named checks; a verification passes iff every check does.
struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {});
  bool passed() const;
  std::vector<Check> failures() const;
  // One "PASS name" / "FAIL name: detail" line per check.
  std::string to_text() const;
};

}  // namespace orbizeta
