#pragma once

#include <string>
#include <vector>

namespace pin2k {

// One named hypothesis or non-degeneracy condition with its outcome.
struct Condition {
  std::string name;
  bool pass = false;
  std::string detail;

  bool operator==(const Condition& o) const {
    return name == o.name && pass == o.pass && detail == o.detail;
  }
};

inline bool all_pass(const std::vector<Condition>& cs) {
  for (const auto& c : cs)
    if (!c.pass) return false;
  return true;
}

}  // namespace pin2k
