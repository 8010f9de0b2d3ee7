#pragma once

#include <string>
#include <vector>

namespace pcc {

// The datum of a configuration count: points in P^{r-1}, markings 1..n,
// and an ordered tuple of constraint subsets, each of size r+2.
struct Instance {
  int r = 0;
  int n = 0;
  std::vector<std::vector<int>> constraints;  // each sorted ascending, labels 1-based

  int k() const { return static_cast<int>(constraints.size()); }
  bool operator==(const Instance&) const = default;
};

// Compact format: "12345,23456" with single-digit labels; n is inferred
// as k + r + 1 and must be <= 9. Throws std::invalid_argument on
// malformed text, wrong subset sizes, duplicates, or labels exceeding n.
Instance parse_compact(const std::string& text, int r);

// JSON format: {"r":int,"n":int,"constraints":[[int,...],...]}.
Instance parse_json(const std::string& text);

std::string serialize_compact(const Instance& inst);
std::string serialize_json(const Instance& inst);

// Empty result means the instance satisfies every invariant. Violations
// are data, not errors; each string names one failed rule.
std::vector<std::string> validate(const Instance& inst);

// (r-1)(n-r-1), the dimension of the configuration space.
int moduli_dimension(const Instance& inst);

}  // namespace pcc
