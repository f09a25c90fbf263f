#pragma once

// The map sending a tuple to the set of values occurring in it an odd number
// of times, and tests for functions factoring through it.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aritygap/core.hpp"

namespace aritygap {

/// Subsets of A as bit masks (bit a set iff a is a member); needs k <= 64.
using Subset = std::uint64_t;

Subset oddsupp(std::span<const Value> tuple);
std::string render_subset(Subset s);

struct OddsuppProfile {
  bool determined = false;
  /// f agrees on every oddsupp fiber; f* below is then complete.
  bool fibers_respected = false;
  bool nonconstant = false;
  std::map<Subset, Value> fstar;
  /// Lexicographically first pair with equal oddsupp and different values.
  std::optional<std::pair<Tuple, Tuple>> witness;
};

/// f = f* o oddsupp on all of A^n.
OddsuppProfile determined_by_oddsupp(const FiniteFunction& f);

/// f = f* o oddsupp on the diagonal set with f* nonconstant. Requires n >= 2.
/// For n = 2 the only reachable subset is the empty set, so the verdict is
/// always false.
OddsuppProfile restriction_determined_by_oddsupp(const FiniteFunction& f);

/// Subsets whose size has the parity of n and is at most n (full) or n - 2
/// (restricted), and at most k. These are exactly the oddsupp images.
std::vector<Subset> reachable_subsets(std::uint32_t k, std::uint32_t n,
                                      bool restricted);

/// f(a) = f(pi a) for every permutation pi and every a in the diagonal set.
bool restriction_totally_symmetric(const FiniteFunction& f);

std::string render(const OddsuppProfile& profile);

}  // namespace aritygap
