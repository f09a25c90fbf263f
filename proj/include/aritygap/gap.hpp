#pragma once

// Quasi-arity, supports, semiprojections and the arity gap.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aritygap/core.hpp"

namespace aritygap {

/// Minimum essential arity over all supports (total functions agreeing with f
/// on the diagonal set).
std::size_t quasi_arity(const FiniteFunction& f);

/// Least slot t with f(a) = a_t on the whole diagonal set. Requires b = k.
std::optional<std::size_t> semiprojection_slot(const FiniteFunction& f);

/// f rewritten on its essential slots only; `slots[r]` is the original slot
/// read by argument r. Essentially nullary functions become unary constants.
struct Normalized {
  FiniteFunction function;
  std::vector<std::size_t> slots;
};

Normalized normalize(const FiniteFunction& f);

struct UnarySupport {
  FiniteFunction support;
  std::optional<std::size_t> slot;  // absent for the constant support
};

/// The constant or essentially unary supports of a quasi-nullary or
/// quasi-unary function. A quasi-unary binary function has two.
struct SupportCandidates {
  std::vector<UnarySupport> candidates;
  bool ambiguous() const noexcept { return candidates.size() > 1; }
};

/// Throws no-such-support when the quasi-arity is at least 2.
SupportCandidates unique_unary_support(const FiniteFunction& f);

struct GapReport {
  std::size_t ess = 0;
  std::size_t qa = 0;    // of the normalized function
  std::size_t essl = 0;
  std::size_t gap = 0;
  std::pair<std::size_t, std::size_t> pair{};  // original slots, i < j
  std::vector<UnarySupport> supports;          // original slot numbering
};

/// Throws gap-undefined when fewer than two slots are essential.
GapReport arity_gap(const FiniteFunction& f);

/// `ess=<e> qa=<q> essl=<l> gap=<g> pair=<i>,<j>` with 1-based slots.
std::string render(const GapReport& report);

}  // namespace aritygap
