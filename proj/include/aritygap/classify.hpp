#pragma once

// Classification of functions by arity gap: the general quasi-arity/oddsupp
// characterization, the Boolean family list, and the pseudo-Boolean case.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aritygap/core.hpp"

namespace aritygap {

enum class Rationale {
  quasi_nullary,      // qa = 0 <= n - 3, gap n
  quasi_low,          // 1 <= qa <= n - 3, gap n - qa
  quasi_n_minus_2,    // qa = n - 2 (n != 3), gap 2
  oddsupp_determined, // qa = n and the diagonal restriction factors through oddsupp
  ternary_pattern,    // n = 3 with an (i1,i2,i3) pattern
  gap_one,
};

const char* to_string(Rationale r) noexcept;

/// f(x1,x0,x0) = h(x_{i1}), f(x0,x1,x0) = h(x_{i2}), f(x0,x0,x1) = h(x_{i3}).
struct TernaryPattern {
  std::array<std::uint8_t, 3> bits{};
  FiniteFunction h;

  std::string render() const;
};

enum class BooleanFamily {
  linear,               // x1 + ... + xm + c
  x1x2_plus_x1,         // x1x2 + x1 + c
  majority,             // x1x2 + x1x3 + x2x3 + c
  two_thirds_minority,  // x1x2 + x1x3 + x2x3 + x1 + x2 + c
};

const char* to_string(BooleanFamily family) noexcept;

struct FamilyMatch {
  BooleanFamily family;
  Value c = 0;
  /// perm[r] is the original slot playing the family's variable x_{r+1}.
  std::vector<std::size_t> perm;
};

/// f = g o h with g: {0,1} -> B injective and h Boolean, h(0,...,0) = 0.
struct PseudoBooleanDecomposition {
  std::array<Value, 2> g{};
  FiniteFunction h;
};

struct Classification {
  std::size_t gap = 0;
  Rationale tag = Rationale::gap_one;
  std::optional<std::size_t> m;
  std::optional<TernaryPattern> pattern;
  std::optional<FamilyMatch> family;
  std::optional<PseudoBooleanDecomposition> decomposition;
};

/// `gap=<g> tag=<tag> [m=<m>] [pattern=<i1i2i3>] [family=<id> c=<c> perm=<p>]`
std::string render(const Classification& c);

/// Multilinear polynomial over GF(2). Monomials are slot masks (bit i is
/// slot i), sorted by degree and then by mask.
struct AnfPolynomial {
  std::uint32_t n = 0;
  Value constant = 0;
  std::vector<std::uint64_t> monomials;

  Value evaluate(std::span<const Value> tuple) const;
  std::string render() const;
};

/// Moebius transform of a Boolean table. Requires k = b = 2.
AnfPolynomial anf(const FiniteFunction& f);

/// Requires n = 3. Absent when the diagonal is constant or no pattern fits.
std::optional<TernaryPattern> ternary_pattern(const FiniteFunction& f);

/// Inessential slots are dropped first; throws gap-undefined if fewer than
/// two remain.
Classification classify(const FiniteFunction& f);
Classification classify_boolean(const FiniteFunction& f);
Classification classify_pseudo_boolean(const FiniteFunction& f);

}  // namespace aritygap
