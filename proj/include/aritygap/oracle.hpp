#pragma once

// Brute-force oracles, seeded generators for constructed witnesses, function
// space enumeration, and theorem verification sweeps.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "aritygap/core.hpp"

namespace aritygap {

/// Work budget in tables examined: ARITYGAP_BUDGET if set, else 10^7.
std::uint64_t default_budget();

// ---------------------------------------------------------------------------
// Oracles. These go straight from the definitions and share no code with
// the analysis, gap or classify modules.

/// Essential arity by testing every tuple against every single-slot change.
std::size_t oracle_essential_arity(const FiniteFunction& f);

/// ess f minus the largest essential arity of a strict simple minor, with
/// every substitution sigma: {1..n} -> {1..p}, 1 <= p <= n, tried.
std::size_t oracle_gap(const FiniteFunction& f);

/// Minimum essential arity over every completion of f off the diagonal set.
/// Throws oracle-infeasible when b^(off-diagonal count) exceeds `budget`.
std::size_t oracle_quasi_arity(const FiniteFunction& f,
                               std::uint64_t budget = default_budget());

/// b^d for the d tuples with pairwise distinct coordinates, saturating.
std::uint64_t support_count(std::uint32_t k, std::uint32_t n, std::uint32_t b);

// ---------------------------------------------------------------------------
// Generators

using Rng = std::mt19937_64;

/// Seed for task `index` of stream `stream` under `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index) noexcept;

FiniteFunction random_function(std::uint32_t k, std::uint32_t n, std::uint32_t b,
                               Rng& rng);

/// The operation on A with value 1 at (0,1,...,k-1) and 0 elsewhere.
FiniteFunction gen_salomaa(std::uint32_t k);

/// A function depending on all n slots with quasi-arity m, copied from a
/// random essentially m-ary function on the diagonal set.
FiniteFunction gen_quasi_m_ary(std::uint32_t k, std::uint32_t n, std::uint32_t b,
                               std::uint32_t m, std::uint64_t seed);

/// n >= 4: random nonconstant f* on the reachable subsets, f = f* o oddsupp on
/// the diagonal set, quasi-arity n.
FiniteFunction gen_oddsupp_determined(std::uint32_t k, std::uint32_t n,
                                      std::uint32_t b, std::uint64_t seed);

/// Ternary f with the given (i1,i2,i3) pattern and unary h. A random
/// nonconstant h is drawn when `h` is empty. For k >= 3 the all-distinct
/// tuples are randomized until every slot is essential.
FiniteFunction gen_ternary_pattern(std::uint32_t k, std::uint32_t b,
                                   std::array<std::uint8_t, 3> bits,
                                   std::optional<std::vector<Value>> h,
                                   std::uint64_t seed);

/// Operation with f(a) = a_t on the diagonal set; essential in every slot
/// whenever there are all-distinct tuples to randomize.
FiniteFunction gen_semiprojection(std::uint32_t k, std::uint32_t n, std::size_t t,
                                  std::uint64_t seed);

// ---------------------------------------------------------------------------
// Enumeration

/// Table number `index` of the b^(k^n) tables, entry 0 most significant.
FiniteFunction function_at(std::uint32_t k, std::uint32_t n, std::uint32_t b,
                           std::uint64_t index);

/// b^(k^n), saturating at UINT64_MAX.
std::uint64_t function_count(std::uint32_t k, std::uint32_t n, std::uint32_t b);

struct Filter {
  enum class Kind { gap, qa, ess, full };
  Kind kind = Kind::full;
  std::size_t value = 0;

  /// Accepts `gap=<g>`, `qa=<m>`, `ess=<e>` and `full`.
  static Filter parse(std::string_view text);
  bool accepts(const FiniteFunction& f) const;
  std::string render() const;
};

/// Every table of the given shape passing all filters, in table order.
class Enumerator {
 public:
  Enumerator(std::uint32_t k, std::uint32_t n, std::uint32_t b,
             std::vector<Filter> filters, unsigned jobs = 1,
             std::uint64_t budget = default_budget());

  std::optional<FiniteFunction> next();
  std::uint64_t total() const noexcept { return total_; }

 private:
  void refill();

  std::uint32_t k_, n_, b_;
  std::vector<Filter> filters_;
  unsigned jobs_;
  std::uint64_t total_;
  std::uint64_t cursor_ = 0;
  std::vector<FiniteFunction> buffer_;
  std::size_t buffer_pos_ = 0;
};

// ---------------------------------------------------------------------------
// Theorem verification

enum class TheoremId {
  t3_5i, t3_5ii, swier, l3_4, p4_2, t4_1, t4_3, t4_4,
  t5_1, l5_2, t6_1, t6_3, t6_4ii, t6_4iii,
};

const char* to_string(TheoremId id) noexcept;
TheoremId parse_theorem_id(std::string_view text);
const std::vector<TheoremId>& all_theorems();

enum class CheckOutcome { pass, fail, not_applicable };

/// One instance of a statement. Not-applicable when the hypothesis fails.
CheckOutcome check_theorem(TheoremId id, const FiniteFunction& f,
                           std::uint64_t budget = default_budget());

/// Throws invalid-argument when (k, n, b) cannot satisfy the hypothesis, and
/// oracle-infeasible when a needed oracle is over budget.
void validate_theorem_shape(TheoremId id, std::uint32_t k, std::uint32_t n,
                            std::uint32_t b, std::uint64_t budget);

enum class SweepMode { exhaustive, sampled };

struct SweepSpec {
  TheoremId theorem = TheoremId::t4_1;
  std::uint32_t k = 2, n = 2, b = 2;
  SweepMode mode = SweepMode::sampled;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  /// Constructed functions per generator, sampled mode only.
  std::uint64_t witnesses = 200;
  std::vector<Filter> filters;
  unsigned jobs = 1;
  std::uint64_t budget = default_budget();
};

struct VerificationReport {
  std::string theorem;
  std::uint64_t checked = 0;
  std::uint64_t seed = 0;
  /// Sorted by function order.
  std::vector<FiniteFunction> failures;
  std::chrono::nanoseconds elapsed{0};
};

using Predicate = std::function<CheckOutcome(const FiniteFunction&)>;

/// A generator of constructed witnesses, seeded per task.
struct WitnessGenerator {
  std::string name;
  std::function<FiniteFunction(std::uint64_t seed)> make;
};

/// Constructed witnesses available for functions of shape (k, n, b).
std::vector<WitnessGenerator> witness_generators(std::uint32_t k, std::uint32_t n,
                                                 std::uint32_t b);

/// Functions examined by a sweep, in task order, before filtering. Task i's
/// function depends only on (spec, i).
std::uint64_t sweep_size(const SweepSpec& spec);

/// Runs `predicate` over the sweep's functions; `label` names it in the report.
VerificationReport run_sweep(const SweepSpec& spec, const Predicate& predicate,
                             std::string label);

VerificationReport verify(const SweepSpec& spec);

/// Header `theorem=<id> checked=<N> failures=<F> seed=<s>`, then one
/// single-line function per failure.
std::string render(const VerificationReport& report);

}  // namespace aritygap
