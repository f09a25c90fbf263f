// Acceptance suite. `acceptance` runs every criterion, `acceptance N` runs
// one. Each prints a single PASS/FAIL line; the exit status is nonzero when
// any selected criterion fails or exceeds its time limit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "aritygap/analysis.hpp"
#include "aritygap/classify.hpp"
#include "aritygap/gap.hpp"
#include "aritygap/minors.hpp"
#include "aritygap/oddsupp.hpp"
#include "aritygap/oracle.hpp"

using namespace aritygap;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

constexpr std::uint64_t kSeed = 20240101;

// Gap, or nullopt when undefined (fewer than two essential slots).
template <class Fn>
std::optional<std::size_t> gap_or_undefined(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == Errc::gap_undefined) return std::nullopt;
    throw;
  }
}

std::optional<std::size_t> oracle_gap_or_undefined(const FiniteFunction& f) {
  if (oracle_essential_arity(f) < 2) return std::nullopt;
  return oracle_gap(f);
}

std::string count_line(std::uint64_t checked, std::uint64_t failures) {
  return "checked=" + std::to_string(checked) + " failures=" + std::to_string(failures);
}

// Evaluates a Boolean family polynomial with x_{r+1} read from slot perm[r].
Value family_value(const FamilyMatch& m, std::span<const Value> t) {
  auto x = [&](std::size_t r) { return t[m.perm[r]]; };
  Value v = m.c;
  switch (m.family) {
    case BooleanFamily::linear:
      for (std::size_t r = 0; r < m.perm.size(); ++r) v ^= x(r);
      break;
    case BooleanFamily::x1x2_plus_x1: v ^= (x(0) & x(1)) ^ x(0); break;
    case BooleanFamily::majority: v ^= (x(0) & x(1)) ^ (x(0) & x(2)) ^ (x(1) & x(2)); break;
    case BooleanFamily::two_thirds_minority:
      v ^= (x(0) & x(1)) ^ (x(0) & x(2)) ^ (x(1) & x(2)) ^ x(0) ^ x(1);
      break;
  }
  return v;
}

bool family_reproduces(const FiniteFunction& f, const FamilyMatch& m) {
  Tuple t(f.n(), 0);
  std::size_t x = 0;
  do {
    if (family_value(m, t) != f[x++]) return false;
  } while (next_tuple(t, f.k()));
  return true;
}

// ---------------------------------------------------------------------------

Outcome salomaa() {
  Outcome o;
  for (std::uint32_t k : {2u, 3u, 4u}) {
    const auto f = gen_salomaa(k);
    const auto g = arity_gap(f).gap;
    const auto og = oracle_gap(f);
    o.detail += "k=" + std::to_string(k) + ":gap=" + std::to_string(g) + " ";
    if (g != k || og != k) o.ok = false;
  }
  return o;
}

Outcome boolean_binary() {
  Outcome o;
  std::set<std::uint64_t> gap2, predicted, tagged;
  for (std::uint64_t i = 0; i < 16; ++i) {
    const auto f = function_at(2, 2, 2, i);
    if (oracle_essential_arity(f) != 2) continue;
    if (oracle_gap(f) == 2) gap2.insert(i);
    if (f.eval(Tuple{0, 0}) == f.eval(Tuple{1, 1})) predicted.insert(i);
    const auto c = classify_boolean(f);
    if (c.family) {
      tagged.insert(i);
      if (!family_reproduces(f, *c.family)) o.ok = false;
    }
  }
  o.ok = o.ok && gap2.size() == 6 && gap2 == predicted && gap2 == tagged;
  o.detail = "gap2=" + std::to_string(gap2.size()) +
             " diagonal-equal=" + std::to_string(predicted.size()) +
             " family-tagged=" + std::to_string(tagged.size());
  return o;
}

Outcome boolean_ternary() {
  Outcome o;
  std::map<std::string, int> families;
  int gap2 = 0;
  for (std::uint64_t i = 0; i < 256; ++i) {
    const auto f = function_at(2, 3, 2, i);
    if (oracle_essential_arity(f) != 3) continue;
    const bool is_gap2 = oracle_gap(f) == 2;
    gap2 += is_gap2 ? 1 : 0;
    const auto c = classify_boolean(f);
    if (c.family.has_value() != is_gap2) o.ok = false;
    if (c.family) {
      ++families[to_string(c.family->family)];
      if (!family_reproduces(f, *c.family)) o.ok = false;
    }
  }
  o.ok = o.ok && gap2 == 10 && families["linear"] == 2 && families["majority"] == 2 &&
         families["2/3-minority"] == 6 && families.size() == 3;
  o.detail = "gap2=" + std::to_string(gap2) + " linear=" + std::to_string(families["linear"]) +
             " majority=" + std::to_string(families["majority"]) +
             " 2/3-minority=" + std::to_string(families["2/3-minority"]);
  return o;
}

Outcome boolean_quaternary() {
  SweepSpec spec;
  spec.k = 2;
  spec.n = 4;
  spec.b = 2;
  spec.mode = SweepMode::exhaustive;
  const auto r = run_sweep(
      spec,
      [](const FiniteFunction& f) {
        const auto mine = gap_or_undefined([&] { return classify_boolean(f).gap; });
        return mine == oracle_gap_or_undefined(f) ? CheckOutcome::pass : CheckOutcome::fail;
      },
      "boolean-n4");
  return {r.checked == 65536 && r.failures.empty(),
          count_line(r.checked, r.failures.size())};
}

Outcome pseudo_boolean() {
  Outcome o;
  std::uint64_t checked = 0, failures = 0, defined = 0;
  for (std::uint32_t n : {2u, 3u}) {
    for (std::uint64_t i = 0; i < function_count(2, n, 3); ++i) {
      const auto f = function_at(2, n, 3, i);
      const auto mine = gap_or_undefined([&] { return classify_pseudo_boolean(f).gap; });
      const auto oracle = oracle_gap_or_undefined(f);
      ++checked;
      defined += oracle ? 1 : 0;
      if (mine != oracle) ++failures;
    }
  }
  o.ok = checked == 81 + 6561 && failures == 0;
  o.detail = count_line(checked, failures) + " gap-defined=" + std::to_string(defined);
  return o;
}

Outcome quasi_arity_oracle() {
  std::uint64_t checked = 0, failures = 0;
  for (std::uint64_t i = 0; i < function_count(3, 2, 2); ++i) {
    const auto f = function_at(3, 2, 2, i);
    ++checked;
    if (quasi_arity(f) != oracle_quasi_arity(f)) ++failures;
  }
  for (std::uint64_t s = 0; s < 500; ++s) {
    Rng rng(derive_seed(kSeed, 6, s));
    const auto f = random_function(3, 3, 2, rng);
    ++checked;
    if (quasi_arity(f) != oracle_quasi_arity(f)) ++failures;
  }
  return {checked == 1012 && failures == 0, count_line(checked, failures)};
}

Outcome generalized_lemma() {
  Outcome o;
  for (std::uint32_t n : {4u, 5u}) {
    std::uint64_t checked = 0, failures = 0, requested = 0, produced = 0;
    std::string reason;
    for (std::uint64_t s = 0; s < 1000; ++s) {
      Rng rng(derive_seed(kSeed, 7 * 10 + n, s));
      const auto outcome = check_theorem(TheoremId::t4_4, random_function(3, n, 2, rng));
      if (outcome == CheckOutcome::not_applicable) continue;
      ++checked;
      if (outcome == CheckOutcome::fail) ++failures;
    }
    for (std::uint32_t m = 0; m + 3 <= n; ++m) {
      for (std::uint64_t s = 0; s < 200; ++s) {
        ++requested;
        try {
          const auto f = gen_quasi_m_ary(3, n, 2, m, derive_seed(kSeed, 100 * n + m, s));
          ++produced;
          ++checked;
          if (check_theorem(TheoremId::t4_4, f) != CheckOutcome::pass) ++failures;
        } catch (const Error& e) {
          if (reason.empty()) reason = e.what();
        }
      }
    }
    o.detail += "n=" + std::to_string(n) + ": " + count_line(checked, failures) +
                " witnesses=" + std::to_string(produced) + "/" + std::to_string(requested) +
                "; ";
    if (failures != 0 || produced != requested) o.ok = false;
    if (produced != requested) o.detail += "witness generation: " + reason + "; ";
  }
  return o;
}

bool all_minors(const FiniteFunction& f, const std::function<bool(const FiniteFunction&)>& p) {
  for (std::size_t i = 0; i < f.n(); ++i) {
    for (std::size_t j = 0; j < f.n(); ++j) {
      if (i != j && !p(identification_minor(f, i, j))) return false;
    }
  }
  return true;
}

Outcome swierczkowski() {
  std::uint64_t checked = 0, failures = 0;
  auto expect = [&](bool ok) {
    ++checked;
    if (!ok) ++failures;
  };
  for (std::uint32_t k : {3u, 4u}) {
    const std::uint32_t n = 4;
    for (std::uint64_t s = 0; s < 20; ++s) {
      Rng rng(derive_seed(kSeed, 80 + k, s));
      // Quasi-nullary and quasi-unary constructions. For k = 3 < n every
      // tuple has a repeated coordinate, so these are the constants and the
      // functions h(x_t) themselves.
      FiniteFunction q0 = FiniteFunction::constant(k, n, 2, rng() % 2);
      FiniteFunction q1 = q0;
      if (k == 3) {
        std::vector<Value> h(k);
        do {
          for (auto& v : h) v = rng() % 2;
        } while (std::all_of(h.begin(), h.end(), [&](Value v) { return v == h[0]; }));
        const std::size_t t = rng() % n;
        q1 = FiniteFunction::tabulate(k, n, 2, [&](std::span<const Value> a) { return h[a[t]]; });
      } else {
        q0 = gen_quasi_m_ary(k, n, 2, 0, rng());
        q1 = gen_quasi_m_ary(k, n, 2, 1, rng());
      }
      expect(quasi_arity(q0) == 0);
      expect(all_minors(q0, [](const FiniteFunction& g) { return g.is_constant(); }));
      expect(quasi_arity(q1) == 1);
      const auto support = unique_unary_support(q1).candidates.front().support;
      expect(all_minors(q1, [&](const FiniteFunction& g) {
        return essential_arity(g) == 1 && diagonal(g) == diagonal(support);
      }));
      const std::size_t t = s % n;
      const auto semi = gen_semiprojection(k, n, t, rng());
      expect(semiprojection_slot(semi) == std::optional<std::size_t>(t));
      expect(all_minors(semi, [&](const FiniteFunction& g) {
        for (std::size_t p = 0; p < n; ++p) {
          if (g == FiniteFunction::projection(k, n, p)) return true;
        }
        return false;
      }));
    }
    // Converse: the biconditionals on sampled functions.
    for (std::uint64_t s = 0; s < 1000; ++s) {
      Rng rng(derive_seed(kSeed, 90 + k, s));
      const auto f = random_function(k, 4, k, rng);
      for (const auto id : {TheoremId::t3_5i, TheoremId::t3_5ii, TheoremId::swier}) {
        expect(check_theorem(id, f) == CheckOutcome::pass);
      }
    }
  }
  // Boolean minority: every identification minor is essentially unary, yet
  // the function is not quasi-unary (n = 3 is excluded) and has gap 2 by the
  // (1,1,1) pattern.
  const auto minority = FiniteFunction::tabulate(
      2, 3, 2, [](std::span<const Value> t) { return t[0] ^ t[1] ^ t[2]; });
  expect(all_minors(minority, [](const FiniteFunction& g) { return essential_arity(g) == 1; }));
  expect(quasi_arity(minority) == 3);
  const auto c = classify(minority);
  expect(c.tag == Rationale::ternary_pattern && c.pattern && c.pattern->render() == "111");
  expect(c.gap == 2 && oracle_gap(minority) == 2);
  return {failures == 0, count_line(checked, failures)};
}

Outcome total_symmetry() {
  std::uint64_t checked = 0, failures = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto f = gen_oddsupp_determined(3, 4, 2, derive_seed(kSeed, 9, s));
    bool ok = arity_gap(f).gap == 2 && oracle_gap(f) == 2 && restriction_totally_symmetric(f);
    for (std::size_t i = 0; i < 4 && ok; ++i) {
      for (std::size_t j = 0; j < 4 && ok; ++j) {
        if (i == j) continue;
        const auto g = identification_minor(f, i, j);
        for (std::size_t t = 0; t < 4; ++t) {
          if (is_essential(g, t) != (t != i && t != j)) ok = false;
        }
      }
    }
    ++checked;
    if (!ok) ++failures;
  }
  return {checked == 200 && failures == 0, count_line(checked, failures)};
}

Outcome range_bound() {
  std::uint64_t checked = 0, failures = 0, index = 0;
  while (checked < 500) {
    Rng rng(derive_seed(kSeed, 10, index++));
    const auto f = random_function(3, 4, 5, rng);
    if (f.range_size() < 5 || essential_arity(f) != 4) continue;
    ++checked;
    if (arity_gap(f).gap != 1 || oracle_gap(f) != 1) ++failures;
  }
  return {failures == 0, count_line(checked, failures) + " drawn=" + std::to_string(index)};
}

// Ternary operation on A: the constant-diagonal-free shapes (a,a,a) -> a,
// two-equal tuples by `bits` (1 = take the odd value out, 0 = the repeated
// value), all-distinct tuples random.
FiniteFunction ternary_operation(std::uint32_t k, std::array<int, 3> bits, Rng& rng) {
  return FiniteFunction::tabulate(k, 3, k, [&](std::span<const Value> t) -> Value {
    if (t[0] == t[1] && t[1] == t[2]) return t[0];
    for (std::size_t p = 0; p < 3; ++p) {
      const Value odd = t[p], rest = t[(p + 1) % 3];
      if (rest == t[(p + 2) % 3]) return bits[p] ? odd : rest;
    }
    return static_cast<Value>(rng() % k);
  });
}

Outcome ternary_taxonomy() {
  std::uint64_t checked = 0, failures = 0;
  struct Kind {
    const char* name;
    std::array<int, 3> bits;
  };
  const Kind kinds[] = {
      {"majority", {0, 0, 0}},      {"minority", {1, 1, 1}},
      {"semiprojection", {1, 0, 0}}, {"semiprojection", {0, 1, 0}},
      {"semiprojection", {0, 0, 1}}, {"2/3-minority", {1, 1, 0}},
      {"2/3-minority", {1, 0, 1}},  {"2/3-minority", {0, 1, 1}},
  };
  for (std::uint32_t k : {2u, 3u}) {
    for (const auto& kind : kinds) {
      for (std::uint64_t s = 0; s < (k == 2 ? 1u : 25u); ++s) {
        Rng rng(derive_seed(kSeed, 11 * k, s));
        FiniteFunction f = ternary_operation(k, kind.bits, rng);
        if (std::string(kind.name) == "semiprojection") {
          const std::size_t t = kind.bits[0] ? 0 : kind.bits[1] ? 1 : 2;
          f = gen_semiprojection(k, 3, t, rng());
        }
        const auto pattern = ternary_pattern(f);
        bool ok = pattern.has_value() && pattern->bits[0] == kind.bits[0] &&
                  pattern->bits[1] == kind.bits[1] && pattern->bits[2] == kind.bits[2];
        const auto mine = gap_or_undefined([&] { return classify(f).gap; });
        ok = ok && mine == oracle_gap_or_undefined(f);
        ++checked;
        if (!ok) ++failures;
      }
    }
  }
  return {failures == 0, count_line(checked, failures)};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "salomaa-gap-k", 1, salomaa},
      {2, "boolean-n2-exhaustive", 1, boolean_binary},
      {3, "boolean-n3-exhaustive", 1, boolean_ternary},
      {4, "boolean-n4-exhaustive", 30, boolean_quaternary},
      {5, "pseudo-boolean-exhaustive", 30, pseudo_boolean},
      {6, "quasi-arity-oracle", 60, quasi_arity_oracle},
      {7, "generalized-swierczkowski-k3", 120, generalized_lemma},
      {8, "minor-conditions-and-minority", 60, swierczkowski},
      {9, "oddsupp-total-symmetry", 60, total_symmetry},
      {10, "range-bound", 60, range_bound},
      {11, "ternary-taxonomy", 60, ternary_taxonomy},
  };
  return list;
}

bool run_one(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < c.limit_seconds;
  const bool pass = o.ok && in_time;
  std::printf("criterion %2d %-30s %s  %s time=%.2fs limit=%.0fs%s\n", c.number, c.name,
              pass ? "PASS" : "FAIL", o.detail.c_str(), secs, c.limit_seconds,
              in_time ? "" : " (over time)");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  if (argc > 1) selected = std::atoi(argv[1]);
  bool all_pass = true;
  bool found = false;
  for (const auto& c : criteria()) {
    if (selected != 0 && c.number != selected) continue;
    found = true;
    all_pass = run_one(c) && all_pass;
  }
  if (!found) {
    std::fprintf(stderr, "no criterion %d\n", selected);
    return 2;
  }
  return all_pass ? 0 : 1;
}
