#include <doctest.h>

#include "aritygap/analysis.hpp"
#include "aritygap/gap.hpp"
#include "aritygap/minors.hpp"
#include "aritygap/oddsupp.hpp"
#include "aritygap/oracle.hpp"
#include "support/brute.hpp"

using namespace aritygap;

TEST_CASE("oracle examples") {
  CHECK(oracle_gap(brute::xor2()) == 2);
  CHECK(oracle_gap(brute::and2()) == 1);
  CHECK(oracle_gap(brute::maj3()) == 2);
  CHECK(oracle_quasi_arity(brute::x1_with_deviation()) == 1);
  CHECK(oracle_quasi_arity(brute::maj3()) == 3);
  const auto binary = FiniteFunction::tabulate(3, 2, 2, [](std::span<const Value> t) {
    return t[0] == t[1] ? Value{1} : static_cast<Value>(t[0] > t[1]);
  });
  CHECK(oracle_quasi_arity(binary) == 0);
  CHECK(support_count(3, 3, 2) == 64);
  CHECK(support_count(3, 2, 2) == 64);
  CHECK(support_count(2, 3, 2) == 1);
  Rng rng(1);
  CHECK_THROWS_AS(oracle_quasi_arity(random_function(4, 4, 2, rng), 1000), Error);
}

TEST_CASE("oracle essential arity") {
  CHECK(oracle_essential_arity(brute::and2()) == 2);
  CHECK(oracle_essential_arity(FiniteFunction::constant(3, 3, 2, 0)) == 0);
}

TEST_CASE("Salomaa construction") {
  CHECK(gen_salomaa(2) == brute::from_table(2, 2, 2, {0, 1, 0, 0}));
  CHECK(gen_salomaa(3) == brute::salomaa3());
  for (std::uint32_t k : {2u, 3u, 4u}) {
    CHECK(oracle_gap(gen_salomaa(k)) == k);
  }
}

TEST_CASE("quasi-m-ary generator") {
  const auto q0 = gen_quasi_m_ary(3, 3, 2, 0, 1);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) CHECK(identification_minor(q0, i, j).is_constant());
    }
  }
  const auto q1 = gen_quasi_m_ary(4, 3, 2, 1, 2);
  CHECK(essential_arity(q1) == 3);
  CHECK(essential_slots_on_diagonal(q1).size() == 1);
  const auto b0 = gen_quasi_m_ary(3, 2, 2, 0, 3);
  CHECK_FALSE(b0.is_constant());
  CHECK(diagonal(b0).is_constant());

  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t k = 3 + trial % 3, n = 2 + trial % 3;
    for (std::uint32_t m = 0; m <= n; ++m) {
      if ((n == 2 && m == 2) || (n > k && m < n)) {
        CHECK_THROWS_AS(gen_quasi_m_ary(k, n, 2, m, rng()), Error);
        continue;
      }
      const auto f = gen_quasi_m_ary(k, n, 2, m, rng());
      CHECK(essential_arity(f) == n);
      CHECK(oracle_essential_arity(f) == n);
      CHECK(quasi_arity(f) == m);
    }
  }
  CHECK_THROWS_AS(gen_quasi_m_ary(3, 4, 2, 1, 0), Error);
  CHECK_THROWS_AS(gen_quasi_m_ary(3, 3, 2, 4, 0), Error);
}

TEST_CASE("generators are deterministic in the seed") {
  CHECK(gen_quasi_m_ary(4, 4, 3, 1, 99) == gen_quasi_m_ary(4, 4, 3, 1, 99));
  CHECK(gen_oddsupp_determined(3, 4, 2, 5) == gen_oddsupp_determined(3, 4, 2, 5));
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 3));
}

TEST_CASE("oddsupp generator") {
  const auto f = gen_oddsupp_determined(3, 4, 2, 7);
  CHECK(arity_gap(f).gap == 2);
  CHECK(restriction_totally_symmetric(f));
  const auto boolean = gen_oddsupp_determined(2, 4, 2, 7);
  CHECK(determined_by_oddsupp(boolean).determined);
  CHECK_THROWS_AS(gen_oddsupp_determined(3, 3, 2, 0), Error);
}

TEST_CASE("ternary pattern and semiprojection generators") {
  const auto f = gen_ternary_pattern(3, 3, {0, 1, 1}, std::vector<Value>{0, 1, 2}, 4);
  CHECK(essential_arity(f) == 3);
  CHECK(oracle_gap(f) == 2);
  const auto s = gen_semiprojection(3, 3, 2, 4);
  CHECK(semiprojection_slot(s) == std::optional<std::size_t>(2));
  CHECK(essential_arity(s) == 3);
  CHECK_THROWS_AS(gen_ternary_pattern(3, 3, {0, 0, 0}, std::vector<Value>{1, 1, 1}, 0), Error);
}

TEST_CASE("function indexing") {
  CHECK(function_count(2, 2, 2) == 16);
  CHECK(function_count(2, 3, 3) == 6561);
  CHECK(function_count(4, 4, 4) == UINT64_MAX);
  CHECK(function_at(2, 2, 2, 1) == brute::from_table(2, 2, 2, {0, 0, 0, 1}));
  CHECK(function_at(2, 2, 2, 8) == brute::from_table(2, 2, 2, {1, 0, 0, 0}));
  CHECK_THROWS_AS(function_at(2, 2, 2, 16), Error);
}

TEST_CASE("filters") {
  CHECK(Filter::parse("gap=2").render() == "gap=2");
  CHECK(Filter::parse("qa=0").kind == Filter::Kind::qa);
  CHECK(Filter::parse("full").accepts(brute::and2()));
  CHECK_FALSE(Filter::parse("gap=2").accepts(FiniteFunction::constant(2, 2, 2, 0)));
  CHECK_THROWS_AS(Filter::parse("gap="), Error);
  CHECK_THROWS_AS(Filter::parse("size=2"), Error);
}

TEST_CASE("enumerator output is independent of job count") {
  auto collect = [](unsigned jobs) {
    Enumerator e(2, 3, 2, {Filter::parse("gap=2"), Filter::parse("full")}, jobs);
    std::vector<FiniteFunction> out;
    while (auto f = e.next()) out.push_back(*f);
    return out;
  };
  const auto one = collect(1);
  CHECK(one.size() == 10);
  CHECK(collect(3) == one);
  CHECK(std::is_sorted(one.begin(), one.end()));
  CHECK_THROWS_AS(Enumerator(3, 3, 3, {}, 1, 1000), Error);
}

TEST_CASE("theorem ids") {
  for (const auto id : all_theorems()) CHECK(parse_theorem_id(to_string(id)) == id);
  CHECK(all_theorems().size() == 14);
  CHECK_THROWS_AS(parse_theorem_id("T9.9"), Error);
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(validate_theorem_shape(TheoremId::swier, 3, 4, 2, 1000), Error);
  CHECK_THROWS_AS(validate_theorem_shape(TheoremId::t5_1, 3, 3, 2, 1000), Error);
  CHECK_THROWS_AS(validate_theorem_shape(TheoremId::t6_4iii, 3, 4, 2, 1000), Error);
  try {
    validate_theorem_shape(TheoremId::l3_4, 4, 4, 2, 1000);
    FAIL("expected oracle-infeasible");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::oracle_infeasible);
  }
}

TEST_CASE("exhaustive Boolean sweep counts") {
  SweepSpec spec;
  spec.theorem = TheoremId::t4_1;
  spec.k = 2;
  spec.n = 3;
  spec.b = 2;
  spec.mode = SweepMode::exhaustive;
  const auto r = verify(spec);
  CHECK(r.checked == 218);
  CHECK(r.failures.empty());

  spec.theorem = TheoremId::t5_1;
  spec.b = 3;
  const auto p = verify(spec);
  CHECK(p.failures.empty());
  CHECK(p.checked > 0);
  CHECK(p.checked < 6561);
}

TEST_CASE("sampled sweeps are deterministic across job counts") {
  SweepSpec spec;
  spec.theorem = TheoremId::t6_3;
  spec.k = 3;
  spec.n = 4;
  spec.b = 2;
  spec.samples = 200;
  spec.witnesses = 20;
  spec.seed = 13;
  const auto one = verify(spec);
  spec.jobs = 4;
  const auto four = verify(spec);
  CHECK(one.checked == four.checked);
  CHECK(render(one) == render(four));
  CHECK(render(one).rfind("theorem=T6.3 checked=", 0) == 0);
}

TEST_CASE("failures are reported sorted") {
  SweepSpec spec;
  spec.k = 2;
  spec.n = 2;
  spec.b = 2;
  spec.mode = SweepMode::exhaustive;
  spec.jobs = 2;
  const auto r = run_sweep(
      spec, [](const FiniteFunction& f) { return f[0] ? CheckOutcome::fail : CheckOutcome::pass; },
      "probe");
  CHECK(r.checked == 16);
  CHECK(r.failures.size() == 8);
  CHECK(std::is_sorted(r.failures.begin(), r.failures.end()));
  CHECK(render(r).find("\n2 2 2;1 0 0 0") != std::string::npos);
}

TEST_CASE("every statement holds on small sweeps") {
  struct Case {
    TheoremId id;
    std::uint32_t k, n, b;
  };
  const Case cases[] = {
      {TheoremId::t3_5i, 3, 4, 2},   {TheoremId::t3_5ii, 3, 4, 3},  {TheoremId::t3_5ii, 3, 2, 2},
      {TheoremId::swier, 3, 4, 3},   {TheoremId::swier, 4, 4, 4},   {TheoremId::l3_4, 3, 3, 2},
      {TheoremId::p4_2, 4, 4, 2},    {TheoremId::p4_2, 3, 3, 3},    {TheoremId::t4_1, 3, 4, 2},
      {TheoremId::t4_3, 4, 4, 2},    {TheoremId::t4_4, 4, 4, 2},    {TheoremId::t4_4, 5, 5, 2},
      {TheoremId::t5_1, 2, 4, 3},    {TheoremId::l5_2, 3, 4, 5},    {TheoremId::t6_1, 3, 4, 2},
      {TheoremId::t6_3, 4, 4, 2},    {TheoremId::t6_4ii, 3, 2, 2},  {TheoremId::t6_4ii, 3, 5, 2},
      {TheoremId::t6_4iii, 3, 3, 3}, {TheoremId::t6_4iii, 4, 3, 2},
  };
  for (const auto& c : cases) {
    SweepSpec spec;
    spec.theorem = c.id;
    spec.k = c.k;
    spec.n = c.n;
    spec.b = c.b;
    spec.samples = 150;
    spec.witnesses = 15;
    spec.seed = 101;
    const auto r = verify(spec);
    INFO(render(r));
    CHECK(r.failures.empty());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("generalized lemma with witnesses for every low quasi-arity") {
  // k = 5 leaves room for all-distinct tuples, so quasi-m-ary witnesses that
  // depend on every slot exist for each m <= n - 3.
  for (std::uint32_t n : {4u, 5u}) {
    for (std::uint32_t m = 0; m + 3 <= n; ++m) {
      for (std::uint64_t s = 0; s < 10; ++s) {
        const auto f = gen_quasi_m_ary(5, n, 2, m, derive_seed(7, m, s));
        CHECK(check_theorem(TheoremId::t4_4, f) == CheckOutcome::pass);
        CHECK(arity_gap(f).gap == n - m);
      }
    }
  }
}
