#include <doctest.h>

#include "aritygap/analysis.hpp"
#include "aritygap/minors.hpp"
#include "aritygap/oracle.hpp"
#include "support/brute.hpp"

using namespace aritygap;

TEST_CASE("essential slots of small examples") {
  CHECK(essential_slots(brute::and2()).slots == std::vector<std::size_t>{0, 1});
  CHECK(essential_slots(FiniteFunction::constant(3, 3, 2, 1)).size() == 0);
  const auto padded = simple_minor(brute::xor2(), MinorMap(3, {0, 1}));
  CHECK(essential_slots(padded).slots == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(is_essential(padded, 2));
  CHECK(essential_slots_on_diagonal(brute::salomaa3()).size() == 0);
  CHECK(essential_slots_on_diagonal(brute::x1_with_deviation()).slots ==
        std::vector<std::size_t>{0});
}

TEST_CASE("witnesses are first in slot and index order") {
  const auto w = essential_slots(brute::and2()).witnesses;
  REQUIRE(w.size() == 2);
  CHECK(w[0].slot == 0);
  CHECK(w[0].first == Tuple{0, 1});
  CHECK(w[0].second == Tuple{1, 1});
  CHECK(w[1].first == Tuple{1, 0});
  CHECK(w[1].second == Tuple{1, 1});
}

TEST_CASE("essential slots match the naive definition") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t k = 2 + trial % 3, n = 1 + trial % 4, b = 2 + trial % 2;
    auto f = random_function(k, n, b, rng);
    // Sparse changes make inessential slots common.
    if (trial % 2) {
      f = simple_minor(random_function(k, std::max(1u, n - 1), b, rng),
                       MinorMap(n, [&] {
                         std::vector<std::size_t> s(std::max(1u, n - 1));
                         for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
                         return s;
                       }()));
    }
    const auto slots = essential_slots(f);
    for (std::size_t s = 0; s < n; ++s) {
      CHECK(slots.contains(s) == brute::essential(f, s));
    }
    for (const auto& w : slots.witnesses) {
      CHECK(f.eval(w.first) != f.eval(w.second));
    }
    const auto diag = essential_slots_on_diagonal(f);
    CHECK(diag.size() == brute::ess(f, true));
    for (const auto& w : diag.witnesses) {
      CHECK((n == 1 || has_repeated_coordinate(w.first)));
      CHECK((n == 1 || has_repeated_coordinate(w.second)));
    }
    CHECK(essential_arity(f) == oracle_essential_arity(f));
  }
}

TEST_CASE("Boolean ternary functions: diagonal set is everything") {
  for (std::uint64_t i = 0; i < 256; ++i) {
    const auto f = function_at(2, 3, 2, i);
    CHECK(essential_slots_on_diagonal(f).slots == essential_slots(f).slots);
  }
}

TEST_CASE("diagonal set membership") {
  const DiagonalRestriction r(brute::salomaa3());
  CHECK(r.size() == 21);
  CHECK_FALSE(r.contains(Tuple{0, 1, 2}));
  CHECK(r.contains(Tuple{0, 1, 0}));
  const DiagonalRestriction unary(FiniteFunction::constant(3, 1, 2, 0));
  CHECK(unary.size() == 3);
}

TEST_CASE("support extension") {
  const auto s = support_extension(brute::salomaa3());
  CHECK(s.nullary);
  CHECK(s.h == FiniteFunction::constant(3, 1, 3, 0));

  const auto d = support_extension(brute::x1_with_deviation());
  CHECK_FALSE(d.nullary);
  CHECK(d.slots == std::vector<std::size_t>{0});
  CHECK(d.h == brute::from_table(3, 1, 3, {0, 1, 2}));

  const auto m = support_extension(brute::maj3());
  CHECK(m.h == brute::maj3());

  CHECK_THROWS_AS(support_extension(brute::xor2()), Error);
}

TEST_CASE("support extension agrees on the diagonal set") {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = trial % 2 ? 3 : 4;
    const auto f = random_function(3, n, 3, rng);
    const auto ext = support_extension(f);
    const auto g = ext.padded(n);
    const DiagonalRestriction r(f);
    for (const auto x : r.indices()) CHECK(g[x] == f[x]);
    CHECK(essential_arity(g) == ext.slots.size());
    CHECK(ext.slots.size() == brute::ess(f, true));
  }
}
