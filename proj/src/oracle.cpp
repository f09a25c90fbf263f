#include "aritygap/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>

namespace aritygap {

std::uint64_t default_budget() {
  static const std::uint64_t budget = [] {
    std::uint64_t value = 10'000'000;
    if (const char* env = std::getenv("ARITYGAP_BUDGET")) {
      std::uint64_t parsed = 0;
      const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), parsed);
      if (ec == std::errc() && *ptr == '\0') value = parsed;
    }
    return value;
  }();
  return budget;
}

namespace {

bool slot_is_essential(const FiniteFunction& f, std::size_t slot) {
  Tuple a(f.n(), 0), other;
  do {
    other = a;
    for (Value v = 0; v < f.k(); ++v) {
      if (v == a[slot]) continue;
      other[slot] = v;
      if (f.eval(a) != f.eval(other)) return true;
    }
  } while (next_tuple(a, f.k()));
  return false;
}

// g(t) = f(t[sigma(0)], ..., t[sigma(n-1)]) for p-ary t.
FiniteFunction substitute(const FiniteFunction& f, const std::vector<std::size_t>& sigma,
                          std::uint32_t p) {
  Tuple source(f.n());
  return FiniteFunction::tabulate(f.k(), p, f.b(), [&](std::span<const Value> t) {
    for (std::size_t i = 0; i < sigma.size(); ++i) source[i] = t[sigma[i]];
    return f.eval(source);
  });
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

}  // namespace

std::size_t oracle_essential_arity(const FiniteFunction& f) {
  std::size_t count = 0;
  for (std::size_t slot = 0; slot < f.n(); ++slot) {
    if (slot_is_essential(f, slot)) ++count;
  }
  return count;
}

std::size_t oracle_gap(const FiniteFunction& f) {
  const std::size_t ess = oracle_essential_arity(f);
  if (ess < 2) {
    throw Error(Errc::gap_undefined,
                "arity gap needs at least two essential variables (ess=" +
                    std::to_string(ess) + ")");
  }
  const std::uint32_t n = f.n();
  // g < f iff g <= f and ess g < ess f. Target arities n-1 down to 1 come
  // first since they usually hold the maximum; ess f - 1 ends the search.
  std::vector<std::uint32_t> arities;
  for (std::uint32_t p = n - 1; p >= 1; --p) arities.push_back(p);
  arities.push_back(n);

  std::size_t best = 0;
  for (const std::uint32_t p : arities) {
    std::vector<std::size_t> sigma(n, 0);
    bool more = true;
    while (more) {
      const std::size_t e = oracle_essential_arity(substitute(f, sigma, p));
      if (e < ess && e > best) {
        best = e;
        if (best + 1 == ess) return 1;
      }
      more = false;
      for (std::size_t i = n; i-- > 0;) {
        if (++sigma[i] < p) {
          more = true;
          break;
        }
        sigma[i] = 0;
      }
    }
  }
  return ess - best;
}

std::uint64_t support_count(std::uint32_t k, std::uint32_t n, std::uint32_t b) {
  if (n == 1 || n > k) return 1;
  std::uint64_t distinct = 1;
  for (std::uint32_t i = 0; i < n; ++i) distinct *= (k - i);
  return saturating_pow(b, distinct);
}

std::size_t oracle_quasi_arity(const FiniteFunction& f, std::uint64_t budget) {
  const std::uint64_t supports = support_count(f.k(), f.n(), f.b());
  if (supports > budget) {
    throw Error(Errc::oracle_infeasible,
                "quasi-arity oracle needs " + std::to_string(supports) +
                    " supports, budget is " + std::to_string(budget));
  }
  // Tuples with pairwise distinct coordinates; none when n = 1 (where the
  // diagonal set is all of A) or n > k.
  std::vector<std::size_t> free;
  if (f.n() >= 2) {
    Tuple t(f.n(), 0);
    std::size_t index = 0;
    do {
      bool distinct = true;
      for (std::size_t i = 0; i < t.size() && distinct; ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
          if (t[i] == t[j]) {
            distinct = false;
            break;
          }
        }
      }
      if (distinct) free.push_back(index);
      ++index;
    } while (next_tuple(t, f.k()));
  }

  std::vector<Value> table(f.table().begin(), f.table().end());
  for (const auto x : free) table[x] = 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  while (true) {
    const FiniteFunction support(f.k(), f.n(), f.b(), table);
    best = std::min(best, oracle_essential_arity(support));
    if (best == 0) break;
    std::size_t i = free.size();
    while (i-- > 0) {
      if (++table[free[i]] < f.b()) break;
      table[free[i]] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return best;
}

}  // namespace aritygap
