#include <algorithm>
#include <numeric>

#include "aritygap/analysis.hpp"
#include "aritygap/gap.hpp"
#include "aritygap/oddsupp.hpp"
#include "aritygap/oracle.hpp"

namespace aritygap {

namespace {

constexpr int kMaxAttempts = 1000;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Value draw(Rng& rng, std::uint32_t bound) {
  return std::uniform_int_distribution<Value>(0, bound - 1)(rng);
}

[[noreturn]] void give_up(const std::string& what) {
  throw Error(Errc::invalid_argument,
              what + ": no function found after " + std::to_string(kMaxAttempts) +
                  " attempts");
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index) noexcept {
  return splitmix64(splitmix64(splitmix64(master) ^ stream) ^ index);
}

FiniteFunction random_function(std::uint32_t k, std::uint32_t n, std::uint32_t b,
                               Rng& rng) {
  TupleCodec codec(k, n);
  std::vector<Value> table(codec.size());
  for (auto& v : table) v = draw(rng, b);
  return FiniteFunction(k, n, b, std::move(table));
}

FiniteFunction gen_salomaa(std::uint32_t k) {
  if (k < 2) throw Error(Errc::invalid_argument, "Salomaa construction needs k >= 2");
  return FiniteFunction::tabulate(k, k, k, [](std::span<const Value> t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] != i) return Value{0};
    }
    return Value{1};
  });
}

FiniteFunction gen_quasi_m_ary(std::uint32_t k, std::uint32_t n, std::uint32_t b,
                               std::uint32_t m, std::uint64_t seed) {
  if (m > n) throw Error(Errc::invalid_argument, "quasi-arity m cannot exceed n");
  if (n == 1 && m != 1) {
    throw Error(Errc::invalid_argument, "a unary function depending on its slot has m = 1");
  }
  if (n == 2 && m == 2) {
    throw Error(Errc::invalid_argument, "binary functions have quasi-arity at most 1");
  }
  if (n > k && m < n) {
    throw Error(Errc::invalid_argument,
                "n > k leaves no tuples off the diagonal set, so quasi-arity equals "
                "essential arity; need m = n");
  }
  Rng rng(seed);
  const DiagonalRestriction restriction(FiniteFunction::constant(k, n, b, 0));
  std::vector<std::size_t> slots(n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<std::size_t> chosen(slots.begin(), slots.begin() + m);
    std::sort(chosen.begin(), chosen.end());

    // g is essentially m-ary on the chosen slots.
    std::optional<FiniteFunction> core;
    if (m > 0) {
      core = random_function(k, m, b, rng);
      if (essential_arity(*core) != m) continue;
    }
    const Value c = draw(rng, b);

    TupleCodec codec(k, n);
    std::vector<Value> table(codec.size());
    Tuple t(n), args(m);
    for (std::size_t x = 0; x < table.size(); ++x) {
      if (!restriction.contains(x)) {
        table[x] = draw(rng, b);
        continue;
      }
      if (m == 0) {
        table[x] = c;
        continue;
      }
      codec.decode_into(x, t);
      for (std::size_t r = 0; r < m; ++r) args[r] = t[chosen[r]];
      table[x] = core->eval(args);
    }
    FiniteFunction f(k, n, b, std::move(table));
    if (essential_arity(f) == n && quasi_arity(f) == m) return f;
  }
  give_up("gen_quasi_m_ary");
}

FiniteFunction gen_oddsupp_determined(std::uint32_t k, std::uint32_t n,
                                      std::uint32_t b, std::uint64_t seed) {
  if (n < 4) throw Error(Errc::invalid_argument, "oddsupp generator needs n >= 4");
  const auto subsets = reachable_subsets(k, n, true);
  if (subsets.size() < 2) {
    throw Error(Errc::invalid_argument, "fewer than two reachable subsets");
  }
  Rng rng(seed);
  const DiagonalRestriction restriction(FiniteFunction::constant(k, n, b, 0));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::map<Subset, Value> fstar;
    bool nonconstant = false;
    for (const auto s : subsets) {
      fstar[s] = draw(rng, b);
      if (fstar[s] != fstar.begin()->second) nonconstant = true;
    }
    if (!nonconstant) continue;

    TupleCodec codec(k, n);
    std::vector<Value> table(codec.size());
    Tuple t(n);
    for (std::size_t x = 0; x < table.size(); ++x) {
      if (restriction.contains(x)) {
        codec.decode_into(x, t);
        table[x] = fstar.at(oddsupp(t));
      } else {
        table[x] = draw(rng, b);
      }
    }
    FiniteFunction f(k, n, b, std::move(table));
    if (essential_arity(f) == n && quasi_arity(f) == n) return f;
  }
  give_up("gen_oddsupp_determined");
}

FiniteFunction gen_ternary_pattern(std::uint32_t k, std::uint32_t b,
                                   std::array<std::uint8_t, 3> bits,
                                   std::optional<std::vector<Value>> h,
                                   std::uint64_t seed) {
  Rng rng(seed);
  if (h) {
    if (h->size() != k) throw Error(Errc::invalid_argument, "h needs k values");
    if (std::any_of(h->begin(), h->end(), [b](Value v) { return v >= b; })) {
      throw Error(Errc::invalid_argument, "h value out of range");
    }
    if (std::all_of(h->begin(), h->end(), [&](Value v) { return v == h->front(); })) {
      throw Error(Errc::invalid_argument, "h must be nonconstant");
    }
  } else {
    std::vector<Value> drawn(k);
    do {
      for (auto& v : drawn) v = draw(rng, b);
    } while (std::all_of(drawn.begin(), drawn.end(),
                         [&](Value v) { return v == drawn.front(); }));
    h = std::move(drawn);
  }

  auto build = [&] {
    return FiniteFunction::tabulate(k, 3, b, [&](std::span<const Value> t) {
      if (t[0] == t[1] && t[1] == t[2]) return (*h)[t[0]];
      for (std::size_t p = 0; p < 3; ++p) {
        const Value x1 = t[p];
        const Value x0 = t[(p + 1) % 3];
        if (x0 == t[(p + 2) % 3] && x0 != x1) return (*h)[bits[p] ? x1 : x0];
      }
      return draw(rng, b);
    });
  };
  if (k == 2) return build();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto f = build();
    if (essential_arity(f) == 3) return f;
  }
  give_up("gen_ternary_pattern");
}

FiniteFunction gen_semiprojection(std::uint32_t k, std::uint32_t n, std::size_t t,
                                  std::uint64_t seed) {
  if (t >= n) throw Error(Errc::invalid_argument, "semiprojection slot out of range");
  Rng rng(seed);
  auto build = [&] {
    return FiniteFunction::tabulate(k, n, k, [&](std::span<const Value> a) {
      if (n == 1 || has_repeated_coordinate(a)) return a[t];
      return draw(rng, k);
    });
  };
  if (n == 1 || n > k) return build();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto f = build();
    if (essential_arity(f) == n) return f;
  }
  give_up("gen_semiprojection");
}

}  // namespace aritygap
