#include "aritygap/oddsupp.hpp"

#include <bit>

#include "aritygap/analysis.hpp"

namespace aritygap {

namespace {

void require_mask_domain(const FiniteFunction& f) {
  if (f.k() > 64) {
    throw Error(Errc::unsupported_domain, "oddsupp needs k <= 64");
  }
}

struct Fiber {
  std::size_t first;
  std::optional<std::size_t> differing;
};

template <class Indices>
OddsuppProfile profile_over(const FiniteFunction& f, const Indices& indices) {
  require_mask_domain(f);
  std::map<Subset, Fiber> fibers;
  Tuple t(f.n());
  for (const std::size_t x : indices) {
    f.codec().decode_into(x, t);
    const Subset s = oddsupp(t);
    auto [it, inserted] = fibers.try_emplace(s, Fiber{x, std::nullopt});
    if (!inserted && !it->second.differing && f[x] != f[it->second.first]) {
      it->second.differing = x;
    }
  }
  OddsuppProfile profile;
  const Fiber* worst = nullptr;
  for (const auto& [s, fiber] : fibers) {
    if (fiber.differing && (!worst || fiber.first < worst->first)) worst = &fiber;
  }
  if (worst) {
    profile.witness = std::make_pair(f.codec().decode(worst->first),
                                     f.codec().decode(*worst->differing));
    return profile;
  }
  profile.fibers_respected = true;
  for (const auto& [s, fiber] : fibers) profile.fstar.emplace(s, f[fiber.first]);
  for (const auto& [s, v] : profile.fstar) {
    if (v != profile.fstar.begin()->second) profile.nonconstant = true;
  }
  return profile;
}

class IndexRange {
 public:
  explicit IndexRange(std::size_t n) : n_(n) {}
  struct iterator {
    std::size_t i;
    std::size_t operator*() const { return i; }
    iterator& operator++() { ++i; return *this; }
    bool operator!=(const iterator& o) const { return i != o.i; }
  };
  iterator begin() const { return {0}; }
  iterator end() const { return {n_}; }

 private:
  std::size_t n_;
};

}  // namespace

Subset oddsupp(std::span<const Value> tuple) {
  Subset s = 0;
  for (const Value a : tuple) {
    if (a >= 64) throw Error(Errc::unsupported_domain, "oddsupp needs values < 64");
    s ^= Subset{1} << a;
  }
  return s;
}

std::string render_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (unsigned a = 0; a < 64; ++a) {
    if (s >> a & 1) {
      if (!first) out += ',';
      out += std::to_string(a);
      first = false;
    }
  }
  return out + "}";
}

OddsuppProfile determined_by_oddsupp(const FiniteFunction& f) {
  auto profile = profile_over(f, IndexRange(f.size()));
  profile.determined = profile.fibers_respected;
  return profile;
}

OddsuppProfile restriction_determined_by_oddsupp(const FiniteFunction& f) {
  if (f.n() < 2) {
    throw Error(Errc::invalid_argument, "restricted oddsupp test needs n >= 2");
  }
  const DiagonalRestriction restriction(f);
  auto profile = profile_over(f, restriction.indices());
  profile.determined = profile.fibers_respected && profile.nonconstant;
  return profile;
}

std::vector<Subset> reachable_subsets(std::uint32_t k, std::uint32_t n,
                                      bool restricted) {
  if (k > 20) throw Error(Errc::unsupported_domain, "subset listing needs k <= 20");
  if (restricted && n < 2) {
    throw Error(Errc::invalid_argument, "restricted subsets need n >= 2");
  }
  const std::uint32_t max_size = restricted ? n - 2 : n;
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << k); ++s) {
    const auto size = static_cast<std::uint32_t>(std::popcount(s));
    if (size % 2 == n % 2 && size <= max_size) out.push_back(s);
  }
  return out;
}

bool restriction_totally_symmetric(const FiniteFunction& f) {
  // Adjacent transpositions generate the symmetric group, and the diagonal
  // set is closed under permuting coordinates.
  const DiagonalRestriction restriction(f);
  const auto& codec = f.codec();
  Tuple t(f.n());
  for (const auto x : restriction.indices()) {
    codec.decode_into(x, t);
    for (std::size_t s = 0; s + 1 < f.n(); ++s) {
      std::swap(t[s], t[s + 1]);
      const bool same = f.eval(t) == f[x];
      std::swap(t[s], t[s + 1]);
      if (!same) return false;
    }
  }
  return true;
}

std::string render(const OddsuppProfile& profile) {
  std::string out = std::string("determined=") + (profile.determined ? "yes" : "no");
  if (profile.witness) {
    return out + " witness=" + render_tuple(profile.witness->first) + "/" +
           render_tuple(profile.witness->second);
  }
  out += std::string(" nonconstant=") + (profile.nonconstant ? "yes" : "no") + " fstar=";
  bool first = true;
  for (const auto& [s, v] : profile.fstar) {
    if (!first) out += ';';
    out += render_subset(s) + "->" + std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace aritygap
