#include "aritygap/classify.hpp"

#include <algorithm>
#include <bit>

#include "aritygap/gap.hpp"
#include "aritygap/minors.hpp"
#include "aritygap/oddsupp.hpp"

namespace aritygap {

const char* to_string(Rationale r) noexcept {
  switch (r) {
    case Rationale::quasi_nullary: return "QuasiNullary";
    case Rationale::quasi_low: return "QuasiLow";
    case Rationale::quasi_n_minus_2: return "QuasiNMinus2";
    case Rationale::oddsupp_determined: return "OddsuppDetermined";
    case Rationale::ternary_pattern: return "TernaryPattern";
    case Rationale::gap_one: return "GapOne";
  }
  return "unknown";
}

const char* to_string(BooleanFamily family) noexcept {
  switch (family) {
    case BooleanFamily::linear: return "linear";
    case BooleanFamily::x1x2_plus_x1: return "x1x2+x1";
    case BooleanFamily::majority: return "majority";
    case BooleanFamily::two_thirds_minority: return "2/3-minority";
  }
  return "unknown";
}

std::string TernaryPattern::render() const {
  std::string s;
  for (const auto bit : bits) s += static_cast<char>('0' + bit);
  return s;
}

std::string render(const Classification& c) {
  std::string out = "gap=" + std::to_string(c.gap) + " tag=" + to_string(c.tag);
  if (c.m) out += " m=" + std::to_string(*c.m);
  if (c.pattern) out += " pattern=" + c.pattern->render();
  if (c.family) {
    out += std::string(" family=") + to_string(c.family->family) +
           " c=" + std::to_string(c.family->c) + " perm=";
    for (std::size_t r = 0; r < c.family->perm.size(); ++r) {
      if (r) out += ',';
      out += std::to_string(c.family->perm[r] + 1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ANF

namespace {

void require_boolean(const FiniteFunction& f) {
  if (f.k() != 2 || f.b() != 2) {
    throw Error(Errc::unsupported_domain,
                "Boolean function needed (k = b = 2), got k=" + std::to_string(f.k()) +
                    ", b=" + std::to_string(f.b()));
  }
}

}  // namespace

AnfPolynomial anf(const FiniteFunction& f) {
  require_boolean(f);
  const std::uint32_t n = f.n();
  if (n > 63) throw Error(Errc::unsupported_domain, "ANF needs n <= 63");
  std::vector<Value> coeff(f.table().begin(), f.table().end());
  for (std::size_t bit = 1; bit < coeff.size(); bit <<= 1) {
    for (std::size_t x = 0; x < coeff.size(); ++x) {
      if (x & bit) coeff[x] ^= coeff[x ^ bit];
    }
  }
  AnfPolynomial poly;
  poly.n = n;
  poly.constant = coeff[0];
  for (std::size_t x = 1; x < coeff.size(); ++x) {
    if (!coeff[x]) continue;
    // Index bit (n-1-i) carries slot i.
    std::uint64_t mask = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (x >> (n - 1 - i) & 1) mask |= std::uint64_t{1} << i;
    }
    poly.monomials.push_back(mask);
  }
  std::sort(poly.monomials.begin(), poly.monomials.end(),
            [](std::uint64_t a, std::uint64_t b) {
              const int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  return poly;
}

Value AnfPolynomial::evaluate(std::span<const Value> tuple) const {
  if (tuple.size() != n) throw Error(Errc::invalid_argument, "tuple length differs from n");
  Value v = constant;
  for (const auto mono : monomials) {
    Value term = 1;
    for (std::uint32_t i = 0; i < n && term; ++i) {
      if (mono >> i & 1) term &= tuple[i];
    }
    v ^= term;
  }
  return v;
}

std::string AnfPolynomial::render() const {
  std::string out;
  for (const auto mono : monomials) {
    if (!out.empty()) out += '+';
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mono >> i & 1) out += "x" + std::to_string(i + 1);
    }
  }
  if (constant || out.empty()) {
    if (!out.empty()) out += '+';
    out += std::to_string(constant);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classifiers

std::optional<TernaryPattern> ternary_pattern(const FiniteFunction& f) {
  if (f.n() != 3) throw Error(Errc::invalid_argument, "ternary pattern needs n = 3");
  auto h = diagonal(f);
  if (h.is_constant()) return std::nullopt;
  TernaryPattern pattern{{}, h};
  Tuple t(3);
  for (std::size_t p = 0; p < 3; ++p) {
    // Slot p carries x1, the other two carry x0.
    bool fits[2] = {true, true};
    for (Value x0 = 0; x0 < f.k(); ++x0) {
      for (Value x1 = 0; x1 < f.k(); ++x1) {
        t = {x0, x0, x0};
        t[p] = x1;
        const Value v = f.eval(t);
        if (v != h[x0]) fits[0] = false;
        if (v != h[x1]) fits[1] = false;
      }
    }
    // Both cannot hold since h is nonconstant.
    if (fits[0]) {
      pattern.bits[p] = 0;
    } else if (fits[1]) {
      pattern.bits[p] = 1;
    } else {
      return std::nullopt;
    }
  }
  return pattern;
}

namespace {

Normalized normalize_for_gap(const FiniteFunction& f) {
  auto nz = normalize(f);
  if (nz.slots.size() < 2) {
    throw Error(Errc::gap_undefined,
                "arity gap needs at least two essential variables (ess=" +
                    std::to_string(nz.slots.size()) + ")");
  }
  return nz;
}

std::vector<std::size_t> map_slots(const std::vector<std::size_t>& local,
                                   const std::vector<std::size_t>& original) {
  std::vector<std::size_t> out;
  out.reserve(local.size());
  for (const auto s : local) out.push_back(original[s]);
  return out;
}

// Boolean classification of a function depending on all of its slots; family
// permutations use its own slot numbering.
Classification classify_essential_boolean(const FiniteFunction& g) {
  const std::uint32_t n = g.n();
  const auto poly = anf(g);
  Classification result;
  result.gap = 1;
  result.tag = Rationale::gap_one;

  std::vector<std::size_t> singletons;
  std::vector<std::uint64_t> pairs;
  bool other = false;
  for (const auto mono : poly.monomials) {
    switch (std::popcount(mono)) {
      case 1: singletons.push_back(static_cast<std::size_t>(std::countr_zero(mono))); break;
      case 2: pairs.push_back(mono); break;
      default: other = true;
    }
  }
  if (other) return result;

  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;

  if (pairs.empty() && singletons.size() == n) {
    result.gap = 2;
    result.family = FamilyMatch{BooleanFamily::linear, poly.constant, identity};
    if (n == 2) {
      result.tag = Rationale::quasi_n_minus_2;
      result.m = 0;
    } else if (n == 3) {
      result.tag = Rationale::ternary_pattern;
      result.pattern = TernaryPattern{{1, 1, 1}, diagonal(g)};
    } else {
      result.tag = Rationale::oddsupp_determined;
    }
    return result;
  }
  if (n == 2 && pairs.size() == 1 && singletons.size() == 1) {
    const std::size_t p = singletons.front();
    result.gap = 2;
    result.tag = Rationale::quasi_n_minus_2;
    result.m = 0;
    result.family = FamilyMatch{BooleanFamily::x1x2_plus_x1, poly.constant, {p, 1 - p}};
    return result;
  }
  if (n == 3 && pairs.size() == 3) {
    if (singletons.empty()) {
      result.gap = 2;
      result.tag = Rationale::ternary_pattern;
      result.pattern = TernaryPattern{{0, 0, 0}, diagonal(g)};
      result.family = FamilyMatch{BooleanFamily::majority, poly.constant, identity};
    } else if (singletons.size() == 2) {
      const std::size_t p = singletons[0], q = singletons[1], r = 3 - p - q;
      TernaryPattern pattern{{}, diagonal(g)};
      pattern.bits[p] = 1;
      pattern.bits[q] = 1;
      pattern.bits[r] = 0;
      result.gap = 2;
      result.tag = Rationale::ternary_pattern;
      result.pattern = std::move(pattern);
      result.family =
          FamilyMatch{BooleanFamily::two_thirds_minority, poly.constant, {p, q, r}};
    }
  }
  return result;
}

}  // namespace

Classification classify(const FiniteFunction& f) {
  const auto nz = normalize_for_gap(f);
  const auto& g = nz.function;
  const std::size_t n = g.n();
  const std::size_t qa = quasi_arity(g);

  Classification result;
  if (qa + 3 <= n) {
    result.gap = n - qa;
    result.tag = qa == 0 ? Rationale::quasi_nullary : Rationale::quasi_low;
    result.m = qa;
    return result;
  }
  result.gap = 1;
  result.tag = Rationale::gap_one;
  if (n == 3) {
    if (auto pattern = ternary_pattern(g)) {
      result.gap = 2;
      result.tag = Rationale::ternary_pattern;
      result.pattern = std::move(pattern);
    }
    return result;
  }
  if (qa + 2 == n) {
    result.gap = 2;
    result.tag = Rationale::quasi_n_minus_2;
    result.m = qa;
  } else if (qa == n && restriction_determined_by_oddsupp(g).determined) {
    result.gap = 2;
    result.tag = Rationale::oddsupp_determined;
  }
  return result;
}

Classification classify_boolean(const FiniteFunction& f) {
  require_boolean(f);
  const auto nz = normalize_for_gap(f);
  auto result = classify_essential_boolean(nz.function);
  if (result.family) result.family->perm = map_slots(result.family->perm, nz.slots);
  return result;
}

Classification classify_pseudo_boolean(const FiniteFunction& f) {
  if (f.k() != 2) {
    throw Error(Errc::unsupported_domain,
                "pseudo-Boolean function needed (k = 2), got k=" + std::to_string(f.k()));
  }
  const auto nz = normalize_for_gap(f);
  const auto& g = nz.function;

  if (g.range_size() == 2) {
    const Value low = g[0];
    Value high = low;
    std::vector<Value> labels(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) {
      labels[x] = g[x] == low ? 0 : 1;
      if (g[x] != low) high = g[x];
    }
    FiniteFunction h(2, g.n(), 2, std::move(labels));
    auto result = classify_essential_boolean(h);
    if (result.family) result.family->perm = map_slots(result.family->perm, nz.slots);
    result.decomposition = PseudoBooleanDecomposition{{low, high}, std::move(h)};
    return result;
  }

  Classification result;
  const Tuple zeros{0, 0}, ones{1, 1};
  if (g.n() == 2 && g.eval(zeros) == g.eval(ones)) {
    result.gap = 2;
    result.tag = Rationale::quasi_n_minus_2;
    result.m = 0;
  } else {
    result.gap = 1;
    result.tag = Rationale::gap_one;
  }
  return result;
}

}  // namespace aritygap
