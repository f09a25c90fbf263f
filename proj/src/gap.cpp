#include "aritygap/gap.hpp"

#include <limits>

#include "aritygap/analysis.hpp"
#include "aritygap/minors.hpp"

namespace aritygap {

std::size_t quasi_arity(const FiniteFunction& f) {
  switch (f.n()) {
    case 1:
      return essential_arity(f);
    case 2:
      return diagonal(f).is_constant() ? 0 : 1;
    default:
      return essential_slots_on_diagonal(f).size();
  }
}

std::optional<std::size_t> semiprojection_slot(const FiniteFunction& f) {
  if (f.b() != f.k()) {
    throw Error(Errc::unsupported_codomain,
                "semiprojection test needs b = k (got k=" + std::to_string(f.k()) +
                    ", b=" + std::to_string(f.b()) + ")");
  }
  const DiagonalRestriction restriction(f);
  const auto& codec = f.codec();
  for (std::size_t t = 0; t < f.n(); ++t) {
    bool ok = true;
    for (const auto x : restriction.indices()) {
      if (f[x] != codec.digit(x, t)) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  return std::nullopt;
}

Normalized normalize(const FiniteFunction& f) {
  const auto essential = essential_slots(f);
  if (essential.size() == 0) {
    return Normalized{FiniteFunction::constant(f.k(), 1, f.b(), f[0]), {}};
  }
  // Inessential source slots may read any target slot; use slot 0.
  std::vector<std::size_t> sigma(f.n(), 0);
  for (std::size_t r = 0; r < essential.size(); ++r) sigma[essential.slots[r]] = r;
  auto g = simple_minor(
      f, MinorMap(static_cast<std::uint32_t>(essential.size()), std::move(sigma)));
  return Normalized{std::move(g), essential.slots};
}

SupportCandidates unique_unary_support(const FiniteFunction& f) {
  const std::size_t qa = quasi_arity(f);
  if (qa >= 2) {
    throw Error(Errc::no_such_support,
                "quasi-arity " + std::to_string(qa) + " admits no support of arity <= 1");
  }
  const auto delta = diagonal(f);
  auto through = [&](std::size_t t) {
    return FiniteFunction::tabulate(f.k(), f.n(), f.b(),
                                    [&](std::span<const Value> a) { return delta[a[t]]; });
  };
  SupportCandidates result;
  if (qa == 0) {
    result.candidates.push_back({FiniteFunction::constant(f.k(), f.n(), f.b(), delta[0]),
                                 std::nullopt});
  } else if (f.n() == 1) {
    result.candidates.push_back({f, 0});
  } else if (f.n() == 2) {
    result.candidates.push_back({through(0), 0});
    result.candidates.push_back({through(1), 1});
  } else {
    const auto slot = essential_slots_on_diagonal(f).slots.front();
    result.candidates.push_back({through(slot), slot});
  }
  return result;
}

GapReport arity_gap(const FiniteFunction& f) {
  const auto normalized = normalize(f);
  const auto& g = normalized.function;
  const std::size_t ess = normalized.slots.size();
  if (ess < 2) {
    throw Error(Errc::gap_undefined,
                "arity gap needs at least two essential variables (ess=" +
                    std::to_string(ess) + ")");
  }
  GapReport report;
  report.ess = ess;
  report.qa = quasi_arity(g);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < ess; ++i) {
    for (std::size_t j = i + 1; j < ess; ++j) {
      // f_{i<-j} and f_{j<-i} are equivalent, so i < j covers every pair.
      const std::size_t drop = ess - essential_arity(identification_minor(g, i, j));
      if (drop < best) {
        best = drop;
        report.pair = {normalized.slots[i], normalized.slots[j]};
      }
    }
  }
  report.gap = best;
  report.essl = ess - best;
  if (report.qa <= 1) {
    for (auto& c : unique_unary_support(g).candidates) {
      if (c.slot) c.slot = normalized.slots[*c.slot];
      report.supports.push_back(std::move(c));
    }
  }
  return report;
}

std::string render(const GapReport& report) {
  return "ess=" + std::to_string(report.ess) + " qa=" + std::to_string(report.qa) +
         " essl=" + std::to_string(report.essl) + " gap=" + std::to_string(report.gap) +
         " pair=" + std::to_string(report.pair.first + 1) + "," +
         std::to_string(report.pair.second + 1);
}

}  // namespace aritygap
