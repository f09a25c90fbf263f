#include "aritygap/analysis.hpp"

#include <algorithm>
#include <optional>

namespace aritygap {

namespace {

// First witness for `slot` in tuple-index order. The first tuple having any
// disagreeing partner has only later partners, so scanning upward suffices.
template <class Member>
std::optional<EssentialityWitness> find_witness(const FiniteFunction& f,
                                                std::size_t slot,
                                                Member&& member) {
  const auto& codec = f.codec();
  const std::size_t stride = codec.stride(slot);
  const Value k = f.k();
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!member(x)) continue;
    const Value d = codec.digit(x, slot);
    for (Value v = d + 1; v < k; ++v) {
      const std::size_t y = x + (v - d) * stride;
      if (member(y) && f[x] != f[y]) {
        return EssentialityWitness{slot, codec.decode(x), codec.decode(y)};
      }
    }
  }
  return std::nullopt;
}

template <class Member>
EssentialSlots scan(const FiniteFunction& f, Member&& member) {
  EssentialSlots result;
  for (std::size_t slot = 0; slot < f.n(); ++slot) {
    if (auto w = find_witness(f, slot, member)) {
      result.slots.push_back(slot);
      result.witnesses.push_back(std::move(*w));
    }
  }
  return result;
}

}  // namespace

bool EssentialSlots::contains(std::size_t slot) const {
  return std::find(slots.begin(), slots.end(), slot) != slots.end();
}

EssentialSlots essential_slots(const FiniteFunction& f) {
  return scan(f, [](std::size_t) { return true; });
}

bool is_essential(const FiniteFunction& f, std::size_t slot) {
  // Essential iff some tuple disagrees with its copy having 0 at `slot`.
  const auto& codec = f.codec();
  const std::size_t stride = codec.stride(slot);
  for (std::size_t x = 0; x < f.size(); ++x) {
    const Value d = codec.digit(x, slot);
    if (d != 0 && f[x] != f[x - d * stride]) return true;
  }
  return false;
}

std::size_t essential_arity(const FiniteFunction& f) {
  std::size_t count = 0;
  for (std::size_t slot = 0; slot < f.n(); ++slot) {
    if (is_essential(f, slot)) ++count;
  }
  return count;
}

DiagonalRestriction::DiagonalRestriction(const FiniteFunction& f)
    : f_(f), member_(f.size(), 0) {
  Tuple t(f.n(), 0);
  std::size_t index = 0;
  do {
    if (f.n() == 1 || has_repeated_coordinate(t)) {
      member_[index] = 1;
      indices_.push_back(index);
    }
    ++index;
  } while (next_tuple(t, f.k()));
}

bool DiagonalRestriction::contains(std::span<const Value> tuple) const {
  return contains(f_.codec().encode(tuple));
}

EssentialSlots essential_slots_on_diagonal(const FiniteFunction& f) {
  const DiagonalRestriction restriction(f);
  return scan(f, [&](std::size_t x) { return restriction.contains(x); });
}

FiniteFunction SupportExtension::padded(std::uint32_t n) const {
  return FiniteFunction::tabulate(h.k(), n, h.b(), [&](std::span<const Value> t) {
    if (nullary) return h[0];
    Tuple args(slots.size());
    for (std::size_t r = 0; r < slots.size(); ++r) args[r] = t[slots[r]];
    return h.eval(args);
  });
}

SupportExtension support_extension(const FiniteFunction& f) {
  if (f.n() == 2) {
    throw Error(Errc::unsupported_arity,
                "support extension is not defined for binary functions");
  }
  const auto essential = essential_slots_on_diagonal(f);
  const std::size_t m = essential.size();
  if (m == 0) {
    // Constant on the diagonal set; (0,...,0) is always a member.
    return SupportExtension{FiniteFunction::constant(f.k(), 1, f.b(), f[0]), {}, true};
  }
  // h(a_1..a_m) = f with the essential slots fed a_1..a_m and every other
  // slot fed a_m.
  auto h = FiniteFunction::tabulate(f.k(), static_cast<std::uint32_t>(m), f.b(),
                                    [&](std::span<const Value> a) {
                                      Tuple t(f.n(), a[m - 1]);
                                      for (std::size_t r = 0; r < m; ++r) {
                                        t[essential.slots[r]] = a[r];
                                      }
                                      return f.eval(t);
                                    });
  return SupportExtension{std::move(h), essential.slots, false};
}

}  // namespace aritygap
