#pragma once

// Essential variables of total functions and of their restrictions to the
// diagonal set (tuples with a repeated coordinate).

#include <cstddef>
#include <vector>

#include "aritygap/core.hpp"

namespace aritygap {

/// Two tuples differing only at `slot` on which the function disagrees.
struct EssentialityWitness {
  std::size_t slot;
  Tuple first;
  Tuple second;
};

struct EssentialSlots {
  std::vector<std::size_t> slots;
  std::vector<EssentialityWitness> witnesses;  // parallel to `slots`

  std::size_t size() const noexcept { return slots.size(); }
  bool contains(std::size_t slot) const;
};

/// Witnesses are the first pair in (slot, tuple index) order.
EssentialSlots essential_slots(const FiniteFunction& f);

bool is_essential(const FiniteFunction& f, std::size_t slot);
std::size_t essential_arity(const FiniteFunction& f);

/// The set of tuples with a repeated coordinate. For n = 1 this is all of A;
/// for n > k it is all of A^n.
class DiagonalRestriction {
 public:
  explicit DiagonalRestriction(const FiniteFunction& f);

  const FiniteFunction& function() const noexcept { return f_; }
  bool contains(std::size_t index) const { return member_[index] != 0; }
  bool contains(std::span<const Value> tuple) const;
  /// Member indices in increasing order.
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }

 private:
  FiniteFunction f_;
  std::vector<char> member_;
  std::vector<std::size_t> indices_;
};

/// Essential slots of f restricted to the diagonal set; both tuples of every
/// witness lie in that set.
EssentialSlots essential_slots_on_diagonal(const FiniteFunction& f);

/// A total function h on the diagonal-essential slots that agrees with f on
/// the diagonal set. `h` is unary and constant with `nullary` set when no slot
/// is essential there.
struct SupportExtension {
  FiniteFunction h;
  std::vector<std::size_t> slots;
  bool nullary;

  /// h padded back to arity n, reading its arguments from `slots`.
  FiniteFunction padded(std::uint32_t n) const;
};

/// Undefined for n = 2 (throws unsupported-arity).
SupportExtension support_extension(const FiniteFunction& f);

}  // namespace aritygap
