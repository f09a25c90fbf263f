#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aritygap/core.hpp"

namespace aritygap {

/// Simple variable substitution sigma: source slots -> target slots.
/// Slots are 0-based; sigma[i] is the target slot feeding source slot i.
class MinorMap {
 public:
  MinorMap(std::uint32_t target_arity, std::vector<std::size_t> sigma);

  std::size_t source_arity() const noexcept { return sigma_.size(); }
  std::uint32_t target_arity() const noexcept { return target_arity_; }
  std::size_t operator[](std::size_t i) const { return sigma_[i]; }
  const std::vector<std::size_t>& sigma() const noexcept { return sigma_; }

 private:
  std::uint32_t target_arity_;
  std::vector<std::size_t> sigma_;
};

/// A partition of the slots {0..n-1} into nonempty disjoint blocks.
class VariablePartition {
 public:
  VariablePartition(std::uint32_t n, std::vector<std::vector<std::size_t>> blocks);

  static VariablePartition discrete(std::uint32_t n);

  std::uint32_t n() const noexcept { return n_; }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept {
    return blocks_;
  }
  /// Smallest slot in the block containing `slot`.
  std::size_t representative(std::size_t slot) const { return representative_[slot]; }

 private:
  std::uint32_t n_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> representative_;
};

/// result(t) = g(t[sigma(0)], ..., t[sigma(m-1)]).
FiniteFunction simple_minor(const FiniteFunction& g, const MinorMap& sigma);

/// f with slot i fed from slot j; arity is preserved.
FiniteFunction identification_minor(const FiniteFunction& f, std::size_t i,
                                    std::size_t j);

/// Identifies the slots of each block, feeding all of them from the block's
/// smallest slot.
FiniteFunction partition_minor(const FiniteFunction& f,
                               const VariablePartition& delta);

/// a -> f(a, ..., a).
FiniteFunction diagonal(const FiniteFunction& f);

}  // namespace aritygap
