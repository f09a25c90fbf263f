#include "aritygap/minors.hpp"

#include <algorithm>
#include <string>

namespace aritygap {

MinorMap::MinorMap(std::uint32_t target_arity, std::vector<std::size_t> sigma)
    : target_arity_(target_arity), sigma_(std::move(sigma)) {
  if (target_arity_ < 1) {
    throw Error(Errc::invalid_argument, "target arity must be >= 1");
  }
  if (sigma_.empty()) throw Error(Errc::invalid_argument, "empty substitution");
  for (const auto s : sigma_) {
    if (s >= target_arity_) {
      throw Error(Errc::invalid_argument,
                  "substitution entry " + std::to_string(s + 1) +
                      " outside target slots 1.." + std::to_string(target_arity_));
    }
  }
}

VariablePartition::VariablePartition(std::uint32_t n,
                                     std::vector<std::vector<std::size_t>> blocks)
    : n_(n), blocks_(std::move(blocks)), representative_(n, n) {
  for (auto& block : blocks_) {
    if (block.empty()) throw Error(Errc::invalid_argument, "empty partition block");
    std::sort(block.begin(), block.end());
    for (const auto slot : block) {
      if (slot >= n) throw Error(Errc::invalid_argument, "partition slot out of range");
      if (representative_[slot] != n) {
        throw Error(Errc::invalid_argument, "partition blocks are not disjoint");
      }
      representative_[slot] = block.front();
    }
  }
  if (std::find(representative_.begin(), representative_.end(), n) !=
      representative_.end()) {
    throw Error(Errc::invalid_argument, "partition does not cover every slot");
  }
  std::sort(blocks_.begin(), blocks_.end());
}

VariablePartition VariablePartition::discrete(std::uint32_t n) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back({i});
  return VariablePartition(n, std::move(blocks));
}

FiniteFunction simple_minor(const FiniteFunction& g, const MinorMap& sigma) {
  if (sigma.source_arity() != g.n()) {
    throw Error(Errc::invalid_argument,
                "substitution has " + std::to_string(sigma.source_arity()) +
                    " source slots, function has arity " + std::to_string(g.n()));
  }
  const auto& codec = g.codec();
  std::vector<std::size_t> weight(sigma.target_arity(), 0);
  for (std::size_t i = 0; i < sigma.source_arity(); ++i) {
    weight[sigma[i]] += codec.stride(i);
  }
  return FiniteFunction::tabulate(
      g.k(), sigma.target_arity(), g.b(), [&](std::span<const Value> t) {
        std::size_t index = 0;
        for (std::size_t s = 0; s < t.size(); ++s) index += t[s] * weight[s];
        return g[index];
      });
}

FiniteFunction identification_minor(const FiniteFunction& f, std::size_t i,
                                    std::size_t j) {
  if (i >= f.n() || j >= f.n() || i == j) {
    throw Error(Errc::invalid_argument,
                "identification needs distinct slots in 1.." + std::to_string(f.n()));
  }
  std::vector<std::size_t> sigma(f.n());
  for (std::size_t s = 0; s < f.n(); ++s) sigma[s] = s;
  sigma[i] = j;
  return simple_minor(f, MinorMap(f.n(), std::move(sigma)));
}

FiniteFunction partition_minor(const FiniteFunction& f,
                               const VariablePartition& delta) {
  if (delta.n() != f.n()) {
    throw Error(Errc::invalid_argument, "partition arity differs from function arity");
  }
  std::vector<std::size_t> sigma(f.n());
  for (std::size_t s = 0; s < f.n(); ++s) sigma[s] = delta.representative(s);
  return simple_minor(f, MinorMap(f.n(), std::move(sigma)));
}

FiniteFunction diagonal(const FiniteFunction& f) {
  return simple_minor(f, MinorMap(1, std::vector<std::size_t>(f.n(), 0)));
}

}  // namespace aritygap
