#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordkit/carrier.hpp"
#include "ordkit/limits.hpp"
#include "ordkit/relation.hpp"

namespace ordkit {

/// Z_{m1} x ... x Z_{mk}. Elements are residue tuples in lexicographic
/// order; element labels join residues with commas ("0,1").
class FiniteAbelianGroup {
 public:
  static FiniteAbelianGroup build(std::vector<std::size_t> moduli, std::size_t cap = kGroupOrderCap);

  std::size_t order() const noexcept { return tuples_.size(); }
  const std::vector<std::size_t>& moduli() const noexcept { return moduli_; }
  const CarrierPtr& carrier() const noexcept { return carrier_; }
  const std::vector<std::size_t>& tuple(std::size_t x) const { return tuples_[x]; }

  std::size_t add(std::size_t x, std::size_t y) const { return add_[x * order() + y]; }
  std::size_t neg(std::size_t x) const { return neg_[x]; }
  std::size_t sub(std::size_t x, std::size_t y) const { return add(x, neg(y)); }
  std::size_t zero() const noexcept { return 0; }

 private:
  std::vector<std::size_t> moduli_;
  std::vector<std::vector<std::size_t>> tuples_;
  std::vector<std::size_t> add_;
  std::vector<std::size_t> neg_;
  CarrierPtr carrier_;
};

struct AdditivityResult {
  bool holds = true;
  /// (x, y, z) for additivity, (x1, x2, y1, y2) for strong additivity.
  std::vector<std::size_t> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// x >= y implies x+z >= y+z.
AdditivityResult is_additive(const BinaryRelation& rel, const FiniteAbelianGroup& g);
/// x1 >= y1 and x2 >= y2 imply x1+x2 >= y1+y2.
AdditivityResult is_strongly_additive(const BinaryRelation& rel, const FiniteAbelianGroup& g);

/// x >= y iff x - y is in `diffs`.
BinaryRelation difference_set_relation(const FiniteAbelianGroup& g, const std::vector<std::size_t>& diffs);

}  // namespace ordkit
