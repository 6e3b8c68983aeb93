#pragma once

#include <cstddef>
#include <vector>

#include "ordkit/carrier.hpp"
#include "ordkit/element_set.hpp"
#include "ordkit/limits.hpp"
#include "ordkit/partition.hpp"
#include "ordkit/relation.hpp"

namespace ordkit {

/// A finite topological space stored by minimal open neighbourhoods.
///
/// Every finite topology is Alexandrov, so the map x -> U(x) (the
/// intersection of all open sets containing x) determines the open family:
/// a set is open iff it is the union of the U(x) of its members. The map is
/// valid iff x is in U(x) and y in U(x) implies U(y) is a subset of U(x).
class FiniteTopology {
 public:
  /// Validates an open family: closure under pairwise union and
  /// intersection (the offending pair is reported) and membership of the
  /// empty set and the whole carrier.
  static FiniteTopology from_open_sets(CarrierPtr carrier, const std::vector<ElementSet>& opens);
  static FiniteTopology from_min_neighborhoods(CarrierPtr carrier, std::vector<ElementSet> nbhds);
  static FiniteTopology discrete(CarrierPtr carrier);
  static FiniteTopology indiscrete(CarrierPtr carrier);

  const CarrierPtr& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return nbhd_.size(); }
  const ElementSet& min_neighborhood(std::size_t x) const { return nbhd_[x]; }
  const std::vector<ElementSet>& min_neighborhoods() const noexcept { return nbhd_; }
  ElementSet all() const { return full_set(size()); }

  bool is_open(const ElementSet& s) const;
  bool is_closed(const ElementSet& s) const;
  /// Smallest closed superset: {x : U(x) meets s}.
  ElementSet closure(const ElementSet& s) const;
  /// Largest open subset.
  ElementSet interior(const ElementSet& s) const;

  /// The full open family, sorted by bit pattern. Requires size() <= 20.
  std::vector<ElementSet> open_sets() const;

  bool operator==(const FiniteTopology& other) const;

 private:
  FiniteTopology(CarrierPtr carrier, std::vector<ElementSet> nbhds);

  CarrierPtr carrier_;
  std::vector<ElementSet> nbhd_;
};

/// Components as blocks of a partition, numbered by least member.
struct ComponentPartition {
  Partition partition;

  std::size_t count() const noexcept { return partition.block_count(); }
  const ElementSet& block(std::size_t i) const { return partition.block(i); }
};

/// Components via the adjacency rule: x ~ y when y is in U(x) or x in U(y).
ComponentPartition components(const FiniteTopology& top);
/// The empty space and singletons count as connected.
bool is_connected(const FiniteTopology& top);
bool is_k_connected(const FiniteTopology& top, std::size_t k);
bool is_locally_connected(const FiniteTopology& top);
bool is_hausdorff(const FiniteTopology& top);

FiniteTopology product(const FiniteTopology& a, const FiniteTopology& b, std::size_t cap = kProductCap);
FiniteTopology subspace(const FiniteTopology& top, const ElementSet& s);
/// The square minus its diagonal, as a subspace of the product.
FiniteTopology punctured_square(const FiniteTopology& top, std::size_t cap = kProductCap);
/// Index of the pair (x, y) in product(a, b) or punctured_square carriers.
std::size_t product_index(std::size_t x, std::size_t y, std::size_t right_size);

struct QuotientSpace {
  FiniteTopology space;
  Partition classes;
};

/// Quotient by an equivalence relation (validated). Classes are numbered by
/// least member; class labels are "{a,b}".
QuotientSpace quotient(const FiniteTopology& top, const BinaryRelation& eq);
QuotientSpace quotient(const FiniteTopology& top, const Partition& classes);

/// Every topology on the carrier, in lexicographic order of the
/// neighbourhood map. Requires size() <= 5.
std::vector<FiniteTopology> all_topologies(CarrierPtr carrier);

}  // namespace ordkit
