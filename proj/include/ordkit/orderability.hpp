#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ordkit/continuity.hpp"
#include "ordkit/limits.hpp"
#include "ordkit/partition.hpp"
#include "ordkit/relation.hpp"
#include "ordkit/topology.hpp"

namespace ordkit {

struct ComponentVerdict {
  std::size_t component = 0;
  std::size_t size = 0;
  /// Singleton components are exempt; `punctured_disconnected` is unset.
  bool exempt = false;
  std::optional<bool> punctured_disconnected;
};

/// The punctured-square criterion evaluated per component.
struct CriterionReport {
  std::vector<ComponentVerdict> components;
  std::size_t component_count = 0;
  /// Conjunction over non-singleton components.
  bool satisfied = true;
};

CriterionReport eilenberg_criterion(const FiniteTopology& top, std::size_t cap = kProductCap);

enum class OrderKind { order, weak_order };

struct OrderWitness {
  BinaryRelation relation;
  OrderKind kind = OrderKind::order;
  PropertyReport properties;
  ContinuityResult continuity;
  /// Indifference classes for weak orders.
  std::optional<Partition> equivalence;

  /// Re-derives the certificate on `top` and checks the kind's axioms.
  bool certifies(const FiniteTopology& top) const;
};

OrderWitness make_witness(BinaryRelation rel, OrderKind kind, const FiniteTopology& top,
                          std::optional<Partition> equivalence = std::nullopt);

/// Reflexive closure of the linear order listing `ranking` from top to bottom.
BinaryRelation linear_order(CarrierPtr carrier, std::span<const std::size_t> ranking);

/// First continuous linear order in lexicographic permutation order, where a
/// permutation lists the elements from top to bottom.
std::optional<OrderWitness> find_order(const FiniteTopology& top, std::size_t cap = kOrderSearchCap);

/// Glues per-component orders: within a component use its order, across
/// components follow `ranking` (component ids from top to bottom). Each
/// witness must be an order on subspace(top, component) and pass its
/// certificate.
BinaryRelation glue_component_orders(const FiniteTopology& top, std::span<const OrderWitness> orders,
                                     std::span<const std::size_t> ranking);

struct InducedQuotient {
  BinaryRelation equivalence;
  Partition classes;
  /// ([x],[y]) holds iff x' >= y' for all x' in [x] and y' in [y].
  BinaryRelation quotient;
};

/// Throws InputError when the symmetric part is not an equivalence (the
/// message carries the failing axiom and witness).
InducedQuotient induced_quotient_relation(const BinaryRelation& rel);

/// Pullback of a relation on the classes of `eq` to the carrier of `top`.
BinaryRelation lift_quotient_relation(const FiniteTopology& top, const Partition& eq, const BinaryRelation& qrel);

/// Searches equivalences in restricted-growth order for a quotient that
/// admits a continuous order with at least two classes; returns its lift.
std::optional<OrderWitness> find_weak_order(const FiniteTopology& top, std::size_t cap = kWeakOrderSearchCap);

/// Ground truth: the first relation in row-major matrix order that is
/// non-trivial, complete, transitive and continuous.
std::optional<OrderWitness> brute_force_weak_order(const FiniteTopology& top, std::size_t cap = kBruteForceCap);

/// Index of the first non-trivial complete transitive relation (row-major
/// order) at or after `from`, without any continuity test. n*n <= 16.
std::optional<std::uint64_t> next_weak_order_candidate(std::size_t n, std::uint64_t from);

}  // namespace ordkit
