#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordkit/carrier.hpp"
#include "ordkit/element_set.hpp"
#include "ordkit/limits.hpp"

namespace ordkit {

/// Extensional binary relation on a finite carrier: an n x n incidence
/// matrix where (i, j) set means element_i is weakly above element_j.
class BinaryRelation {
 public:
  explicit BinaryRelation(CarrierPtr carrier);

  static BinaryRelation empty(CarrierPtr carrier) { return BinaryRelation(std::move(carrier)); }
  static BinaryRelation identity(CarrierPtr carrier);
  static BinaryRelation full(CarrierPtr carrier);
  static BinaryRelation from_pairs(CarrierPtr carrier,
                                   std::span<const std::pair<std::string, std::string>> pairs);

  /// Relation number `index` in row-major lexicographic matrix order: the
  /// matrix read row by row is a binary numeral with entry (0,0) as its most
  /// significant digit. Requires n*n <= 64.
  static BinaryRelation from_index(CarrierPtr carrier, std::uint64_t index);
  std::uint64_t index() const;

  std::size_t size() const noexcept { return rows_.size(); }
  const CarrierPtr& carrier() const noexcept { return carrier_; }

  bool holds(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool value = true) { rows_[i].set(j, value); }

  /// {j : i >= j}
  const ElementSet& row(std::size_t i) const { return rows_[i]; }
  /// {i : i >= j}
  ElementSet column(std::size_t j) const;

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool operator==(const BinaryRelation& other) const;

 private:
  CarrierPtr carrier_;
  std::vector<ElementSet> rows_;
};

BinaryRelation asymmetric_part(const BinaryRelation& rel);
BinaryRelation symmetric_part(const BinaryRelation& rel);
BinaryRelation inverse(const BinaryRelation& rel);
BinaryRelation reflexive_closure(const BinaryRelation& rel);

/// Upper section {y : y >= x}.
ElementSet upper_section(const BinaryRelation& rel, std::size_t x);
ElementSet upper_section(const BinaryRelation& rel, std::string_view x);
/// Lower section {y : x >= y}.
ElementSet lower_section(const BinaryRelation& rel, std::size_t x);
ElementSet lower_section(const BinaryRelation& rel, std::string_view x);
/// Strict counterparts taken from the asymmetric part.
ElementSet strict_upper_section(const BinaryRelation& rel, std::size_t x);
ElementSet strict_lower_section(const BinaryRelation& rel, std::size_t x);

enum class Property { reflexive, complete, non_trivial, transitive, semi_transitive, anti_symmetric };

inline constexpr std::array<Property, 6> kAllProperties = {
    Property::reflexive,  Property::complete,        Property::non_trivial,
    Property::transitive, Property::semi_transitive, Property::anti_symmetric};

std::string_view property_name(Property p);
/// Accepts the names produced by property_name plus underscore spellings.
Property parse_property(std::string_view name);

struct PropertyVerdict {
  bool holds = true;
  /// Lexicographically least violating tuple of element indices. Empty for
  /// a failed non-triviality check (its negation is universal).
  std::vector<std::size_t> witness;
};

struct PropertyReport {
  std::array<PropertyVerdict, 6> verdicts;

  const PropertyVerdict& operator[](Property p) const { return verdicts[static_cast<std::size_t>(p)]; }
  PropertyVerdict& operator[](Property p) { return verdicts[static_cast<std::size_t>(p)]; }
  bool all(std::initializer_list<Property> props) const;
};

PropertyReport check_properties(const BinaryRelation& rel, std::size_t cap = kPropertyCheckCap);

/// True iff `witness` violates the defining formula of `p` on `rel`.
bool witness_violates(const BinaryRelation& rel, Property p, std::span<const std::size_t> witness);

}  // namespace ordkit
