#include "ordkit/relation.hpp"

#include "ordkit/error.hpp"

namespace ordkit {

BinaryRelation::BinaryRelation(CarrierPtr carrier)
    : carrier_(std::move(carrier)), rows_(carrier_->size()) {}

BinaryRelation BinaryRelation::identity(CarrierPtr carrier) {
  BinaryRelation r(std::move(carrier));
  for (std::size_t i = 0; i < r.size(); ++i) r.set(i, i);
  return r;
}

BinaryRelation BinaryRelation::full(CarrierPtr carrier) {
  BinaryRelation r(std::move(carrier));
  const auto all = full_set(r.size());
  for (auto& row : r.rows_) row = all;
  return r;
}

BinaryRelation BinaryRelation::from_pairs(CarrierPtr carrier,
                                          std::span<const std::pair<std::string, std::string>> pairs) {
  BinaryRelation r(std::move(carrier));
  for (const auto& [x, y] : pairs) r.set(r.carrier_->index_of(x), r.carrier_->index_of(y));
  return r;
}

BinaryRelation BinaryRelation::from_index(CarrierPtr carrier, std::uint64_t index) {
  BinaryRelation r(std::move(carrier));
  const std::size_t n = r.size();
  const std::size_t cells = n * n;
  if (cells > 64) throw CapExceeded("relation index encoding needs n*n <= 64");
  if (cells < 64 && (index >> cells) != 0) throw InputError("relation index out of range");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((index >> (cells - 1 - (i * n + j))) & 1U) r.set(i, j);
  return r;
}

std::uint64_t BinaryRelation::index() const {
  const std::size_t n = size();
  if (n * n > 64) throw CapExceeded("relation index encoding needs n*n <= 64");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) idx = (idx << 1) | (holds(i, j) ? 1U : 0U);
  return idx;
}

ElementSet BinaryRelation::column(std::size_t j) const {
  ElementSet c;
  for (std::size_t i = 0; i < size(); ++i)
    if (rows_[i].test(j)) c.set(i);
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> BinaryRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (holds(i, j)) out.emplace_back(i, j);
  return out;
}

bool BinaryRelation::operator==(const BinaryRelation& other) const {
  return same_carrier(carrier_, other.carrier_) && rows_ == other.rows_;
}

BinaryRelation asymmetric_part(const BinaryRelation& rel) {
  BinaryRelation out(rel.carrier());
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = 0; j < rel.size(); ++j)
      if (rel.holds(i, j) && !rel.holds(j, i)) out.set(i, j);
  return out;
}

BinaryRelation symmetric_part(const BinaryRelation& rel) {
  BinaryRelation out(rel.carrier());
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = 0; j < rel.size(); ++j)
      if (rel.holds(i, j) && rel.holds(j, i)) out.set(i, j);
  return out;
}

BinaryRelation inverse(const BinaryRelation& rel) {
  BinaryRelation out(rel.carrier());
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = 0; j < rel.size(); ++j)
      if (rel.holds(i, j)) out.set(j, i);
  return out;
}

BinaryRelation reflexive_closure(const BinaryRelation& rel) {
  BinaryRelation out = rel;
  for (std::size_t i = 0; i < rel.size(); ++i) out.set(i, i);
  return out;
}

ElementSet upper_section(const BinaryRelation& rel, std::size_t x) { return rel.column(x); }
ElementSet lower_section(const BinaryRelation& rel, std::size_t x) { return rel.row(x); }

ElementSet upper_section(const BinaryRelation& rel, std::string_view x) {
  return upper_section(rel, rel.carrier()->index_of(x));
}

ElementSet lower_section(const BinaryRelation& rel, std::string_view x) {
  return lower_section(rel, rel.carrier()->index_of(x));
}

ElementSet strict_upper_section(const BinaryRelation& rel, std::size_t x) {
  return rel.column(x) & ~rel.row(x);
}

ElementSet strict_lower_section(const BinaryRelation& rel, std::size_t x) {
  return rel.row(x) & ~rel.column(x);
}

std::string_view property_name(Property p) {
  switch (p) {
    case Property::reflexive: return "reflexive";
    case Property::complete: return "complete";
    case Property::non_trivial: return "non-trivial";
    case Property::transitive: return "transitive";
    case Property::semi_transitive: return "semi-transitive";
    case Property::anti_symmetric: return "anti-symmetric";
  }
  return "?";
}

Property parse_property(std::string_view name) {
  for (auto p : kAllProperties) {
    std::string canon(property_name(p));
    std::string underscored = canon;
    for (auto& c : underscored)
      if (c == '-') c = '_';
    if (name == canon || name == underscored) return p;
  }
  throw InputError("unknown property '" + std::string(name) + "'");
}

bool PropertyReport::all(std::initializer_list<Property> props) const {
  for (auto p : props)
    if (!(*this)[p].holds) return false;
  return true;
}

namespace {

bool strictly(const BinaryRelation& r, std::size_t x, std::size_t y) {
  return r.holds(x, y) && !r.holds(y, x);
}

bool indifferent(const BinaryRelation& r, std::size_t x, std::size_t y) {
  return r.holds(x, y) && r.holds(y, x);
}

bool semi_transitivity_fails(const BinaryRelation& r, std::size_t x, std::size_t y, std::size_t z) {
  const bool first = strictly(r, x, y) && indifferent(r, y, z);
  const bool second = indifferent(r, x, y) && strictly(r, y, z);
  return (first || second) && !strictly(r, x, z);
}

}  // namespace

PropertyReport check_properties(const BinaryRelation& rel, std::size_t cap) {
  const std::size_t n = rel.size();
  if (n > cap)
    throw CapExceeded("property check on " + std::to_string(n) + " elements exceeds cap " +
                      std::to_string(cap));
  PropertyReport report;

  auto fail = [&](Property p, std::vector<std::size_t> w) {
    auto& v = report[p];
    if (v.holds) {
      v.holds = false;
      v.witness = std::move(w);
    }
  };

  for (std::size_t x = 0; x < n; ++x)
    if (!rel.holds(x, x)) fail(Property::reflexive, {x});

  bool non_trivial = false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!rel.holds(x, y) && !rel.holds(y, x)) fail(Property::complete, {x, y});
      if (x != y && indifferent(rel, x, y)) fail(Property::anti_symmetric, {x, y});
      if (strictly(rel, x, y)) non_trivial = true;
    }
  if (!non_trivial) fail(Property::non_trivial, {});

  for (std::size_t x = 0; x < n && (report[Property::transitive].holds ||
                                    report[Property::semi_transitive].holds);
       ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (rel.holds(x, y) && rel.holds(y, z) && !rel.holds(x, z)) fail(Property::transitive, {x, y, z});
        if (semi_transitivity_fails(rel, x, y, z)) fail(Property::semi_transitive, {x, y, z});
      }
  return report;
}

bool witness_violates(const BinaryRelation& rel, Property p, std::span<const std::size_t> w) {
  const std::size_t n = rel.size();
  for (auto e : w)
    if (e >= n) return false;
  switch (p) {
    case Property::reflexive:
      return w.size() == 1 && !rel.holds(w[0], w[0]);
    case Property::complete:
      return w.size() == 2 && !rel.holds(w[0], w[1]) && !rel.holds(w[1], w[0]);
    case Property::non_trivial:
      return w.empty() && asymmetric_part(rel).pairs().empty();
    case Property::transitive:
      return w.size() == 3 && rel.holds(w[0], w[1]) && rel.holds(w[1], w[2]) && !rel.holds(w[0], w[2]);
    case Property::semi_transitive:
      return w.size() == 3 && semi_transitivity_fails(rel, w[0], w[1], w[2]);
    case Property::anti_symmetric:
      return w.size() == 2 && w[0] != w[1] && indifferent(rel, w[0], w[1]);
  }
  return false;
}

}  // namespace ordkit
