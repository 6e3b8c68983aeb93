#include "ordkit/topology.hpp"

#include <algorithm>
#include <string>

#include "ordkit/error.hpp"

namespace ordkit {

namespace {

std::string describe(const Carrier& c, const ElementSet& s) { return format_set(c, s); }

void validate_neighborhoods(const Carrier& c, const std::vector<ElementSet>& nbhd) {
  const std::size_t n = c.size();
  if (nbhd.size() != n) throw InputError("neighbourhood map size does not match carrier");
  const auto all = full_set(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!is_subset(nbhd[x], all))
      throw InputError("neighbourhood of " + c.label(x) + " leaves the carrier");
    if (!nbhd[x].test(x))
      throw InputError("min_nbhd(" + c.label(x) + ") = " + describe(c, nbhd[x]) + " does not contain " + c.label(x));
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (nbhd[x].test(y) && !is_subset(nbhd[y], nbhd[x]))
        throw InputError(c.label(y) + " is in min_nbhd(" + c.label(x) + ") but min_nbhd(" + c.label(y) + ") = " +
                         describe(c, nbhd[y]) + " is not a subset of " + describe(c, nbhd[x]));
}

}  // namespace

FiniteTopology::FiniteTopology(CarrierPtr carrier, std::vector<ElementSet> nbhds)
    : carrier_(std::move(carrier)), nbhd_(std::move(nbhds)) {}

FiniteTopology FiniteTopology::from_min_neighborhoods(CarrierPtr carrier, std::vector<ElementSet> nbhds) {
  validate_neighborhoods(*carrier, nbhds);
  return FiniteTopology(std::move(carrier), std::move(nbhds));
}

FiniteTopology FiniteTopology::from_open_sets(CarrierPtr carrier, const std::vector<ElementSet>& opens) {
  const auto& c = *carrier;
  const std::size_t n = c.size();
  const auto all = full_set(n);
  for (const auto& u : opens)
    if (!is_subset(u, all)) throw InputError("open set " + describe(c, u & all) + " leaves the carrier");

  auto contains = [&](const ElementSet& s) {
    return std::find(opens.begin(), opens.end(), s) != opens.end();
  };
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const auto u = opens[i] | opens[j];
      if (!contains(u))
        throw InputError("open family not closed under union: " + describe(c, opens[i]) + " ∪ " +
                         describe(c, opens[j]) + " = " + describe(c, u) + " is missing");
      const auto v = opens[i] & opens[j];
      if (!contains(v))
        throw InputError("open family not closed under intersection: " + describe(c, opens[i]) + " ∩ " +
                         describe(c, opens[j]) + " = " + describe(c, v) + " is missing");
    }
  if (!contains(ElementSet{})) throw InputError("open family is missing the empty set");
  if (!contains(all)) throw InputError("open family is missing the whole carrier");

  std::vector<ElementSet> nbhd(n, all);
  for (const auto& u : opens)
    for (std::size_t x = 0; x < n; ++x)
      if (u.test(x)) nbhd[x] &= u;
  return FiniteTopology(std::move(carrier), std::move(nbhd));
}

FiniteTopology FiniteTopology::discrete(CarrierPtr carrier) {
  std::vector<ElementSet> nbhd(carrier->size());
  for (std::size_t x = 0; x < nbhd.size(); ++x) nbhd[x].set(x);
  return FiniteTopology(std::move(carrier), std::move(nbhd));
}

FiniteTopology FiniteTopology::indiscrete(CarrierPtr carrier) {
  std::vector<ElementSet> nbhd(carrier->size(), full_set(carrier->size()));
  return FiniteTopology(std::move(carrier), std::move(nbhd));
}

bool FiniteTopology::is_open(const ElementSet& s) const {
  for (std::size_t x = 0; x < size(); ++x)
    if (s.test(x) && !is_subset(nbhd_[x], s)) return false;
  return true;
}

bool FiniteTopology::is_closed(const ElementSet& s) const { return is_open(all() & ~s); }

ElementSet FiniteTopology::closure(const ElementSet& s) const {
  ElementSet out;
  for (std::size_t x = 0; x < size(); ++x)
    if ((nbhd_[x] & s).any()) out.set(x);
  return out;
}

ElementSet FiniteTopology::interior(const ElementSet& s) const {
  ElementSet out;
  for (std::size_t x = 0; x < size(); ++x)
    if (is_subset(nbhd_[x], s)) out.set(x);
  return out;
}

std::vector<ElementSet> FiniteTopology::open_sets() const {
  const std::size_t n = size();
  if (n > 20) throw CapExceeded("open family enumeration needs at most 20 points");
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    ElementSet s(mask);
    if (is_open(s)) out.push_back(s);
  }
  return out;
}

bool FiniteTopology::operator==(const FiniteTopology& other) const {
  return same_carrier(carrier_, other.carrier_) && nbhd_ == other.nbhd_;
}

ComponentPartition components(const FiniteTopology& top) {
  const std::size_t n = top.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block(n, unset);
  std::size_t next = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (block[start] != unset) continue;
    std::vector<std::size_t> stack{start};
    block[start] = next;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < n; ++y) {
        if (block[y] != unset) continue;
        if (top.min_neighborhood(x).test(y) || top.min_neighborhood(y).test(x)) {
          block[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return ComponentPartition{Partition(std::move(block))};
}

bool is_connected(const FiniteTopology& top) { return components(top).count() <= 1; }

bool is_k_connected(const FiniteTopology& top, std::size_t k) {
  if (k < 1) throw InputError("k-connectedness needs k >= 1");
  return components(top).count() <= k;
}

bool is_locally_connected(const FiniteTopology& top) {
  // U(x) is the smallest open neighbourhood of x, so the condition reduces to
  // connectedness of each U(x) as a subspace.
  for (std::size_t x = 0; x < top.size(); ++x)
    if (!is_connected(subspace(top, top.min_neighborhood(x)))) return false;
  return true;
}

bool is_hausdorff(const FiniteTopology& top) {
  for (std::size_t x = 0; x < top.size(); ++x)
    for (std::size_t y = x + 1; y < top.size(); ++y)
      if ((top.min_neighborhood(x) & top.min_neighborhood(y)).any()) return false;
  return true;
}

std::size_t product_index(std::size_t x, std::size_t y, std::size_t right_size) { return x * right_size + y; }

FiniteTopology product(const FiniteTopology& a, const FiniteTopology& b, std::size_t cap) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na * nb > cap)
    throw CapExceeded("product has " + std::to_string(na * nb) + " points; cap is " + std::to_string(cap));
  std::vector<std::string> labels;
  labels.reserve(na * nb);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      labels.push_back("(" + a.carrier()->label(x) + "," + b.carrier()->label(y) + ")");
  auto carrier = make_carrier(std::move(labels));
  std::vector<ElementSet> nbhd(na * nb);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      auto& u = nbhd[product_index(x, y, nb)];
      for (std::size_t x2 = 0; x2 < na; ++x2)
        if (a.min_neighborhood(x).test(x2))
          for (std::size_t y2 = 0; y2 < nb; ++y2)
            if (b.min_neighborhood(y).test(y2)) u.set(product_index(x2, y2, nb));
    }
  return FiniteTopology::from_min_neighborhoods(std::move(carrier), std::move(nbhd));
}

FiniteTopology subspace(const FiniteTopology& top, const ElementSet& s) {
  const auto keep = members(s & top.all(), top.size());
  std::vector<std::string> labels;
  std::vector<std::size_t> position(top.size(), 0);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    labels.push_back(top.carrier()->label(keep[k]));
    position[keep[k]] = k;
  }
  std::vector<ElementSet> nbhd(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (auto y : keep)
      if (top.min_neighborhood(keep[k]).test(y)) nbhd[k].set(position[y]);
  return FiniteTopology::from_min_neighborhoods(make_carrier(std::move(labels)), std::move(nbhd));
}

FiniteTopology punctured_square(const FiniteTopology& top, std::size_t cap) {
  const auto sq = product(top, top, cap);
  ElementSet off_diagonal;
  for (std::size_t x = 0; x < top.size(); ++x)
    for (std::size_t y = 0; y < top.size(); ++y)
      if (x != y) off_diagonal.set(product_index(x, y, top.size()));
  return subspace(sq, off_diagonal);
}

QuotientSpace quotient(const FiniteTopology& top, const BinaryRelation& eq) {
  if (!same_carrier(top.carrier(), eq.carrier())) throw InputError("equivalence carrier does not match topology");
  return quotient(top, classes_of(eq));
}

QuotientSpace quotient(const FiniteTopology& top, const Partition& classes) {
  if (classes.size() != top.size()) throw InputError("partition size does not match topology");
  const std::size_t k = classes.block_count();
  auto saturate = [&](const ElementSet& s) {
    ElementSet out;
    for (std::size_t b = 0; b < k; ++b)
      if ((classes.block(b) & s).any()) out |= classes.block(b);
    return out;
  };
  std::vector<ElementSet> nbhd(k);
  for (std::size_t b = 0; b < k; ++b) {
    // Smallest saturated open set containing the class: grow until the
    // union of member neighbourhoods adds nothing new.
    ElementSet s = classes.block(b);
    for (;;) {
      ElementSet grown;
      for (std::size_t x = 0; x < top.size(); ++x)
        if (s.test(x)) grown |= top.min_neighborhood(x);
      grown = saturate(grown);
      if (grown == s) break;
      s = grown;
    }
    for (std::size_t c = 0; c < k; ++c)
      if ((classes.block(c) & s).any()) nbhd[b].set(c);
  }
  auto carrier = class_carrier(*top.carrier(), classes);
  return QuotientSpace{FiniteTopology::from_min_neighborhoods(std::move(carrier), std::move(nbhd)), classes};
}

std::vector<FiniteTopology> all_topologies(CarrierPtr carrier) {
  const std::size_t n = carrier->size();
  if (n > 5) throw CapExceeded("topology enumeration needs at most 5 points");
  std::vector<FiniteTopology> out;
  if (n == 0) {
    out.push_back(FiniteTopology::discrete(carrier));
    return out;
  }
  // Each U(x) is {x} plus a subset of the other n-1 points.
  const std::size_t bits_per = n - 1;
  const std::uint64_t total = std::uint64_t{1} << (n * bits_per);
  std::vector<ElementSet> nbhd(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t x = 0; x < n; ++x) {
      const auto chunk = (code >> ((n - 1 - x) * bits_per)) & ((std::uint64_t{1} << bits_per) - 1);
      ElementSet u;
      u.set(x);
      std::size_t bit = 0;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        if ((chunk >> (bits_per - 1 - bit)) & 1U) u.set(y);
        ++bit;
      }
      nbhd[x] = u;
    }
    bool valid = true;
    for (std::size_t x = 0; x < n && valid; ++x)
      for (std::size_t y = 0; y < n && valid; ++y)
        if (nbhd[x].test(y) && !is_subset(nbhd[y], nbhd[x])) valid = false;
    if (valid) out.push_back(FiniteTopology::from_min_neighborhoods(carrier, nbhd));
  }
  return out;
}

}  // namespace ordkit
