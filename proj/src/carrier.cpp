#include "ordkit/carrier.hpp"

#include "ordkit/error.hpp"

namespace ordkit {

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxElements)
    throw CapExceeded("carrier has " + std::to_string(labels_.size()) +
                      " elements; hard limit is " + std::to_string(kMaxElements));
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted) throw InputError("duplicate element label '" + labels_[i] + "'");
  }
}

std::optional<std::size_t> Carrier::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Carrier::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown element label '" + std::string(label) + "'");
}

CarrierPtr make_carrier(std::vector<std::string> labels) {
  return std::make_shared<const Carrier>(std::move(labels));
}

std::string format_set(const Carrier& carrier, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (!s.test(i)) continue;
    if (!first) out += ',';
    out += carrier.label(i);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace ordkit
