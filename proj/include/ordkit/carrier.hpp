#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ordkit/element_set.hpp"

namespace ordkit {

/// An ordered list of distinct element labels. The index order is fixed at
/// construction and drives every tie-break and enumeration in the library.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws InputError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  bool operator==(const Carrier& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

CarrierPtr make_carrier(std::vector<std::string> labels);

inline bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  return a == b || *a == *b;
}

/// "{a,b}" style rendering of a subset.
std::string format_set(const Carrier& carrier, const ElementSet& s);

}  // namespace ordkit
