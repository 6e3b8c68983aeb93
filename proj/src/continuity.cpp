#include "ordkit/continuity.hpp"

#include "ordkit/error.hpp"

namespace ordkit {

std::string_view section_name(SectionKind k) {
  switch (k) {
    case SectionKind::weak_upper: return "weak-upper";
    case SectionKind::weak_lower: return "weak-lower";
    case SectionKind::strict_upper: return "strict-upper";
    case SectionKind::strict_lower: return "strict-lower";
  }
  return "?";
}

ContinuityResult is_continuous(const BinaryRelation& rel, const FiniteTopology& top) {
  if (!same_carrier(rel.carrier(), top.carrier())) throw InputError("relation and topology carriers differ");
  for (std::size_t x = 0; x < rel.size(); ++x) {
    const auto up = rel.column(x);
    const auto down = rel.row(x);
    const struct {
      SectionKind kind;
      ElementSet set;
      bool ok;
    } checks[] = {
        {SectionKind::weak_upper, up, top.is_closed(up)},
        {SectionKind::weak_lower, down, top.is_closed(down)},
        {SectionKind::strict_upper, up & ~down, top.is_open(up & ~down)},
        {SectionKind::strict_lower, down & ~up, top.is_open(down & ~up)},
    };
    for (const auto& c : checks)
      if (!c.ok) return ContinuityResult{false, ContinuityViolation{x, c.kind, c.set}};
  }
  return {};
}

}  // namespace ordkit
