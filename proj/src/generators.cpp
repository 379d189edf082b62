#include "agg/generators.hpp"

#include "agg/error.hpp"

namespace agg {

TermPattern parse_term_pattern(std::string_view text) {
  if (text == "xy") return TermPattern::product;
  if (text == "(xx)y") return TermPattern::square_left;
  if (text == "x(yy)") return TermPattern::square_right;
  throw InputError("unknown term pattern '" + std::string(text) + "'");
}

std::string_view term_pattern_text(TermPattern p) {
  switch (p) {
    case TermPattern::product: return "xy";
    case TermPattern::square_left: return "(xx)y";
    case TermPattern::square_right: return "x(yy)";
  }
  return "?";
}

GammaMagma from_base_with_terms(std::size_t order, std::span<const Element> base,
                                std::span<const TermPattern> patterns,
                                std::vector<std::string> labels,
                                std::optional<std::vector<std::string>> element_names) {
  if (patterns.empty()) throw InputError("at least one term pattern is required");
  if (base.size() != order * order) throw InputError("base table must be order x order");
  for (Element v : base) {
    if (v >= order) throw InputError("base table entry outside carrier");
  }
  if (labels.empty()) labels = default_labels(patterns.size());
  auto mul = [&](Element x, Element y) { return base[x * order + y]; };

  std::vector<Element> cells;
  cells.reserve(patterns.size() * order * order);
  for (TermPattern p : patterns) {
    for (Element x = 0; x < order; ++x) {
      for (Element y = 0; y < order; ++y) {
        switch (p) {
          case TermPattern::product: cells.push_back(mul(x, y)); break;
          case TermPattern::square_left: cells.push_back(mul(mul(x, x), y)); break;
          case TermPattern::square_right: cells.push_back(mul(x, mul(y, y))); break;
        }
      }
    }
  }
  return GammaMagma(order, std::move(labels), std::move(cells), std::move(element_names));
}

}  // namespace agg
