#include "agg/gamma_magma.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "agg/error.hpp"

namespace agg {

GammaMagma::GammaMagma(std::size_t order, std::vector<std::string> labels,
                       std::vector<Element> cells,
                       std::optional<std::vector<std::string>> element_names)
    : order_(order),
      labels_(std::move(labels)),
      cells_(std::move(cells)),
      element_names_(std::move(element_names)) {
  if (order_ == 0) throw InputError("order must be positive");
  if (labels_.empty()) throw InputError("at least one gamma label is required");
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("gamma labels must be non-empty");
    if (!seen.insert(l).second) throw InputError("duplicate gamma label '" + l + "'");
  }
  if (cells_.size() != labels_.size() * order_ * order_) {
    throw InputError("expected " + std::to_string(labels_.size() * order_ * order_) +
                     " table entries, got " + std::to_string(cells_.size()));
  }
  for (Element v : cells_) {
    if (v >= order_) {
      throw InputError("table entry " + std::to_string(v) + " outside carrier of order " +
                       std::to_string(order_));
    }
  }
  if (element_names_ && element_names_->size() != order_) {
    throw InputError("element label list must have one name per element");
  }
  index_factorizations();
}

GammaMagma GammaMagma::from_tables(
    std::vector<std::string> labels,
    const std::vector<std::vector<std::vector<Element>>>& tables,
    std::optional<std::vector<std::string>> element_names) {
  if (tables.empty()) throw InputError("no tables given");
  const std::size_t n = tables.front().size();
  if (tables.size() != labels.size()) throw InputError("one table per label is required");
  std::vector<Element> cells;
  cells.reserve(tables.size() * n * n);
  for (const auto& t : tables) {
    if (t.size() != n) throw InputError("all tables must have the same order");
    for (const auto& row : t) {
      if (row.size() != n) throw InputError("tables must be square");
      cells.insert(cells.end(), row.begin(), row.end());
    }
  }
  return GammaMagma(n, std::move(labels), std::move(cells), std::move(element_names));
}

void GammaMagma::index_factorizations() {
  const std::size_t n = order_;
  factor_offsets_.assign(n + 1, 0);
  for (Element v : cells_) ++factor_offsets_[v + 1];
  for (std::size_t a = 0; a < n; ++a) factor_offsets_[a + 1] += factor_offsets_[a];
  factors_.resize(cells_.size());
  std::vector<std::size_t> fill(factor_offsets_.begin(), factor_offsets_.end() - 1);
  for (Label g = 0; g < gamma_size(); ++g) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        factors_[fill[(*this)(x, g, y)]++] = Factor{x, y};
      }
    }
  }
}

std::string GammaMagma::element_name(Element x) const {
  if (element_names_ && x < order_) return (*element_names_)[x];
  return std::to_string(x);
}

Element GammaMagma::apply(Element x, Label g, Element y) const {
  if (x >= order_ || y >= order_) throw InputError("element outside carrier");
  if (g >= gamma_size()) throw InputError("gamma label index out of range");
  return (*this)(x, g, y);
}

Element GammaMagma::apply(Element x, std::string_view label, Element y) const {
  return apply(x, label_index(label), y);
}

Label GammaMagma::label_index(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown gamma label '" + std::string(label) + "'");
  return static_cast<Label>(it - labels_.begin());
}

Element GammaMagma::parse_element(std::string_view token) const {
  if (element_names_) {
    auto it = std::find(element_names_->begin(), element_names_->end(), token);
    if (it != element_names_->end()) return static_cast<Element>(it - element_names_->begin());
  }
  Element v{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || v >= order_) {
    throw InputError("unknown element '" + std::string(token) + "'");
  }
  return v;
}

std::span<const Element> GammaMagma::table(Label g) const {
  if (g >= gamma_size()) throw InputError("gamma label index out of range");
  return std::span<const Element>(cells_).subspan(g * order_ * order_, order_ * order_);
}

std::vector<std::string> default_labels(std::size_t k) {
  std::vector<std::string> out;
  out.reserve(k);
  for (std::size_t g = 0; g < k; ++g) out.push_back("g" + std::to_string(g));
  return out;
}

GammaMagma trivial_magma(std::size_t gamma_count) {
  return GammaMagma(1, default_labels(gamma_count), std::vector<Element>(gamma_count, 0));
}

}  // namespace agg
