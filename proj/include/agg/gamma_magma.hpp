#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace agg {

using Element = std::uint32_t;
using Label = std::uint32_t;

/// A finite carrier {0, ..., n-1} with one binary operation per
/// Γ-label. Tables are stored contiguously: label-major, then row-major,
/// so `cells()[(g * n + x) * n + y]` is x g y.
///
/// Immutable after construction; closure (every entry < n) and label
/// uniqueness are enforced by the constructor.
class GammaMagma {
 public:
  /// `cells` holds k * n * n entries for k = labels.size().
  GammaMagma(std::size_t order, std::vector<std::string> labels,
             std::vector<Element> cells,
             std::optional<std::vector<std::string>> element_names = {});

  /// Convenience: tables[g][x][y].
  static GammaMagma from_tables(
      std::vector<std::string> labels,
      const std::vector<std::vector<std::vector<Element>>>& tables,
      std::optional<std::vector<std::string>> element_names = {});

  std::size_t order() const noexcept { return order_; }
  std::size_t gamma_size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Optional per-element display names (e.g. a..e).
  const std::optional<std::vector<std::string>>& element_names() const noexcept {
    return element_names_;
  }
  std::string element_name(Element x) const;

  /// Unchecked product; callers guarantee x, y < order and g < gamma_size.
  Element operator()(Element x, Label g, Element y) const noexcept {
    return cells_[(static_cast<std::size_t>(g) * order_ + x) * order_ + y];
  }

  /// Checked product by label index.
  Element apply(Element x, Label g, Element y) const;
  /// Checked product by label name.
  Element apply(Element x, std::string_view label, Element y) const;

  Label label_index(std::string_view label) const;
  /// Resolves an element by display name or decimal index.
  Element parse_element(std::string_view token) const;

  std::span<const Element> cells() const noexcept { return cells_; }
  std::span<const Element> table(Label g) const;

  /// All (left, right) pairs whose product (under any label) is `a`,
  /// in (label, left, right) order. Duplicates across labels are kept.
  struct Factor {
    Element left;
    Element right;
  };
  std::span<const Factor> factorizations(Element a) const noexcept {
    return {factors_.data() + factor_offsets_[a],
            factors_.data() + factor_offsets_[a + 1]};
  }

  friend bool operator==(const GammaMagma& a, const GammaMagma& b) {
    return a.order_ == b.order_ && a.labels_ == b.labels_ && a.cells_ == b.cells_;
  }

 private:
  void index_factorizations();

  std::size_t order_;
  std::vector<std::string> labels_;
  std::vector<Element> cells_;
  std::optional<std::vector<std::string>> element_names_;
  std::vector<Factor> factors_;
  std::vector<std::size_t> factor_offsets_;
};

/// The single-element structure with k labels.
GammaMagma trivial_magma(std::size_t gamma_count = 1);

/// Default label names g0..g(k-1).
std::vector<std::string> default_labels(std::size_t k);

}  // namespace agg
