#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agg/gamma_magma.hpp"

namespace agg {

/// Structural identities, each quantified over all elements and all
/// Γ-labels:
///   left_invertive   (x a y) b z = (z a y) b x
///   medial           (w a x) b (y c z) = (w a y) b (x c z)
///   ag_star_star     x a (y b z) = y a (x b z)
///   paramedial       (w a x) b (y c z) = (z a y) b (x c w)
///   commutative      x a y = y a x
///   associative      (x a y) b z = x a (y b z)
///   band             x a x = x
///   has_left_identity  exists e: e a x = x for all x, a
enum class Law {
  left_invertive,
  medial,
  ag_star_star,
  paramedial,
  commutative,
  associative,
  band,
  has_left_identity,
};

inline constexpr std::size_t kLawCount = 8;
inline constexpr std::array<Law, kLawCount> kAllLaws = {
    Law::left_invertive, Law::medial,      Law::ag_star_star, Law::paramedial,
    Law::commutative,    Law::associative, Law::band,         Law::has_left_identity};

std::string_view law_name(Law law);
std::optional<Law> parse_law(std::string_view name);

/// Number of element and label variables in a universal law's tuple.
/// has_left_identity is existential and reports {0, 0}.
std::pair<std::size_t, std::size_t> law_arity(Law law);

/// A failing instance. For universal laws `elements`/`labels` follow the
/// variable order in the table above and `lhs != rhs`.
///
/// For has_left_identity the witness refutes every candidate e: entry e of
/// `elements` and `labels` is an (x, a) with e a x != x, and lhs/rhs are
/// the two sides for candidate 0.
struct LawWitness {
  std::vector<Element> elements;
  std::vector<Label> labels;
  Element lhs = 0;
  Element rhs = 0;

  friend bool operator==(const LawWitness&, const LawWitness&) = default;
};

class LawReport {
 public:
  bool holds(Law law) const { return !witness_[index(law)].has_value(); }
  const std::optional<LawWitness>& witness(Law law) const { return witness_[index(law)]; }
  void set_failure(Law law, LawWitness w) { witness_[index(law)] = std::move(w); }

  friend bool operator==(const LawReport&, const LawReport&) = default;

 private:
  static std::size_t index(Law law) { return static_cast<std::size_t>(law); }
  std::array<std::optional<LawWitness>, kLawCount> witness_{};
};

/// Both sides of a universal law at one instance. Throws InputError on
/// arity mismatch, out-of-range entries, or for has_left_identity.
std::pair<Element, Element> evaluate_law(const GammaMagma& m, Law law,
                                         std::span<const Element> elements,
                                         std::span<const Label> labels);

/// First failing tuple in lexicographic order (elements first, then
/// labels), or nullopt if the law holds.
std::optional<LawWitness> find_violation(const GammaMagma& m, Law law);

inline bool law_holds(const GammaMagma& m, Law law) { return !find_violation(m, law); }

LawReport check_laws(const GammaMagma& m);

/// Renders a witness in the structure's element/label names, e.g.
/// "9alpha1 != 1alpha9".
std::string render_witness(const GammaMagma& m, Law law, const LawWitness& w);

}  // namespace agg
