#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "agg/exec.hpp"
#include "agg/gamma_magma.hpp"
#include "agg/laws.hpp"

namespace agg {

enum class IsoMode { elements_only, elements_and_gamma };

std::string_view iso_mode_name(IsoMode mode);
IsoMode parse_iso_mode(std::string_view text);

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct SearchSpec {
  std::size_t order = 1;
  std::size_t gamma = 1;
  std::vector<Law> laws;
  bool intra_regular = false;  // post-filter
  IsoMode iso = IsoMode::elements_only;
  std::uint64_t budget = kDefaultNodeBudget;  // search-tree nodes
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t models = 0;
};

/// Thrown when the node budget runs out. Carries the models emitted before
/// the first unfinished subtree and the cell prefixes still unexplored.
class PartialResultError : public std::runtime_error {
 public:
  PartialResultError(std::vector<GammaMagma> models, std::vector<std::vector<Element>> frontier,
                     std::uint64_t nodes);

  const std::vector<GammaMagma>& models() const { return models_; }
  const std::vector<std::vector<Element>>& frontier() const { return frontier_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::vector<GammaMagma> models_;
  std::vector<std::vector<Element>> frontier_;
  std::uint64_t nodes_;
};

/// One canonical representative per isomorphism class, in ascending
/// lexicographic order of the flat cell vector. Throws InputError on an
/// invalid spec and PartialResultError when the budget runs out.
std::vector<GammaMagma> enumerate_models(const SearchSpec& spec, Exec exec = Exec::parallel,
                                         SearchStats* stats = nullptr);

/// True when `m` is the lexicographically least member of its orbit.
bool is_canonical(const GammaMagma& m, IsoMode iso);

/// Lexicographically least member of the orbit of `m`.
GammaMagma canonical_form(const GammaMagma& m, IsoMode iso);

bool isomorphic(const GammaMagma& a, const GammaMagma& b, IsoMode iso);

/// FNV-1a over order, Γ-size and the cells of the canonical form, as hex.
std::string canonical_hash(const GammaMagma& m, IsoMode iso = IsoMode::elements_only);

enum class StructureProperty { non_factorizable_element, non_commutative_ag, ag_not_ag_star_star };

std::string_view structure_property_name(StructureProperty p);
StructureProperty parse_structure_property(std::string_view text);

inline constexpr std::size_t kCounterexampleMaxOrder = 4;

/// Smallest-order, then lexicographically least, left invertive model with
/// one operation exhibiting `p`, searching orders 1..max_order.
std::optional<GammaMagma> find_counterexample_structure(
    StructureProperty p, std::size_t max_order = kCounterexampleMaxOrder,
    std::uint64_t budget = kDefaultNodeBudget, Exec exec = Exec::parallel);

}  // namespace agg
