#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "agg/crisp.hpp"
#include "agg/exec.hpp"
#include "agg/fuzzy.hpp"
#include "agg/gamma_magma.hpp"

namespace agg {

/// Structural assumptions a statement needs before it is checked.
enum class Hypothesis {
  gamma_ag,                    // left invertive law
  ag_star_star,                // x a (y b z) = y a (x b z)
  intra_regular,
  every_element_factorizable,
};

using HypothesisSet = KindSet<Hypothesis>;

std::string_view hypothesis_name(Hypothesis h);
HypothesisSet satisfied_hypotheses(const GammaMagma& m);

/// How the two evaluated sides of a statement relate when it holds.
enum class Relation {
  equal,    // fuzzy subsets coincide
  leq,      // lhs <= rhs pointwise
  implies,  // lhs implies rhs
  iff,      // lhs iff rhs
};

std::string_view relation_name(Relation r);

using Side = std::variant<bool, FuzzySubset>;

/// True when (lhs, rhs) break the relation.
bool violates(Relation r, const Side& lhs, const Side& rhs);

struct Counterexample {
  std::size_t case_index = 0;
  std::string statement;        // the case's formula, e.g. "(f o g) o h = (h o g) o f"
  std::string detail;           // which sub-condition failed, when relevant
  Relation relation = Relation::equal;
  std::vector<FuzzySubset> subsets;  // bound to f, g, h, k in order
  Side lhs;
  Side rhs;
  /// First element where fuzzy sides differ.
  std::optional<Element> element;
};

/// Exhaustive: every L_d-valued subset for each quantified variable.
/// Sampled: `samples` pseudo-random draws from an explicit seed.
struct Mode {
  enum class Kind { exhaustive, sampled };
  Kind kind = Kind::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;

  static Mode exhaustive() { return {}; }
  static Mode sampled(std::uint64_t seed, std::uint64_t samples) {
    return {Kind::sampled, seed, samples};
  }
  friend bool operator==(const Mode&, const Mode&) = default;
};

/// "exhaustive" or "sampled:SEED:N".
Mode parse_mode(std::string_view text);
std::string mode_text(const Mode& mode);

enum class VerdictStatus { holds, counterexample, hypothesis_not_met, capacity_exceeded };
std::string_view verdict_status_name(VerdictStatus s);

struct SearchBounds {
  std::uint64_t lattice_den = 1;
  Mode mode;
  /// Exhaustive: number of quantified tuples. Sampled: samples drawn.
  std::uint64_t space = 0;
  /// Tuples (or samples) whose premises held; recorded for `holds` only.
  std::uint64_t premise_met = 0;
  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

struct Verdict {
  std::string id;
  VerdictStatus status = VerdictStatus::holds;
  SearchBounds bounds;
  HypothesisSet missing;              // unmet hypotheses, if any
  std::optional<Counterexample> counterexample;
  std::string message;                // capacity diagnostics
};

struct TheoremInfo {
  std::string id;
  HypothesisSet hypotheses;
  std::string statement;
  std::size_t arity = 0;              // quantified fuzzy subsets in the first case
};

const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo& theorem_info(std::string_view id);  // InputError on unknown id

inline constexpr std::uint64_t kDefaultTupleBudget = 20'000'000;

struct VerifyOptions {
  /// Cap on (d+1)^n per quantified subset and on the tuple count of
  /// an exhaustive check.
  std::uint64_t budget = kDefaultTupleBudget;
  Exec exec = Exec::parallel;
};

/// Checks one registered statement. Throws InputError for unknown ids and
/// CapacityError when the search space exceeds the budget.
Verdict verify(const GammaMagma& m, std::string_view id, const Lattice& lattice, Mode mode,
               const VerifyOptions& options = {});

/// Runs every registered statement in registry order. Capacity problems
/// are reported per id as capacity_exceeded.
std::vector<Verdict> verify_all(const GammaMagma& m, const Lattice& lattice, Mode mode,
                                const VerifyOptions& options = {});

/// Re-evaluates a counterexample's sides through the fuzzy operations.
std::pair<Side, Side> replay(const GammaMagma& m, std::string_view id, const Lattice& lattice,
                             const Counterexample& cx);

/// The fuzzy two-sided ideals with values in L_d, in lattice index order.
/// Throws CapacityError when (d+1)^n exceeds `budget`.
std::vector<FuzzySubset> fuzzy_two_sided_ideals(const GammaMagma& m, const Lattice& lattice,
                                                std::uint64_t budget = kDefaultTupleBudget,
                                                Exec exec = Exec::parallel);

struct SemilatticeReport {
  std::uint64_t lattice_den = 1;
  bool hypotheses_met = false;
  std::vector<FuzzySubset> ideals;
  bool closed = true;
  bool commutative = true;
  bool associative = true;
  bool idempotent = true;
  bool identity = true;         // f o S = f = S o f, and S is an ideal
  std::string violation;        // first failure, empty if none
  std::vector<FuzzySubset> witnesses;

  bool ok() const { return closed && commutative && associative && idempotent && identity; }
};

/// Checks that the L_d-valued fuzzy two-sided ideals form a semilattice
/// under the Γ-product with identity S.
SemilatticeReport semilattice_report(const GammaMagma& m, const Lattice& lattice,
                                     std::uint64_t budget = kDefaultTupleBudget);

}  // namespace agg
