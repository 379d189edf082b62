#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "agg/crisp.hpp"
#include "agg/exec.hpp"
#include "agg/gamma_magma.hpp"
#include "agg/rational.hpp"

namespace agg {

/// A fuzzy subset with exact rational membership in [0, 1].
///
/// Values share one denominator: value(i) = num(i) / den(). Equality is
/// value-wise, so two subsets stored over different denominators compare
/// equal when they denote the same function.
class FuzzySubset {
 public:
  FuzzySubset() = default;
  FuzzySubset(std::uint64_t den, std::vector<std::uint64_t> num);

  static FuzzySubset constant(std::size_t length, Rational value);
  static FuzzySubset zero(std::size_t length) { return constant(length, 0); }
  /// The all-ones subset, i.e. the carrier S viewed as a fuzzy subset.
  static FuzzySubset one(std::size_t length) { return constant(length, 1); }
  static FuzzySubset from_values(std::span<const Rational> values);

  std::size_t size() const noexcept { return num_.size(); }
  std::uint64_t den() const noexcept { return den_; }
  std::uint64_t num(std::size_t i) const { return num_.at(i); }
  std::span<const std::uint64_t> numerators() const noexcept { return num_; }
  Rational value(std::size_t i) const;

  /// Same function over the smallest common denominator.
  FuzzySubset canonical() const;
  /// Same function over `den`, which must be a multiple of den().
  FuzzySubset rescaled(std::uint64_t den) const;

  friend bool operator==(const FuzzySubset& a, const FuzzySubset& b);

 private:
  std::uint64_t den_ = 1;
  std::vector<std::uint64_t> num_;
};

/// Pointwise min / max / order.
FuzzySubset meet(const FuzzySubset& f, const FuzzySubset& g);
FuzzySubset join(const FuzzySubset& f, const FuzzySubset& g);
bool leq(const FuzzySubset& f, const FuzzySubset& g);

/// Sup-min Γ-product: (f o g)(a) = max over a = b g c of min(f(b), g(c)),
/// and 0 for elements with no factorization.
///
/// Exec::serial scatters over every table cell; Exec::parallel gathers
/// each output element from the structure's factorization index.
FuzzySubset gamma_product(const GammaMagma& m, const FuzzySubset& f, const FuzzySubset& g,
                          Exec exec = Exec::parallel);

enum class FuzzyKind {
  subgroupoid,
  left,
  right,
  two_sided,
  bi,
  generalized_bi,
  interior,
  quasi,
  idempotent,
};

inline constexpr std::array<FuzzyKind, 9> kFuzzyKinds = {
    FuzzyKind::subgroupoid, FuzzyKind::left,     FuzzyKind::right,
    FuzzyKind::two_sided,   FuzzyKind::bi,       FuzzyKind::generalized_bi,
    FuzzyKind::interior,    FuzzyKind::quasi,    FuzzyKind::idempotent};

using FuzzyKindSet = KindSet<FuzzyKind>;

std::string_view fuzzy_kind_name(FuzzyKind kind);
std::optional<FuzzyKind> parse_fuzzy_kind(std::string_view name);
/// The fuzzy kind with the same defining condition as a crisp kind.
FuzzyKind fuzzy_counterpart(IdealKind kind);

/// Decides one kind. Pointwise kinds quantify over all elements and labels;
/// quasi is (f o S) ∩ (S o f) <= f; idempotent is f o f = f.
bool is_fuzzy(const GammaMagma& m, const FuzzySubset& f, FuzzyKind kind);
FuzzyKindSet classify_fuzzy(const GammaMagma& m, const FuzzySubset& f);

FuzzySubset characteristic(const CrispSubset& a);
/// {x : f(x) >= t}; t must be positive.
CrispSubset level_cut(const FuzzySubset& f, Rational t);

/// The finite value grid L_d = {0, 1/d, ..., 1}.
class Lattice {
 public:
  explicit Lattice(std::uint64_t den);
  std::uint64_t den() const noexcept { return den_; }
  /// (d + 1)^n, or nullopt when that overflows 64 bits.
  std::optional<std::uint64_t> subset_count(std::size_t order) const;
  /// The index-th L_d-valued subset in base-(d+1) order, element 0 most
  /// significant.
  FuzzySubset subset(std::size_t order, std::uint64_t index) const;

 private:
  std::uint64_t den_;
};

}  // namespace agg
