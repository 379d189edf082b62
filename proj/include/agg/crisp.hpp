#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "agg/exec.hpp"
#include "agg/gamma_magma.hpp"

namespace agg {

/// A subset of {0, ..., n-1}, stored as a bit vector of fixed length n.
class CrispSubset {
 public:
  explicit CrispSubset(std::size_t length = 0) : length_(length), words_((length + 63) / 64) {}
  CrispSubset(std::size_t length, std::initializer_list<Element> members);

  static CrispSubset full(std::size_t length);
  /// Bit i of `mask` selects element i; requires length <= 64.
  static CrispSubset from_mask(std::size_t length, std::uint64_t mask);
  static CrispSubset from_elements(std::size_t length, std::span<const Element> members);

  std::size_t length() const noexcept { return length_; }
  bool contains(Element x) const noexcept {
    return x < length_ && ((words_[x / 64] >> (x % 64)) & 1U) != 0;
  }
  void insert(Element x);
  void erase(Element x);

  bool empty() const noexcept;
  std::size_t count() const noexcept;
  std::vector<Element> elements() const;
  /// Low 64 bits as a mask.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  bool subset_of(const CrispSubset& other) const;
  CrispSubset operator&(const CrispSubset& other) const;
  CrispSubset operator|(const CrispSubset& other) const;

  friend bool operator==(const CrispSubset&, const CrispSubset&) = default;
  friend auto operator<=>(const CrispSubset& a, const CrispSubset& b) {
    return std::tie(a.length_, a.words_) <=> std::tie(b.length_, b.words_);
  }

 private:
  void require_same_length(const CrispSubset& other) const;

  std::size_t length_;
  std::vector<std::uint64_t> words_;
};

enum class IdealKind {
  subgroupoid,
  left,
  right,
  two_sided,
  bi,
  generalized_bi,
  interior,
  quasi,
};

inline constexpr std::array<IdealKind, 8> kIdealKinds = {
    IdealKind::subgroupoid, IdealKind::left,           IdealKind::right,
    IdealKind::two_sided,   IdealKind::bi,             IdealKind::generalized_bi,
    IdealKind::interior,    IdealKind::quasi};

std::string_view ideal_kind_name(IdealKind kind);
std::optional<IdealKind> parse_ideal_kind(std::string_view name);

/// Small bit set over an enum with at most 32 values.
template <typename Kind>
class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(std::initializer_list<Kind> kinds) {
    for (Kind k : kinds) insert(k);
  }
  constexpr bool contains(Kind k) const { return (bits_ >> static_cast<unsigned>(k)) & 1U; }
  constexpr void insert(Kind k) { bits_ |= 1U << static_cast<unsigned>(k); }
  constexpr void set(Kind k, bool on) {
    if (on) insert(k);
  }
  constexpr bool contains_all(KindSet other) const { return (bits_ & other.bits_) == other.bits_; }
  constexpr std::uint32_t bits() const { return bits_; }
  friend constexpr bool operator==(KindSet, KindSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

using IdealKindSet = KindSet<IdealKind>;

/// A Γ B = { x g y : x in A, y in B, g in Γ }.
CrispSubset set_product(const GammaMagma& m, const CrispSubset& a, const CrispSubset& b);

/// Kinds whose defining inclusion holds for the non-empty subset `a`.
/// Throws InputError for an empty subset or a length mismatch.
IdealKindSet classify_subset(const GammaMagma& m, const CrispSubset& a);

inline bool is_ideal(const GammaMagma& m, const CrispSubset& a, IdealKind kind) {
  return classify_subset(m, a).contains(kind);
}

/// (x beta (a xi a)) gamma y = a.
struct IntraWitness {
  Element element = 0;
  Element x = 0;
  Element y = 0;
  Label beta = 0;
  Label xi = 0;
  Label gamma = 0;

  friend bool operator==(const IntraWitness&, const IntraWitness&) = default;
};

bool witness_holds(const GammaMagma& m, const IntraWitness& w);

/// Lexicographically smallest (x, y, beta, xi, gamma) witnessing that `a`
/// is intra-regular.
std::optional<IntraWitness> intra_regular_witness(const GammaMagma& m, Element a);

bool is_intra_regular(const GammaMagma& m);

/// Every element is some product x g y.
bool every_element_factorizable(const GammaMagma& m);

inline constexpr std::size_t kMaxIdealEnumerationOrder = 20;

/// All non-empty subsets classified as `kind`, ascending by bit pattern.
/// Throws CapacityError when order exceeds kMaxIdealEnumerationOrder.
///
/// The parallel kernel classifies subsets with precomputed row/column
/// product masks; the serial path calls classify_subset on each subset.
std::vector<CrispSubset> enumerate_ideals(const GammaMagma& m, IdealKind kind,
                                          Exec exec = Exec::parallel);

}  // namespace agg
