#include "agg/crisp.hpp"

#include <bit>

#include "agg/error.hpp"

namespace agg {

// ---------------------------------------------------------------------------
// CrispSubset

CrispSubset::CrispSubset(std::size_t length, std::initializer_list<Element> members)
    : CrispSubset(length) {
  for (Element x : members) insert(x);
}

CrispSubset CrispSubset::full(std::size_t length) {
  CrispSubset s(length);
  for (Element x = 0; x < length; ++x) s.insert(x);
  return s;
}

CrispSubset CrispSubset::from_mask(std::size_t length, std::uint64_t mask) {
  if (length > 64) throw InputError("mask construction needs length <= 64");
  if (length < 64 && (mask >> length) != 0) throw InputError("mask has bits past length");
  CrispSubset s(length);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

CrispSubset CrispSubset::from_elements(std::size_t length, std::span<const Element> members) {
  CrispSubset s(length);
  for (Element x : members) s.insert(x);
  return s;
}

void CrispSubset::insert(Element x) {
  if (x >= length_) throw InputError("element " + std::to_string(x) + " outside subset length");
  words_[x / 64] |= std::uint64_t{1} << (x % 64);
}

void CrispSubset::erase(Element x) {
  if (x >= length_) throw InputError("element " + std::to_string(x) + " outside subset length");
  words_[x / 64] &= ~(std::uint64_t{1} << (x % 64));
}

bool CrispSubset::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t CrispSubset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Element> CrispSubset::elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < length_; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

void CrispSubset::require_same_length(const CrispSubset& other) const {
  if (length_ != other.length_) throw InputError("subset length mismatch");
}

bool CrispSubset::subset_of(const CrispSubset& other) const {
  require_same_length(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

CrispSubset CrispSubset::operator&(const CrispSubset& other) const {
  require_same_length(other);
  CrispSubset out(length_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

CrispSubset CrispSubset::operator|(const CrispSubset& other) const {
  require_same_length(other);
  CrispSubset out(length_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
  return out;
}

// ---------------------------------------------------------------------------
// Ideal kinds

std::string_view ideal_kind_name(IdealKind kind) {
  switch (kind) {
    case IdealKind::subgroupoid: return "subgroupoid";
    case IdealKind::left: return "left";
    case IdealKind::right: return "right";
    case IdealKind::two_sided: return "two_sided";
    case IdealKind::bi: return "bi";
    case IdealKind::generalized_bi: return "generalized_bi";
    case IdealKind::interior: return "interior";
    case IdealKind::quasi: return "quasi";
  }
  return "?";
}

std::optional<IdealKind> parse_ideal_kind(std::string_view name) {
  for (IdealKind k : kIdealKinds) {
    if (ideal_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

CrispSubset set_product(const GammaMagma& m, const CrispSubset& a, const CrispSubset& b) {
  if (a.length() != m.order() || b.length() != m.order()) {
    throw InputError("subset length does not match structure order");
  }
  CrispSubset out(m.order());
  const auto left = a.elements();
  const auto right = b.elements();
  for (Label g = 0; g < m.gamma_size(); ++g) {
    for (Element x : left) {
      for (Element y : right) out.insert(m(x, g, y));
    }
  }
  return out;
}

IdealKindSet classify_subset(const GammaMagma& m, const CrispSubset& a) {
  if (a.length() != m.order()) throw InputError("subset length does not match structure order");
  if (a.empty()) throw InputError("ideal predicates are defined for non-empty subsets only");
  const auto s = CrispSubset::full(m.order());
  const auto sa = set_product(m, s, a);
  const auto as = set_product(m, a, s);

  IdealKindSet kinds;
  const bool sub = set_product(m, a, a).subset_of(a);
  const bool left = sa.subset_of(a);
  const bool right = as.subset_of(a);
  const bool gen_bi = set_product(m, as, a).subset_of(a);
  kinds.set(IdealKind::subgroupoid, sub);
  kinds.set(IdealKind::left, left);
  kinds.set(IdealKind::right, right);
  kinds.set(IdealKind::two_sided, left && right);
  kinds.set(IdealKind::generalized_bi, gen_bi);
  kinds.set(IdealKind::bi, gen_bi && sub);
  kinds.set(IdealKind::interior, set_product(m, sa, s).subset_of(a));
  kinds.set(IdealKind::quasi, (sa & as).subset_of(a));
  return kinds;
}

// ---------------------------------------------------------------------------
// Intra-regularity

bool witness_holds(const GammaMagma& m, const IntraWitness& w) {
  const auto n = m.order();
  const auto k = m.gamma_size();
  if (w.element >= n || w.x >= n || w.y >= n || w.beta >= k || w.xi >= k || w.gamma >= k) {
    return false;
  }
  const Element a = w.element;
  return m(m(w.x, w.beta, m(a, w.xi, a)), w.gamma, w.y) == a;
}

std::optional<IntraWitness> intra_regular_witness(const GammaMagma& m, Element a) {
  if (a >= m.order()) throw InputError("element outside carrier");
  const auto n = static_cast<Element>(m.order());
  const auto k = static_cast<Label>(m.gamma_size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Label beta = 0; beta < k; ++beta) {
        for (Label xi = 0; xi < k; ++xi) {
          const Element inner = m(x, beta, m(a, xi, a));
          for (Label gamma = 0; gamma < k; ++gamma) {
            if (m(inner, gamma, y) == a) return IntraWitness{a, x, y, beta, xi, gamma};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_intra_regular(const GammaMagma& m) {
  for (Element a = 0; a < m.order(); ++a) {
    if (!intra_regular_witness(m, a)) return false;
  }
  return true;
}

bool every_element_factorizable(const GammaMagma& m) {
  for (Element a = 0; a < m.order(); ++a) {
    if (m.factorizations(a).empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ideal enumeration

namespace {

// Product masks for orders <= 64: pair[x * n + y] is the set {x g y : g}.
struct ProductMasks {
  std::size_t n;
  std::vector<std::uint64_t> pair;
  std::vector<std::uint64_t> row;  // x Γ S
  std::vector<std::uint64_t> col;  // S Γ y

  explicit ProductMasks(const GammaMagma& m)
      : n(m.order()), pair(n * n, 0), row(n, 0), col(n, 0) {
    for (Label g = 0; g < m.gamma_size(); ++g) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          const std::uint64_t bit = std::uint64_t{1} << m(x, g, y);
          pair[x * n + y] |= bit;
          row[x] |= bit;
          col[y] |= bit;
        }
      }
    }
  }

  std::uint64_t product(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    for (std::uint64_t ra = a; ra != 0; ra &= ra - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(ra));
      for (std::uint64_t rb = b; rb != 0; rb &= rb - 1) {
        out |= pair[x * n + static_cast<std::size_t>(std::countr_zero(rb))];
      }
    }
    return out;
  }
  static std::uint64_t unite(const std::vector<std::uint64_t>& table, std::uint64_t a) {
    std::uint64_t out = 0;
    for (; a != 0; a &= a - 1) out |= table[static_cast<std::size_t>(std::countr_zero(a))];
    return out;
  }

  bool is(IdealKind kind, std::uint64_t a) const {
    auto within = [a](std::uint64_t s) { return (s & ~a) == 0; };
    switch (kind) {
      case IdealKind::subgroupoid: return within(product(a, a));
      case IdealKind::left: return within(unite(col, a));
      case IdealKind::right: return within(unite(row, a));
      case IdealKind::two_sided: return within(unite(col, a) | unite(row, a));
      case IdealKind::generalized_bi: return within(product(unite(row, a), a));
      case IdealKind::bi: return within(product(unite(row, a), a)) && within(product(a, a));
      case IdealKind::interior: return within(unite(row, unite(col, a)));
      case IdealKind::quasi: return within(unite(col, a) & unite(row, a));
    }
    return false;
  }
};

}  // namespace

std::vector<CrispSubset> enumerate_ideals(const GammaMagma& m, IdealKind kind, Exec exec) {
  const std::size_t n = m.order();
  if (n > kMaxIdealEnumerationOrder) {
    throw CapacityError("ideal enumeration is capped at order " +
                        std::to_string(kMaxIdealEnumerationOrder));
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<CrispSubset> out;

  if (exec == Exec::serial) {
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      auto s = CrispSubset::from_mask(n, mask);
      if (classify_subset(m, s).contains(kind)) out.push_back(std::move(s));
    }
    return out;
  }

  const ProductMasks masks(m);
  std::vector<std::uint8_t> hit(limit, 0);
  const auto total = static_cast<std::int64_t>(limit);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 1; i < total; ++i) {
    hit[static_cast<std::size_t>(i)] = masks.is(kind, static_cast<std::uint64_t>(i)) ? 1 : 0;
  }
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (hit[mask]) out.push_back(CrispSubset::from_mask(n, mask));
  }
  return out;
}

}  // namespace agg
