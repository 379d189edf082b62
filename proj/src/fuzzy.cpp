#include "agg/fuzzy.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

namespace agg {

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw InputError("invalid rational '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

// ---------------------------------------------------------------------------
// FuzzySubset

FuzzySubset::FuzzySubset(std::uint64_t den, std::vector<std::uint64_t> num)
    : den_(den), num_(std::move(num)) {
  if (den_ == 0) throw InputError("fuzzy subset denominator must be positive");
  for (auto v : num_) {
    if (v > den_) throw InputError("fuzzy membership value exceeds 1");
  }
}

FuzzySubset FuzzySubset::constant(std::size_t length, Rational value) {
  if (value < Rational(0) || value > Rational(1)) {
    throw InputError("fuzzy membership must lie in [0, 1]");
  }
  return FuzzySubset(static_cast<std::uint64_t>(value.den()),
                     std::vector<std::uint64_t>(length, static_cast<std::uint64_t>(value.num())));
}

FuzzySubset FuzzySubset::from_values(std::span<const Rational> values) {
  std::uint64_t den = 1;
  for (const auto& v : values) {
    if (v < Rational(0) || v > Rational(1)) throw InputError("fuzzy membership must lie in [0, 1]");
    den = std::lcm(den, static_cast<std::uint64_t>(v.den()));
  }
  std::vector<std::uint64_t> num;
  num.reserve(values.size());
  for (const auto& v : values) {
    num.push_back(static_cast<std::uint64_t>(v.num()) * (den / static_cast<std::uint64_t>(v.den())));
  }
  return FuzzySubset(den, std::move(num));
}

Rational FuzzySubset::value(std::size_t i) const {
  return Rational(static_cast<std::int64_t>(num_.at(i)), static_cast<std::int64_t>(den_));
}

FuzzySubset FuzzySubset::canonical() const {
  std::uint64_t g = den_;
  for (auto v : num_) g = std::gcd(g, v);
  if (g <= 1) return *this;
  std::vector<std::uint64_t> num(num_.size());
  std::transform(num_.begin(), num_.end(), num.begin(), [g](auto v) { return v / g; });
  return FuzzySubset(den_ / g, std::move(num));
}

FuzzySubset FuzzySubset::rescaled(std::uint64_t den) const {
  if (den == den_) return *this;
  if (den == 0 || den % den_ != 0) throw InputError("rescale target is not a multiple");
  const auto factor = den / den_;
  std::vector<std::uint64_t> num(num_.size());
  std::transform(num_.begin(), num_.end(), num.begin(), [factor](auto v) { return v * factor; });
  return FuzzySubset(den, std::move(num));
}

bool operator==(const FuzzySubset& a, const FuzzySubset& b) {
  if (a.size() != b.size()) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<unsigned __int128>(a.num_[i]) * b.den_ !=
        static_cast<unsigned __int128>(b.num_[i]) * a.den_) {
      return false;
    }
  }
  return true;
}

namespace {

std::uint64_t common_den(const FuzzySubset& f, const FuzzySubset& g) {
  if (f.size() != g.size()) throw InputError("fuzzy subset length mismatch");
  if (f.den() == g.den()) return f.den();
  const auto l = std::lcm(f.den(), g.den());
  if (l > (std::uint64_t{1} << 40)) throw InputError("common denominator too large");
  return l;
}

// Numerators of f and g over a shared denominator, copying only when the
// denominators differ.
struct Aligned {
  std::uint64_t den;
  std::vector<std::uint64_t> fstore, gstore;
  std::span<const std::uint64_t> f, g;

  Aligned(const FuzzySubset& a, const FuzzySubset& b) : den(common_den(a, b)) {
    f = a.numerators();
    g = b.numerators();
    if (a.den() != den) {
      fstore = std::vector<std::uint64_t>(f.begin(), f.end());
      for (auto& v : fstore) v *= den / a.den();
      f = fstore;
    }
    if (b.den() != den) {
      gstore = std::vector<std::uint64_t>(g.begin(), g.end());
      for (auto& v : gstore) v *= den / b.den();
      g = gstore;
    }
  }
};

template <typename Op>
FuzzySubset pointwise(const FuzzySubset& f, const FuzzySubset& g, Op op) {
  const Aligned al(f, g);
  std::vector<std::uint64_t> out(al.f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(al.f[i], al.g[i]);
  return FuzzySubset(al.den, std::move(out));
}

}  // namespace

FuzzySubset meet(const FuzzySubset& f, const FuzzySubset& g) {
  return pointwise(f, g, [](auto x, auto y) { return std::min(x, y); });
}

FuzzySubset join(const FuzzySubset& f, const FuzzySubset& g) {
  return pointwise(f, g, [](auto x, auto y) { return std::max(x, y); });
}

bool leq(const FuzzySubset& f, const FuzzySubset& g) {
  const Aligned al(f, g);
  for (std::size_t i = 0; i < al.f.size(); ++i) {
    if (al.f[i] > al.g[i]) return false;
  }
  return true;
}

FuzzySubset gamma_product(const GammaMagma& m, const FuzzySubset& f, const FuzzySubset& g,
                          Exec exec) {
  if (f.size() != m.order() || g.size() != m.order()) {
    throw InputError("fuzzy subset length does not match structure order");
  }
  const Aligned al(f, g);
  const auto den = al.den;
  const auto fa = al.f;
  const auto gb = al.g;
  const std::size_t n = m.order();
  std::vector<std::uint64_t> out(n, 0);

  if (exec == Exec::serial) {
    for (Label lab = 0; lab < m.gamma_size(); ++lab) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          auto& slot = out[m(x, lab, y)];
          slot = std::max(slot, std::min(fa[x], gb[y]));
        }
      }
    }
  } else {
    const auto total = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (total >= 64)
    for (std::int64_t i = 0; i < total; ++i) {
      std::uint64_t best = 0;
      for (const auto& fc : m.factorizations(static_cast<Element>(i))) {
        best = std::max(best, std::min(fa[fc.left], gb[fc.right]));
      }
      out[static_cast<std::size_t>(i)] = best;
    }
  }
  return FuzzySubset(den, std::move(out));
}

// ---------------------------------------------------------------------------
// Fuzzy ideal kinds

std::string_view fuzzy_kind_name(FuzzyKind kind) {
  switch (kind) {
    case FuzzyKind::subgroupoid: return "subgroupoid";
    case FuzzyKind::left: return "left";
    case FuzzyKind::right: return "right";
    case FuzzyKind::two_sided: return "two_sided";
    case FuzzyKind::bi: return "bi";
    case FuzzyKind::generalized_bi: return "generalized_bi";
    case FuzzyKind::interior: return "interior";
    case FuzzyKind::quasi: return "quasi";
    case FuzzyKind::idempotent: return "idempotent";
  }
  return "?";
}

std::optional<FuzzyKind> parse_fuzzy_kind(std::string_view name) {
  for (FuzzyKind k : kFuzzyKinds) {
    if (fuzzy_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

FuzzyKind fuzzy_counterpart(IdealKind kind) {
  switch (kind) {
    case IdealKind::subgroupoid: return FuzzyKind::subgroupoid;
    case IdealKind::left: return FuzzyKind::left;
    case IdealKind::right: return FuzzyKind::right;
    case IdealKind::two_sided: return FuzzyKind::two_sided;
    case IdealKind::bi: return FuzzyKind::bi;
    case IdealKind::generalized_bi: return FuzzyKind::generalized_bi;
    case IdealKind::interior: return FuzzyKind::interior;
    case IdealKind::quasi: return FuzzyKind::quasi;
  }
  return FuzzyKind::subgroupoid;
}

namespace {

// Pointwise conditions only compare values of one subset, so they work on
// raw numerators.
bool pointwise_kind(const GammaMagma& m, std::span<const std::uint64_t> f, FuzzyKind kind) {
  const auto n = static_cast<Element>(m.order());
  const auto k = static_cast<Label>(m.gamma_size());
  switch (kind) {
    case FuzzyKind::subgroupoid:
    case FuzzyKind::left:
    case FuzzyKind::right:
      for (Label g = 0; g < k; ++g) {
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            const auto v = f[m(x, g, y)];
            const auto bound = kind == FuzzyKind::left    ? f[y]
                               : kind == FuzzyKind::right ? f[x]
                                                          : std::min(f[x], f[y]);
            if (v < bound) return false;
          }
        }
      }
      return true;
    case FuzzyKind::generalized_bi:
    case FuzzyKind::interior:
      for (Label a = 0; a < k; ++a) {
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            const Element xy = m(x, a, y);
            for (Label b = 0; b < k; ++b) {
              for (Element z = 0; z < n; ++z) {
                const auto v = f[m(xy, b, z)];
                const auto bound =
                    kind == FuzzyKind::interior ? f[y] : std::min(f[x], f[z]);
                if (v < bound) return false;
              }
            }
          }
        }
      }
      return true;
    default:
      return false;
  }
}

}  // namespace

bool is_fuzzy(const GammaMagma& m, const FuzzySubset& f, FuzzyKind kind) {
  if (f.size() != m.order()) throw InputError("fuzzy subset length does not match structure order");
  const auto nums = f.numerators();
  switch (kind) {
    case FuzzyKind::subgroupoid:
    case FuzzyKind::left:
    case FuzzyKind::right:
    case FuzzyKind::generalized_bi:
    case FuzzyKind::interior:
      return pointwise_kind(m, nums, kind);
    case FuzzyKind::two_sided:
      return pointwise_kind(m, nums, FuzzyKind::left) && pointwise_kind(m, nums, FuzzyKind::right);
    case FuzzyKind::bi:
      return pointwise_kind(m, nums, FuzzyKind::subgroupoid) &&
             pointwise_kind(m, nums, FuzzyKind::generalized_bi);
    case FuzzyKind::quasi: {
      const auto s = FuzzySubset::one(m.order());
      return leq(meet(gamma_product(m, f, s), gamma_product(m, s, f)), f);
    }
    case FuzzyKind::idempotent:
      return gamma_product(m, f, f) == f;
  }
  return false;
}

FuzzyKindSet classify_fuzzy(const GammaMagma& m, const FuzzySubset& f) {
  if (f.size() != m.order()) throw InputError("fuzzy subset length does not match structure order");
  FuzzyKindSet kinds;
  const auto nums = f.numerators();
  const bool sub = pointwise_kind(m, nums, FuzzyKind::subgroupoid);
  const bool left = pointwise_kind(m, nums, FuzzyKind::left);
  const bool right = pointwise_kind(m, nums, FuzzyKind::right);
  const bool gen_bi = pointwise_kind(m, nums, FuzzyKind::generalized_bi);
  kinds.set(FuzzyKind::subgroupoid, sub);
  kinds.set(FuzzyKind::left, left);
  kinds.set(FuzzyKind::right, right);
  kinds.set(FuzzyKind::two_sided, left && right);
  kinds.set(FuzzyKind::generalized_bi, gen_bi);
  kinds.set(FuzzyKind::bi, gen_bi && sub);
  kinds.set(FuzzyKind::interior, pointwise_kind(m, nums, FuzzyKind::interior));
  kinds.set(FuzzyKind::quasi, is_fuzzy(m, f, FuzzyKind::quasi));
  kinds.set(FuzzyKind::idempotent, is_fuzzy(m, f, FuzzyKind::idempotent));
  return kinds;
}

// ---------------------------------------------------------------------------
// Crisp bridge

FuzzySubset characteristic(const CrispSubset& a) {
  std::vector<std::uint64_t> num(a.length());
  for (Element x = 0; x < a.length(); ++x) num[x] = a.contains(x) ? 1 : 0;
  return FuzzySubset(1, std::move(num));
}

CrispSubset level_cut(const FuzzySubset& f, Rational t) {
  if (t <= Rational(0)) throw InputError("level cut threshold must be positive");
  CrispSubset out(f.size());
  for (Element x = 0; x < f.size(); ++x) {
    if (f.value(x) >= t) out.insert(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lattice

Lattice::Lattice(std::uint64_t den) : den_(den) {
  if (den_ == 0) throw InputError("lattice denominator must be positive");
  if (den_ > 1000000) throw InputError("lattice denominator too large");
}

std::optional<std::uint64_t> Lattice::subset_count(std::size_t order) const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < order; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / (den_ + 1)) return std::nullopt;
    total *= den_ + 1;
  }
  return total;
}

FuzzySubset Lattice::subset(std::size_t order, std::uint64_t index) const {
  std::vector<std::uint64_t> num(order, 0);
  for (std::size_t i = order; i-- > 0;) {
    num[i] = index % (den_ + 1);
    index /= den_ + 1;
  }
  return FuzzySubset(den_, std::move(num));
}

}  // namespace agg
