#pragma once

// Shared fixtures and deliberately naive oracles. The oracles only read
// table cells and recompute everything else with plain loops and
// std::set, so they share no logic with the library kernels.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "agg/crisp.hpp"
#include "agg/fuzzy.hpp"
#include "agg/gamma_magma.hpp"
#include "agg/io.hpp"
#include "agg/rng.hpp"

namespace test {

inline std::string corpus(const std::string& name) {
  return std::string(AGG_CORPUS_DIR) + "/" + name + ".json";
}

inline agg::GammaMagma load(const std::string& name) { return agg::io::load_structure(corpus(name)); }

inline agg::GammaMagma magma(std::size_t n, std::vector<agg::Element> cells) {
  const auto k = cells.size() / (n * n);
  return agg::GammaMagma(n, agg::default_labels(k), std::move(cells));
}

// --- laws -----------------------------------------------------------------

inline bool naive_left_invertive(const agg::GammaMagma& m) {
  const auto n = m.order(), k = m.gamma_size();
  for (agg::Element x = 0; x < n; ++x)
    for (agg::Element y = 0; y < n; ++y)
      for (agg::Element z = 0; z < n; ++z)
        for (agg::Label a = 0; a < k; ++a)
          for (agg::Label b = 0; b < k; ++b)
            if (m(m(x, a, y), b, z) != m(m(z, a, y), b, x)) return false;
  return true;
}

inline bool naive_ag_star_star(const agg::GammaMagma& m) {
  const auto n = m.order(), k = m.gamma_size();
  for (agg::Element x = 0; x < n; ++x)
    for (agg::Element y = 0; y < n; ++y)
      for (agg::Element z = 0; z < n; ++z)
        for (agg::Label a = 0; a < k; ++a)
          for (agg::Label b = 0; b < k; ++b)
            if (m(x, a, m(y, b, z)) != m(y, a, m(x, b, z))) return false;
  return true;
}

// --- crisp ----------------------------------------------------------------

using Set = std::set<agg::Element>;

inline Set product(const agg::GammaMagma& m, const Set& a, const Set& b) {
  Set out;
  for (auto x : a)
    for (auto y : b)
      for (agg::Label g = 0; g < m.gamma_size(); ++g) out.insert(m(x, g, y));
  return out;
}

inline bool within(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Set all_of(const agg::GammaMagma& m) {
  Set s;
  for (agg::Element x = 0; x < m.order(); ++x) s.insert(x);
  return s;
}

inline Set from_mask(std::size_t n, std::uint64_t mask) {
  Set s;
  for (agg::Element x = 0; x < n; ++x)
    if ((mask >> x) & 1U) s.insert(x);
  return s;
}

inline bool naive_is(const agg::GammaMagma& m, const Set& a, agg::IdealKind kind) {
  const auto S = all_of(m);
  const auto sub = within(product(m, a, a), a);
  const auto left = within(product(m, S, a), a);
  const auto right = within(product(m, a, S), a);
  const auto gen_bi = within(product(m, product(m, a, S), a), a);
  switch (kind) {
    case agg::IdealKind::subgroupoid: return sub;
    case agg::IdealKind::left: return left;
    case agg::IdealKind::right: return right;
    case agg::IdealKind::two_sided: return left && right;
    case agg::IdealKind::bi: return gen_bi && sub;
    case agg::IdealKind::generalized_bi: return gen_bi;
    case agg::IdealKind::interior: return within(product(m, product(m, S, a), S), a);
    case agg::IdealKind::quasi: {
      const auto sa = product(m, S, a), as = product(m, a, S);
      Set both;
      std::set_intersection(sa.begin(), sa.end(), as.begin(), as.end(),
                            std::inserter(both, both.begin()));
      return within(both, a);
    }
  }
  return false;
}

// Non-empty subsets of kind `kind`, as ascending masks.
inline std::vector<std::uint64_t> naive_ideals(const agg::GammaMagma& m, agg::IdealKind kind) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.order()); ++mask) {
    if (naive_is(m, from_mask(m.order(), mask), kind)) out.push_back(mask);
  }
  return out;
}

// --- fuzzy ----------------------------------------------------------------

using Values = std::vector<agg::Rational>;

inline Values values(const agg::FuzzySubset& f) {
  Values v;
  for (agg::Element x = 0; x < f.size(); ++x) v.push_back(f.value(x));
  return v;
}

inline Values naive_product(const agg::GammaMagma& m, const Values& f, const Values& g) {
  Values out(m.order(), agg::Rational(0));
  for (agg::Element x = 0; x < m.order(); ++x)
    for (agg::Element y = 0; y < m.order(); ++y)
      for (agg::Label a = 0; a < m.gamma_size(); ++a) {
        auto& slot = out[m(x, a, y)];
        slot = std::max(slot, std::min(f[x], g[y]));
      }
  return out;
}

inline bool naive_leq(const Values& f, const Values& g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (g[i] < f[i]) return false;
  return true;
}

inline agg::FuzzySubset random_fuzzy(agg::CounterRng& rng, std::size_t n, std::uint64_t den) {
  std::vector<std::uint64_t> num(n);
  for (auto& v : num) v = rng.below(den + 1);
  return agg::FuzzySubset(den, std::move(num));
}

// --- isomorphism ----------------------------------------------------------

// Smallest image of the flat cell vector over all element permutations
// (and label permutations when `labels` is set), by brute force.
inline std::vector<agg::Element> naive_canonical(std::size_t n, std::size_t k,
                                                 const std::vector<agg::Element>& cells,
                                                 bool labels) {
  std::vector<agg::Element> s(n);
  std::iota(s.begin(), s.end(), 0);
  std::vector<agg::Label> p(k);
  std::iota(p.begin(), p.end(), 0);
  auto best = cells;
  do {
    do {
      std::vector<agg::Element> img(cells.size());
      for (agg::Label g = 0; g < k; ++g)
        for (agg::Element x = 0; x < n; ++x)
          for (agg::Element y = 0; y < n; ++y)
            img[(p[g] * n + s[x]) * n + s[y]] = s[cells[(g * n + x) * n + y]];
      best = std::min(best, img);
    } while (labels && std::next_permutation(p.begin(), p.end()));
  } while (std::next_permutation(s.begin(), s.end()));
  return best;
}

}  // namespace test
