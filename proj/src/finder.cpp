#include "agg/finder.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <numeric>

#include "agg/crisp.hpp"
#include "agg/error.hpp"

namespace agg {

std::string_view iso_mode_name(IsoMode mode) {
  return mode == IsoMode::elements_only ? "elements_only" : "elements_and_gamma";
}

IsoMode parse_iso_mode(std::string_view text) {
  if (text == "elements_only") return IsoMode::elements_only;
  if (text == "elements_and_gamma") return IsoMode::elements_and_gamma;
  throw InputError("unknown iso mode '" + std::string(text) + "'");
}

PartialResultError::PartialResultError(std::vector<GammaMagma> models,
                                       std::vector<std::vector<Element>> frontier,
                                       std::uint64_t nodes)
    : std::runtime_error("node budget exhausted after " + std::to_string(nodes) + " nodes; " +
                         std::to_string(models.size()) + " models emitted, " +
                         std::to_string(frontier.size()) + " subtrees unexplored"),
      models_(std::move(models)),
      frontier_(std::move(frontier)),
      nodes_(nodes) {}

namespace {

constexpr std::size_t kMaxOrder = 8;
constexpr std::size_t kMaxGamma = 4;

// Element (and optionally label) permutations acting on flat cell vectors.
// For each non-identity group element, image[q] = sigma[cells[src[q]]].
struct Group {
  std::vector<std::vector<Element>> sigma;
  std::vector<std::vector<std::uint32_t>> src;
};

Group build_group(std::size_t n, std::size_t k, IsoMode iso) {
  std::vector<Element> s(n);
  std::iota(s.begin(), s.end(), 0);
  std::vector<Label> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Label>> label_perms;
  if (iso == IsoMode::elements_and_gamma) {
    do label_perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  } else {
    label_perms.push_back(p);
  }

  Group grp;
  do {
    std::vector<Element> inv(n);
    for (Element x = 0; x < n; ++x) inv[s[x]] = x;
    for (const auto& pi : label_perms) {
      const bool identity =
          std::is_sorted(s.begin(), s.end()) && std::is_sorted(pi.begin(), pi.end());
      if (identity) continue;
      std::vector<Label> pinv(k);
      for (Label g = 0; g < k; ++g) pinv[pi[g]] = g;
      std::vector<std::uint32_t> src(k * n * n);
      for (Label g = 0; g < k; ++g) {
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            src[(g * n + x) * n + y] =
                static_cast<std::uint32_t>((pinv[g] * n + inv[x]) * n + inv[y]);
          }
        }
      }
      grp.sigma.push_back(s);
      grp.src.push_back(std::move(src));
    }
  } while (std::next_permutation(s.begin(), s.end()));
  return grp;
}

// True when some group image of the first `known` cells is already
// lexicographically smaller than the cells themselves.
bool beaten(const Group& grp, const std::vector<Element>& cells, std::size_t known) {
  for (std::size_t i = 0; i < grp.src.size(); ++i) {
    const auto& src = grp.src[i];
    const auto& sigma = grp.sigma[i];
    for (std::size_t q = 0; q < known; ++q) {
      const auto s = src[q];
      if (s >= known) break;
      const auto image = sigma[cells[s]];
      if (image < cells[q]) return true;
      if (image > cells[q]) break;
    }
  }
  return false;
}

class Search {
 public:
  explicit Search(const SearchSpec& spec)
      : spec_(spec),
        n_(spec.order),
        k_(spec.gamma),
        total_(spec.order * spec.order * spec.gamma),
        group_(build_group(spec.order, spec.gamma, spec.iso)) {
    for (Law law : spec.laws) {
      if (law == Law::has_left_identity) continue;
      if (std::find(propagated_.begin(), propagated_.end(), law) == propagated_.end()) {
        propagated_.push_back(law);
      }
    }
    band_ = std::find(propagated_.begin(), propagated_.end(), Law::band) != propagated_.end();
    commutative_ =
        std::find(propagated_.begin(), propagated_.end(), Law::commutative) != propagated_.end();
  }

  std::size_t total() const { return total_; }

  // Candidate values for cell q given the cells before it.
  std::pair<Element, Element> domain(const std::vector<Element>& cells, std::size_t q) const {
    const auto g = q / (n_ * n_);
    const auto x = (q / n_) % n_;
    const auto y = q % n_;
    if (band_ && x == y) return {static_cast<Element>(x), static_cast<Element>(x)};
    if (commutative_ && x > y) {
      const auto v = cells[(g * n_ + y) * n_ + x];
      return {v, v};
    }
    return {0, static_cast<Element>(n_ - 1)};
  }

  // Partial consistency of the first `known` cells.
  bool consistent(const std::vector<Element>& cells, std::size_t known) const {
    for (Law law : propagated_) {
      if (!law_consistent(cells, law)) return false;
    }
    return !beaten(group_, cells, known);
  }

  // Leaf acceptance: post-hoc law check plus filters.
  std::optional<GammaMagma> accept(const std::vector<Element>& cells) const {
    GammaMagma m(n_, default_labels(k_), cells);
    for (Law law : spec_.laws) {
      if (!law_holds(m, law)) return std::nullopt;
    }
    if (spec_.intra_regular && !is_intra_regular(m)) return std::nullopt;
    return m;
  }

  struct Limits {
    std::atomic<std::uint64_t>* nodes;
    std::uint64_t budget;
  };

  // Depth-first search below the first `start` assigned cells. Returns
  // false if the budget ran out; `stop_path` then holds the prefix where
  // the search stopped.
  bool run(std::vector<Element> cells, std::size_t start, const Limits& lim,
           std::vector<GammaMagma>& out, std::vector<Element>* stop_path) const {
    return dfs(cells, start, start, lim, out, stop_path);
  }

  // All consistent prefixes of length `depth`, in lexicographic order.
  void prefixes(std::vector<Element>& cells, std::size_t q, std::size_t depth,
                std::vector<std::vector<Element>>& out, std::uint64_t& nodes) const {
    if (q == depth) {
      out.emplace_back(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(depth));
      return;
    }
    const auto [lo, hi] = domain(cells, q);
    for (Element v = lo; v <= hi; ++v) {
      cells[q] = v;
      ++nodes;
      if (consistent(cells, q + 1)) prefixes(cells, q + 1, depth, out, nodes);
    }
    cells[q] = unknown();
  }

  Element unknown() const { return static_cast<Element>(n_); }

 private:
  bool dfs(std::vector<Element>& cells, std::size_t q, std::size_t start, const Limits& lim,
           std::vector<GammaMagma>& out, std::vector<Element>* stop_path) const {
    if (q == total_) {
      if (auto m = accept(cells)) out.push_back(std::move(*m));
      return true;
    }
    const auto [lo, hi] = domain(cells, q);
    for (Element v = lo; v <= hi; ++v) {
      if (lim.nodes->fetch_add(1, std::memory_order_relaxed) >= lim.budget) {
        if (stop_path) stop_path->assign(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(q));
        cells[q] = unknown();
        return false;
      }
      cells[q] = v;
      if (consistent(cells, q + 1) && !dfs(cells, q + 1, start, lim, out, stop_path)) {
        cells[q] = unknown();
        return false;
      }
    }
    cells[q] = unknown();
    return true;
  }

  Element op(const std::vector<Element>& c, Element x, Label g, Element y) const {
    if (x >= n_ || y >= n_) return unknown();
    return c[(g * n_ + x) * n_ + y];
  }

  // Checks every instance whose cells are all known.
  bool law_consistent(const std::vector<Element>& c, Law law) const {
    const auto U = unknown();
    const auto n = static_cast<Element>(n_);
    const auto k = static_cast<Label>(k_);
    auto differ = [U](Element l, Element r) { return l != U && r != U && l != r; };
    switch (law) {
      case Law::left_invertive:
        for (Label a = 0; a < k; ++a)
          for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) {
              const auto xy = op(c, x, a, y);
              if (xy == U) continue;
              for (Element z = 0; z < n; ++z) {
                const auto zy = op(c, z, a, y);
                if (zy == U) continue;
                for (Label b = 0; b < k; ++b) {
                  if (differ(op(c, xy, b, z), op(c, zy, b, x))) return false;
                }
              }
            }
        return true;
      case Law::ag_star_star:
        for (Label b = 0; b < k; ++b)
          for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z) {
              const auto yz = op(c, y, b, z);
              if (yz == U) continue;
              for (Element x = 0; x < n; ++x) {
                const auto xz = op(c, x, b, z);
                if (xz == U) continue;
                for (Label a = 0; a < k; ++a) {
                  if (differ(op(c, x, a, yz), op(c, y, a, xz))) return false;
                }
              }
            }
        return true;
      case Law::associative:
        for (Label a = 0; a < k; ++a)
          for (Label b = 0; b < k; ++b)
            for (Element x = 0; x < n; ++x)
              for (Element y = 0; y < n; ++y) {
                const auto xy = op(c, x, a, y);
                if (xy == U) continue;
                for (Element z = 0; z < n; ++z) {
                  if (differ(op(c, xy, b, z), op(c, x, a, op(c, y, b, z)))) return false;
                }
              }
        return true;
      case Law::medial:
      case Law::paramedial:
        for (Label a = 0; a < k; ++a)
          for (Label g = 0; g < k; ++g)
            for (Element w = 0; w < n; ++w)
              for (Element x = 0; x < n; ++x) {
                const auto wx = op(c, w, a, x);
                if (wx == U) continue;
                for (Element y = 0; y < n; ++y)
                  for (Element z = 0; z < n; ++z) {
                    const auto yz = op(c, y, g, z);
                    if (yz == U) continue;
                    const bool medial = law == Law::medial;
                    const auto l2 = medial ? op(c, w, a, y) : op(c, z, a, y);
                    const auto r2 = medial ? op(c, x, g, z) : op(c, x, g, w);
                    if (l2 == U || r2 == U) continue;
                    for (Label b = 0; b < k; ++b) {
                      if (differ(op(c, wx, b, yz), op(c, l2, b, r2))) return false;
                    }
                  }
              }
        return true;
      case Law::commutative:
        for (Label a = 0; a < k; ++a)
          for (Element x = 0; x < n; ++x)
            for (Element y = x + 1; y < n; ++y) {
              if (differ(op(c, x, a, y), op(c, y, a, x))) return false;
            }
        return true;
      case Law::band:
        for (Label a = 0; a < k; ++a)
          for (Element x = 0; x < n; ++x) {
            if (differ(op(c, x, a, x), x)) return false;
          }
        return true;
      case Law::has_left_identity:
        return true;
    }
    return true;
  }

  const SearchSpec& spec_;
  std::size_t n_;
  std::size_t k_;
  std::size_t total_;
  Group group_;
  std::vector<Law> propagated_;
  bool band_ = false;
  bool commutative_ = false;
};

void validate(const SearchSpec& spec) {
  if (spec.order < 1 || spec.order > kMaxOrder) {
    throw InputError("order must be in 1.." + std::to_string(kMaxOrder));
  }
  if (spec.gamma < 1 || spec.gamma > kMaxGamma) {
    throw InputError("gamma size must be in 1.." + std::to_string(kMaxGamma));
  }
  if (spec.budget == 0) throw InputError("node budget must be positive");
}

}  // namespace

std::vector<GammaMagma> enumerate_models(const SearchSpec& spec, Exec exec, SearchStats* stats) {
  validate(spec);
  const Search search(spec);
  std::atomic<std::uint64_t> nodes{0};
  const Search::Limits lim{&nodes, spec.budget};
  std::vector<Element> cells(search.total(), search.unknown());
  std::vector<GammaMagma> out;

  if (exec == Exec::serial) {
    std::vector<Element> stop;
    if (!search.run(cells, 0, lim, out, &stop)) {
      throw PartialResultError(std::move(out), {stop}, nodes.load());
    }
  } else {
    // Split at the shallowest depth giving enough independent subtrees.
    const std::size_t want = 64 * static_cast<std::size_t>(std::max(1, jobs()));
    std::size_t depth = 0;
    for (std::uint64_t width = 1; depth < search.total() && width < want; ++depth) {
      width *= spec.order;
    }
    std::uint64_t prefix_nodes = 0;
    std::vector<std::vector<Element>> units;
    search.prefixes(cells, 0, depth, units, prefix_nodes);
    nodes += prefix_nodes;

    std::vector<std::vector<GammaMagma>> results(units.size());
    std::vector<std::uint8_t> finished(units.size(), 0);
    const auto count = static_cast<std::int64_t>(units.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t u = 0; u < count; ++u) {
      const auto i = static_cast<std::size_t>(u);
      std::vector<Element> local(search.total(), search.unknown());
      std::copy(units[i].begin(), units[i].end(), local.begin());
      finished[i] = search.run(std::move(local), depth, lim, results[i], nullptr) ? 1 : 0;
    }

    std::vector<std::vector<Element>> frontier;
    bool complete = true;
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (!finished[i]) complete = false;
      if (complete) {
        for (auto& m : results[i]) out.push_back(std::move(m));
      } else {
        frontier.push_back(units[i]);
      }
    }
    if (!complete) throw PartialResultError(std::move(out), std::move(frontier), nodes.load());
  }

  if (stats) {
    stats->nodes = nodes.load();
    stats->models = out.size();
  }
  return out;
}

namespace {

// Streams the orbit instead of materializing the group, so larger
// structures stay cheap in memory.
std::vector<Element> orbit_min(const GammaMagma& m, IsoMode iso) {
  const auto n = m.order();
  const auto k = m.gamma_size();
  const auto& cells = m.cells();
  std::vector<Element> best(cells.begin(), cells.end());
  std::vector<Element> image(cells.size());
  std::vector<Element> s(n);
  std::iota(s.begin(), s.end(), 0);
  std::vector<Label> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    do {
      for (Label g = 0; g < k; ++g)
        for (Element x = 0; x < n; ++x)
          for (Element y = 0; y < n; ++y)
            image[(p[g] * n + s[x]) * n + s[y]] = s[cells[(g * n + x) * n + y]];
      if (image < best) best = image;
    } while (iso == IsoMode::elements_and_gamma && std::next_permutation(p.begin(), p.end()));
  } while (std::next_permutation(s.begin(), s.end()));
  return best;
}

constexpr std::size_t kMaxIsoOrder = 9;

void check_group_size(const GammaMagma& m) {
  if (m.order() > kMaxIsoOrder || m.gamma_size() > kMaxGamma) {
    throw CapacityError("isomorphism checks support order <= " + std::to_string(kMaxIsoOrder) +
                        " and at most " + std::to_string(kMaxGamma) + " labels");
  }
}

}  // namespace

bool is_canonical(const GammaMagma& m, IsoMode iso) {
  check_group_size(m);
  const auto best = orbit_min(m, iso);
  return std::equal(best.begin(), best.end(), m.cells().begin(), m.cells().end());
}

GammaMagma canonical_form(const GammaMagma& m, IsoMode iso) {
  check_group_size(m);
  return GammaMagma(m.order(), m.labels(), orbit_min(m, iso));
}

bool isomorphic(const GammaMagma& a, const GammaMagma& b, IsoMode iso) {
  if (a.order() != b.order() || a.gamma_size() != b.gamma_size()) return false;
  check_group_size(a);
  return orbit_min(a, iso) == orbit_min(b, iso);
}

std::string canonical_hash(const GammaMagma& m, IsoMode iso) {
  check_group_size(m);
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(m.order());
  mix(m.gamma_size());
  for (auto v : orbit_min(m, iso)) mix(v);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string_view structure_property_name(StructureProperty p) {
  switch (p) {
    case StructureProperty::non_factorizable_element: return "non_factorizable_element";
    case StructureProperty::non_commutative_ag: return "non_commutative_ag";
    case StructureProperty::ag_not_ag_star_star: return "ag_not_ag_star_star";
  }
  return "?";
}

StructureProperty parse_structure_property(std::string_view text) {
  for (auto p : {StructureProperty::non_factorizable_element, StructureProperty::non_commutative_ag,
                 StructureProperty::ag_not_ag_star_star}) {
    if (structure_property_name(p) == text) return p;
  }
  throw InputError("unknown property '" + std::string(text) + "'");
}

std::optional<GammaMagma> find_counterexample_structure(StructureProperty p, std::size_t max_order,
                                                        std::uint64_t budget, Exec exec) {
  auto has = [p](const GammaMagma& m) {
    switch (p) {
      case StructureProperty::non_factorizable_element: return !every_element_factorizable(m);
      case StructureProperty::non_commutative_ag: return !law_holds(m, Law::commutative);
      case StructureProperty::ag_not_ag_star_star: return !law_holds(m, Law::ag_star_star);
    }
    return false;
  };
  for (std::size_t n = 1; n <= max_order; ++n) {
    SearchSpec spec;
    spec.order = n;
    spec.laws = {Law::left_invertive};
    spec.budget = budget;
    for (auto& m : enumerate_models(spec, exec)) {
      if (has(m)) return m;
    }
  }
  return std::nullopt;
}

}  // namespace agg
