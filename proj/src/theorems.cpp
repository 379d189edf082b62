#include "agg/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>

#include "agg/error.hpp"
#include "agg/laws.hpp"
#include "agg/rng.hpp"

namespace agg {

std::string_view hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::gamma_ag: return "gamma_ag";
    case Hypothesis::ag_star_star: return "ag_star_star";
    case Hypothesis::intra_regular: return "intra_regular";
    case Hypothesis::every_element_factorizable: return "every_element_factorizable";
  }
  return "?";
}

HypothesisSet satisfied_hypotheses(const GammaMagma& m) {
  HypothesisSet out;
  const bool ag = law_holds(m, Law::left_invertive);
  out.set(Hypothesis::gamma_ag, ag);
  out.set(Hypothesis::ag_star_star, ag && law_holds(m, Law::ag_star_star));
  out.set(Hypothesis::intra_regular, is_intra_regular(m));
  out.set(Hypothesis::every_element_factorizable, every_element_factorizable(m));
  return out;
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::leq: return "leq";
    case Relation::implies: return "implies";
    case Relation::iff: return "iff";
  }
  return "?";
}

bool violates(Relation r, const Side& lhs, const Side& rhs) {
  if (lhs.index() != rhs.index()) throw InputError("sides of different types");
  if (const auto* a = std::get_if<bool>(&lhs)) {
    const bool b = std::get<bool>(rhs);
    switch (r) {
      case Relation::implies: return *a && !b;
      case Relation::leq: return *a && !b;
      case Relation::equal:
      case Relation::iff: return *a != b;
    }
    return false;
  }
  const auto& f = std::get<FuzzySubset>(lhs);
  const auto& g = std::get<FuzzySubset>(rhs);
  if (r == Relation::leq) return !leq(f, g);
  return !(f == g);
}

Mode parse_mode(std::string_view text) {
  if (text == "exhaustive") return Mode::exhaustive();
  constexpr std::string_view prefix = "sampled:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto rest = text.substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon != std::string_view::npos) {
      std::uint64_t seed{}, n{};
      const auto s1 = rest.substr(0, colon);
      const auto s2 = rest.substr(colon + 1);
      auto r1 = std::from_chars(s1.data(), s1.data() + s1.size(), seed);
      auto r2 = std::from_chars(s2.data(), s2.data() + s2.size(), n);
      if (!s1.empty() && !s2.empty() && r1.ec == std::errc{} && r2.ec == std::errc{} &&
          r1.ptr == s1.data() + s1.size() && r2.ptr == s2.data() + s2.size() && n > 0) {
        return Mode::sampled(seed, n);
      }
    }
  }
  throw InputError("mode must be 'exhaustive' or 'sampled:SEED:N', got '" + std::string(text) +
                   "'");
}

std::string mode_text(const Mode& mode) {
  if (mode.kind == Mode::Kind::exhaustive) return "exhaustive";
  return "sampled:" + std::to_string(mode.seed) + ":" + std::to_string(mode.samples);
}

std::string_view verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::counterexample: return "counterexample";
    case VerdictStatus::hypothesis_not_met: return "hypothesis_not_met";
    case VerdictStatus::capacity_exceeded: return "capacity_exceeded";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Statement representation

struct Context {
  const GammaMagma& m;
  Lattice lattice;
  std::uint64_t budget;
  FuzzySubset S;
  std::vector<FuzzySubset> family;  // L_d two-sided ideals, when a theorem needs them
  // Products of L_d-valued subsets stay L_d-valued, so on small lattices
  // every product is tabulated by lattice index.
  std::uint64_t raw = 0;
  std::vector<std::uint32_t> products;

  Context(const GammaMagma& mag, Lattice lat, std::uint64_t b)
      : m(mag), lattice(lat), budget(b), S(FuzzySubset::one(mag.order())) {}

  std::optional<std::uint64_t> index_of(const FuzzySubset& f) const {
    if (f.den() != lattice.den()) return std::nullopt;
    std::uint64_t idx = 0;
    for (auto v : f.numerators()) idx = idx * (lattice.den() + 1) + v;
    return idx;
  }

  void tabulate_products(Exec exec) {
    const auto count = lattice.subset_count(m.order());
    if (!count || *count > kMaxTabulated) return;
    raw = *count;
    products.assign(raw * raw, 0);
    const auto n = m.order();
    const auto t = static_cast<std::int64_t>(raw);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (std::int64_t i = 0; i < t; ++i) {
      const auto f = lattice.subset(n, static_cast<std::uint64_t>(i));
      for (std::uint64_t j = 0; j < raw; ++j) {
        const auto p = gamma_product(m, f, lattice.subset(n, j), Exec::serial);
        products[static_cast<std::uint64_t>(i) * raw + j] = static_cast<std::uint32_t>(*index_of(p));
      }
    }
  }

  FuzzySubset P(const FuzzySubset& a, const FuzzySubset& b) const {
    if (!products.empty()) {
      const auto i = index_of(a);
      const auto j = index_of(b);
      if (i && j) return lattice.subset(m.order(), products[*i * raw + *j]);
    }
    return gamma_product(m, a, b, Exec::serial);
  }

  static constexpr std::uint64_t kMaxTabulated = 1024;
  bool is(const FuzzySubset& f, FuzzyKind k) const { return is_fuzzy(m, f, k); }
};

struct Outcome {
  Side lhs;
  Side rhs;
  std::string detail;
};

using Premise = std::function<bool(const Context&, const FuzzySubset&)>;
using Evaluator = std::function<Outcome(const Context&, std::span<const FuzzySubset>)>;

struct Case {
  std::string text;
  Relation relation;
  std::vector<Premise> premises;  // one per quantified subset; empty = unconstrained
  Evaluator eval;
};

struct Theorem {
  TheoremInfo info;
  std::vector<Case> cases;
  bool needs_family = false;
};

Premise kind(FuzzyKind k) {
  return [k](const Context& c, const FuzzySubset& f) { return c.is(f, k); };
}
Premise all_of(FuzzyKind a, FuzzyKind b) {
  return [a, b](const Context& c, const FuzzySubset& f) { return c.is(f, a) && c.is(f, b); };
}
const Premise any;

Outcome bools(bool l, bool r, std::string detail = {}) { return {l, r, std::move(detail)}; }
Outcome fuzz(FuzzySubset l, FuzzySubset r) { return {std::move(l), std::move(r), {}}; }

// Implication from a single-subset predicate to a kind.
Case implies_kind(std::string text, Premise premise, FuzzyKind conclusion) {
  return Case{std::move(text), Relation::implies, {any},
              [premise, conclusion](const Context& c, std::span<const FuzzySubset> fs) {
                return bools(premise(c, fs[0]), c.is(fs[0], conclusion));
              }};
}

Case iff_kinds(std::string text, FuzzyKind a, FuzzyKind b) {
  return Case{std::move(text), Relation::iff, {any},
              [a, b](const Context& c, std::span<const FuzzySubset> fs) {
                return bools(c.is(fs[0], a), c.is(fs[0], b));
              }};
}

// Family-level predicates over the L_d two-sided ideals.
bool strongly_irreducible(const Context& c, const FuzzySubset& f) {
  for (const auto& g : c.family) {
    for (const auto& h : c.family) {
      if (leq(meet(g, h), f) && !leq(g, f) && !leq(h, f)) return false;
    }
  }
  return true;
}

bool prime(const Context& c, const FuzzySubset& f) {
  for (const auto& g : c.family) {
    for (const auto& h : c.family) {
      if (leq(c.P(g, h), f) && !leq(g, f) && !leq(h, f)) return false;
    }
  }
  return true;
}

bool is_chain(const std::vector<FuzzySubset>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!leq(family[i], family[j]) && !leq(family[j], family[i])) return false;
    }
  }
  return true;
}

void check_semilattice(const GammaMagma& m, SemilatticeReport& r) {
  const auto S = FuzzySubset::one(m.order());
  const auto& I = r.ideals;
  auto fail = [&r](bool& flag, std::string what, std::vector<FuzzySubset> w) {
    flag = false;
    if (r.violation.empty()) {
      r.violation = std::move(what);
      r.witnesses = std::move(w);
    }
  };
  const bool s_in_family = std::find(I.begin(), I.end(), S) != I.end();
  if (!s_in_family) fail(r.identity, "S is not a two-sided ideal", {});
  for (const auto& f : I) {
    if (!(gamma_product(m, f, f) == f)) fail(r.idempotent, "f o f != f", {f});
    if (!(gamma_product(m, f, S) == f) || !(gamma_product(m, S, f) == f)) {
      fail(r.identity, "f o S != f or S o f != f", {f});
    }
  }
  std::vector<FuzzySubset> products(I.size() * I.size());
  for (std::size_t i = 0; i < I.size(); ++i) {
    for (std::size_t j = 0; j < I.size(); ++j) {
      auto p = gamma_product(m, I[i], I[j]);
      if (!is_fuzzy(m, p, FuzzyKind::two_sided)) fail(r.closed, "f o g is not two-sided", {I[i], I[j]});
      products[i * I.size() + j] = std::move(p);
    }
  }
  for (std::size_t i = 0; i < I.size(); ++i) {
    for (std::size_t j = i + 1; j < I.size(); ++j) {
      if (!(products[i * I.size() + j] == products[j * I.size() + i])) {
        fail(r.commutative, "f o g != g o f", {I[i], I[j]});
      }
    }
  }
  for (std::size_t i = 0; i < I.size(); ++i) {
    for (std::size_t j = 0; j < I.size(); ++j) {
      const auto& fg = products[i * I.size() + j];
      for (std::size_t k = 0; k < I.size(); ++k) {
        const auto lhs = gamma_product(m, fg, I[k]);
        const auto rhs = gamma_product(m, I[i], products[j * I.size() + k]);
        if (!(lhs == rhs)) fail(r.associative, "(f o g) o h != f o (g o h)", {I[i], I[j], I[k]});
      }
    }
  }
}

HypothesisSet hyps(std::initializer_list<Hypothesis> h) { return HypothesisSet(h); }

std::vector<Theorem> build_registry() {
  using H = Hypothesis;
  using K = FuzzyKind;
  const auto AG = hyps({H::gamma_ag});
  const auto AGSS = hyps({H::gamma_ag, H::ag_star_star});
  const auto IR = hyps({H::gamma_ag, H::intra_regular});
  const auto IRSS = hyps({H::gamma_ag, H::ag_star_star, H::intra_regular});

  std::vector<Theorem> r;
  auto add = [&r](std::string id, HypothesisSet h, std::string statement, std::vector<Case> cases,
                  bool family = false) {
    const auto arity = cases.empty() ? 0 : cases.front().premises.size();
    r.push_back(Theorem{TheoremInfo{std::move(id), h, std::move(statement), arity},
                        std::move(cases), family});
  };

  add("sf", AG, "S o f = f for every fuzzy left ideal f",
      {{"S o f = f", Relation::equal, {kind(K::left)},
        [](const Context& c, auto fs) { return fuzz(c.P(c.S, fs[0]), fs[0]); }}});

  add("trm_i", AG, "(f o g) o h = (h o g) o f",
      {{"(f o g) o h = (h o g) o f", Relation::equal, {any, any, any},
        [](const Context& c, auto fs) {
          return fuzz(c.P(c.P(fs[0], fs[1]), fs[2]), c.P(c.P(fs[2], fs[1]), fs[0]));
        }}});

  add("trm_ii", AG, "(f o g) o (h o k) = (f o h) o (g o k)",
      {{"(f o g) o (h o k) = (f o h) o (g o k)", Relation::equal, {any, any, any, any},
        [](const Context& c, auto fs) {
          return fuzz(c.P(c.P(fs[0], fs[1]), c.P(fs[2], fs[3])),
                      c.P(c.P(fs[0], fs[2]), c.P(fs[1], fs[3])));
        }}});

  add("agss_i", AGSS, "f o (g o h) = g o (f o h)",
      {{"f o (g o h) = g o (f o h)", Relation::equal, {any, any, any},
        [](const Context& c, auto fs) {
          return fuzz(c.P(fs[0], c.P(fs[1], fs[2])), c.P(fs[1], c.P(fs[0], fs[2])));
        }}});

  add("agss_ii", AGSS, "(f o g) o (h o k) = (k o h) o (g o f)",
      {{"(f o g) o (h o k) = (k o h) o (g o f)", Relation::equal, {any, any, any, any},
        [](const Context& c, auto fs) {
          return fuzz(c.P(c.P(fs[0], fs[1]), c.P(fs[2], fs[3])),
                      c.P(c.P(fs[3], fs[2]), c.P(fs[1], fs[0])));
        }}});

  add("fghj_i", AG, "f is a fuzzy subgroupoid iff f o f <= f",
      {{"subgroupoid(f) iff f o f <= f", Relation::iff, {any},
        [](const Context& c, auto fs) {
          return bools(c.is(fs[0], K::subgroupoid), leq(c.P(fs[0], fs[0]), fs[0]));
        }}});

  add("fghj_ii", AG, "f is a fuzzy left (right) ideal iff S o f <= f (f o S <= f)",
      {{"left(f) iff S o f <= f", Relation::iff, {any},
        [](const Context& c, auto fs) {
          return bools(c.is(fs[0], K::left), leq(c.P(c.S, fs[0]), fs[0]));
        }},
       {"right(f) iff f o S <= f", Relation::iff, {any},
        [](const Context& c, auto fs) {
          return bools(c.is(fs[0], K::right), leq(c.P(fs[0], c.S), fs[0]));
        }}});

  add("fghj_iii", AG, "f is a fuzzy two-sided ideal iff S o f <= f and f o S <= f",
      {{"two_sided(f) iff (S o f <= f and f o S <= f)", Relation::iff, {any},
        [](const Context& c, auto fs) {
          return bools(c.is(fs[0], K::two_sided),
                       leq(c.P(c.S, fs[0]), fs[0]) && leq(c.P(fs[0], c.S), fs[0]));
        }}});

  add("bi_lemma", AG, "a fuzzy subgroupoid f is a bi-ideal iff (f o S) o f <= f",
      {{"bi(f) iff (f o S) o f <= f", Relation::iff, {kind(K::subgroupoid)},
        [](const Context& c, auto fs) {
          return bools(c.is(fs[0], K::bi), leq(c.P(c.P(fs[0], c.S), fs[0]), fs[0]));
        }}});

  add("rl_cap_quasi", AG, "f right ideal, g left ideal => min(f, g) is a quasi-ideal",
      {{"quasi(min(f, g))", Relation::implies, {kind(K::right), kind(K::left)},
        [](const Context& c, auto fs) { return bools(true, c.is(meet(fs[0], fs[1]), K::quasi)); }}});

  add("qqq", AG, "every fuzzy quasi-ideal is a fuzzy subgroupoid",
      {implies_kind("quasi(f) => subgroupoid(f)", kind(K::quasi), K::subgroupoid)});

  add("idem_quasi_bi", AG, "every idempotent fuzzy quasi-ideal is a fuzzy bi-ideal",
      {implies_kind("quasi(f) and idempotent(f) => bi(f)", all_of(K::quasi, K::idempotent),
                    K::bi)});

  add("onesided_quasi", AG, "every fuzzy left or right ideal is a fuzzy quasi-ideal",
      {implies_kind("left(f) => quasi(f)", kind(K::left), K::quasi),
       implies_kind("right(f) => quasi(f)", kind(K::right), K::quasi)});

  add("onesided_genbi", AG, "every fuzzy left or right ideal is a fuzzy generalized bi-ideal",
      {implies_kind("left(f) => generalized_bi(f)", kind(K::left), K::generalized_bi),
       implies_kind("right(f) => generalized_bi(f)", kind(K::right), K::generalized_bi)});

  add("idemquasi_prod_bi", AGSS,
      "f an idempotent fuzzy quasi-ideal => f o g and g o f are fuzzy bi-ideals",
      {{"bi(f o g)", Relation::implies, {all_of(K::quasi, K::idempotent), any},
        [](const Context& c, auto fs) { return bools(true, c.is(c.P(fs[0], fs[1]), K::bi)); }},
       {"bi(g o f)", Relation::implies, {all_of(K::quasi, K::idempotent), any},
        [](const Context& c, auto fs) { return bools(true, c.is(c.P(fs[1], fs[0]), K::bi)); }}});

  add("prod_onesided", AGSS, "the product of two fuzzy left (right) ideals is a left (right) ideal",
      {{"left(f), left(g) => left(f o g)", Relation::implies, {kind(K::left), kind(K::left)},
        [](const Context& c, auto fs) { return bools(true, c.is(c.P(fs[0], fs[1]), K::left)); }},
       {"right(f), right(g) => right(f o g)", Relation::implies,
        {kind(K::right), kind(K::right)},
        [](const Context& c, auto fs) {
          return bools(true, c.is(c.P(fs[0], fs[1]), K::right));
        }}});

  add("llb", IR, "f is a fuzzy right ideal iff it is a fuzzy left ideal",
      {iff_kinds("right(f) iff left(f)", K::right, K::left)});

  add("left_idem", IRSS, "every fuzzy left ideal is idempotent",
      {implies_kind("left(f) => f o f = f", kind(K::left), K::idempotent)});

  add("two_sided_idem", IRSS, "every fuzzy two-sided ideal is idempotent",
      {implies_kind("two_sided(f) => f o f = f", kind(K::two_sided), K::idempotent)});

  add("cap_eq_prod", IRSS, "min(f, g) = f o g for f a fuzzy right ideal and g a fuzzy left ideal",
      {{"min(f, g) = f o g", Relation::equal, {kind(K::right), kind(K::left)},
        [](const Context& c, auto fs) { return fuzz(meet(fs[0], fs[1]), c.P(fs[0], fs[1])); }}});

  add("cap_eq_prod_rr", IRSS, "min(f, g) = f o g for fuzzy right ideals f and g",
      {{"min(f, g) = f o g", Relation::equal, {kind(K::right), kind(K::right)},
        [](const Context& c, auto fs) { return fuzz(meet(fs[0], fs[1]), c.P(fs[0], fs[1])); }}});

  add("semi1", IRSS,
      "the fuzzy two-sided ideals form a semilattice under o with identity S",
      {{"semilattice(two-sided ideals)", Relation::implies, {},
        [](const Context& c, auto) {
          SemilatticeReport rep;
          rep.ideals = c.family;
          check_semilattice(c.m, rep);
          return bools(true, rep.ok(), rep.violation);
        }}},
      true);

  add("irr_iff_prime", IRSS,
      "a fuzzy two-sided ideal is strongly irreducible iff it is prime",
      {{"strongly_irreducible(f) iff prime(f)", Relation::iff, {kind(K::two_sided)},
        [](const Context& c, auto fs) {
          return bools(strongly_irreducible(c, fs[0]), prime(c, fs[0]));
        }}},
      true);

  add("all_prime_iff_chain", IRSS,
      "every fuzzy two-sided ideal is prime iff the two-sided ideals are totally ordered",
      {{"all prime iff chain", Relation::iff, {},
        [](const Context& c, auto) {
          bool all = true;
          for (const auto& f : c.family) {
            if (!prime(c, f)) {
              all = false;
              break;
            }
          }
          return bools(all, is_chain(c.family));
        }}},
      true);

  add("inte", IRSS, "two-sided ideal iff interior ideal",
      {iff_kinds("two_sided(f) iff interior(f)", K::two_sided, K::interior)});
  add("q2", IRSS, "two-sided ideal iff quasi-ideal",
      {iff_kinds("two_sided(f) iff quasi(f)", K::two_sided, K::quasi)});
  add("gener", IRSS, "bi-ideal iff generalized bi-ideal",
      {iff_kinds("bi(f) iff generalized_bi(f)", K::bi, K::generalized_bi)});
  add("bii", IRSS, "two-sided ideal iff bi-ideal",
      {iff_kinds("two_sided(f) iff bi(f)", K::two_sided, K::bi)});

  add("bi_fixedpoint", IRSS, "bi-ideal iff (f o S) o f = f and f o f = f",
      {{"bi(f) iff ((f o S) o f = f and f o f = f)", Relation::iff, {any},
        [](const Context& c, auto fs) {
          const auto& f = fs[0];
          return bools(c.is(f, K::bi), c.P(c.P(f, c.S), f) == f && c.P(f, f) == f);
        }}});

  add("interior_fixedpoint", IRSS, "interior ideal iff (S o f) o S = f",
      {{"interior(f) iff (S o f) o S = f", Relation::iff, {any},
        [](const Context& c, auto fs) {
          return bools(c.is(fs[0], K::interior), c.P(c.P(c.S, fs[0]), c.S) == fs[0]);
        }}});

  add("l145", IRSS, "S o f = f = f o S for every fuzzy left ideal f",
      {{"S o f = f", Relation::equal, {kind(K::left)},
        [](const Context& c, auto fs) { return fuzz(c.P(c.S, fs[0]), fs[0]); }},
       {"f o S = f", Relation::equal, {kind(K::left)},
        [](const Context& c, auto fs) { return fuzz(c.P(fs[0], c.S), fs[0]); }}});

  add("grand_equiv", IRSS,
      "left, right, two-sided, bi, generalized bi, interior, quasi and S o f = f = f o S coincide",
      {{"left(f) iff condition", Relation::iff, {any},
        [](const Context& c, auto fs) {
          const auto& f = fs[0];
          const auto kinds = classify_fuzzy(c.m, f);
          const std::pair<const char*, bool> conds[] = {
              {"left", kinds.contains(K::left)},
              {"right", kinds.contains(K::right)},
              {"two_sided", kinds.contains(K::two_sided)},
              {"bi", kinds.contains(K::bi)},
              {"generalized_bi", kinds.contains(K::generalized_bi)},
              {"interior", kinds.contains(K::interior)},
              {"quasi", kinds.contains(K::quasi)},
              {"S o f = f = f o S", c.P(c.S, f) == f && c.P(f, c.S) == f},
          };
          for (const auto& [name, value] : conds) {
            if (value != conds[0].second) return bools(conds[0].second, value, name);
          }
          return bools(conds[0].second, conds[0].second);
        }}});

  return r;
}

const std::vector<Theorem>& registry() {
  static const std::vector<Theorem> r = build_registry();
  return r;
}

const Theorem& find_theorem(std::string_view id) {
  for (const auto& t : registry()) {
    if (t.info.id == id) return t;
  }
  throw InputError("unknown theorem id '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// Search

std::uint64_t raw_space(const Context& c) {
  const auto count = c.lattice.subset_count(c.m.order());
  if (!count || *count > c.budget) {
    throw CapacityError("(d+1)^n = " + (count ? std::to_string(*count) : std::string("overflow")) +
                        " L_d-valued subsets exceed the budget of " + std::to_string(c.budget));
  }
  return *count;
}

// Lattice indices of the subsets satisfying a premise, ascending.
std::vector<std::uint64_t> filter_space(const Context& c, const Premise& p, Exec exec) {
  const auto total = raw_space(c);
  std::vector<std::uint8_t> keep(total, 0);
  const auto n = c.m.order();
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < total; ++i) keep[i] = p(c, c.lattice.subset(n, i)) ? 1 : 0;
  } else {
    const auto t = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < t; ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      keep[idx] = p(c, c.lattice.subset(n, idx)) ? 1 : 0;
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (keep[i]) out.push_back(i);
  }
  return out;
}

struct Domain {
  bool unconstrained = true;
  std::uint64_t size = 0;
  std::vector<std::uint64_t> indices;

  std::uint64_t lattice_index(std::uint64_t digit) const {
    return unconstrained ? digit : indices[digit];
  }
};

struct CaseResult {
  std::uint64_t space = 0;
  std::uint64_t premise_met = 0;
  std::optional<Counterexample> counterexample;
};

Counterexample make_counterexample(const Case& cs, std::size_t index, std::vector<FuzzySubset> fs,
                                   Outcome out) {
  Counterexample cx;
  cx.case_index = index;
  cx.statement = cs.text;
  cx.detail = std::move(out.detail);
  cx.relation = cs.relation;
  cx.subsets = std::move(fs);
  if (const auto* l = std::get_if<FuzzySubset>(&out.lhs)) {
    const auto& r = std::get<FuzzySubset>(out.rhs);
    for (Element x = 0; x < l->size(); ++x) {
      if (!(l->value(x) == r.value(x))) {
        cx.element = x;
        break;
      }
    }
  }
  cx.lhs = std::move(out.lhs);
  cx.rhs = std::move(out.rhs);
  return cx;
}

// Runs `fails(i)` for i in [0, total) and returns the smallest failing i,
// or total when none fails.
template <typename Fn>
std::uint64_t first_failure(std::uint64_t total, Exec exec, Fn&& fails) {
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < total; ++i) {
      if (fails(i)) return i;
    }
    return total;
  }
  std::atomic<std::uint64_t> best{total};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto t = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t s = 0; s < t; ++s) {
    const auto i = static_cast<std::uint64_t>(s);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (fails(i)) {
        auto cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return best.load();
}

CaseResult run_exhaustive(const Context& c, const Case& cs, std::size_t case_index, Exec exec) {
  const auto n = c.m.order();
  const auto arity = cs.premises.size();
  std::vector<Domain> domains(arity);
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < arity; ++v) {
    auto& d = domains[v];
    if (cs.premises[v]) {
      d.unconstrained = false;
      d.indices = filter_space(c, cs.premises[v], exec);
      d.size = d.indices.size();
    } else {
      d.size = raw_space(c);
    }
    if (d.size != 0 && total > c.budget / d.size) {
      throw CapacityError("case '" + cs.text + "' needs more than " + std::to_string(c.budget) +
                          " tuples");
    }
    total *= d.size;
  }

  auto decode = [&](std::uint64_t t) {
    std::vector<FuzzySubset> fs(arity);
    for (std::size_t v = arity; v-- > 0;) {
      const auto digit = t % domains[v].size;
      t /= domains[v].size;
      fs[v] = c.lattice.subset(n, domains[v].lattice_index(digit));
    }
    return fs;
  };
  auto fails = [&](std::uint64_t t) {
    const auto fs = decode(t);
    const auto out = cs.eval(c, fs);
    return violates(cs.relation, out.lhs, out.rhs);
  };

  CaseResult res;
  res.space = total;
  const auto bad = first_failure(total, exec, fails);
  if (bad < total) {
    auto fs = decode(bad);
    auto out = cs.eval(c, fs);
    res.counterexample = make_counterexample(cs, case_index, std::move(fs), std::move(out));
  } else {
    res.premise_met = total;
  }
  return res;
}

FuzzySubset random_subset(const Context& c, CounterRng& rng) {
  const auto d = c.lattice.den();
  std::vector<std::uint64_t> num(c.m.order());
  for (auto& v : num) v = rng.below(d + 1);
  return FuzzySubset(d, std::move(num));
}

CaseResult run_sampled(const Context& c, const Case& cs, std::size_t case_index, const Mode& mode,
                       Exec exec) {
  constexpr int kAttempts = 64;
  const auto arity = cs.premises.size();
  const auto raw = c.lattice.subset_count(c.m.order());
  const bool enumerable = raw && *raw <= c.budget;

  // Premised variables draw uniformly from their enumerated family when
  // the lattice is small enough; otherwise by bounded rejection.
  std::vector<std::optional<std::vector<std::uint64_t>>> families(arity);
  for (std::size_t v = 0; v < arity; ++v) {
    if (cs.premises[v] && enumerable) families[v] = filter_space(c, cs.premises[v], exec);
  }
  const auto base = CounterRng(mode.seed).split(case_index);

  auto draw = [&](std::uint64_t s) -> std::optional<std::vector<FuzzySubset>> {
    std::vector<FuzzySubset> fs(arity);
    for (std::size_t v = 0; v < arity; ++v) {
      auto rng = base.split(s).split(v);
      if (!cs.premises[v]) {
        fs[v] = random_subset(c, rng);
      } else if (families[v]) {
        const auto& fam = *families[v];
        if (fam.empty()) return std::nullopt;
        fs[v] = c.lattice.subset(c.m.order(), fam[rng.below(fam.size())]);
      } else {
        bool found = false;
        for (int a = 0; a < kAttempts && !found; ++a) {
          fs[v] = random_subset(c, rng);
          found = cs.premises[v](c, fs[v]);
        }
        if (!found) return std::nullopt;
      }
    }
    return fs;
  };

  const auto total = arity == 0 ? 1 : mode.samples;
  std::vector<std::uint8_t> met(total, 0);
  auto fails = [&](std::uint64_t s) {
    const auto fs = draw(s);
    if (!fs) return false;
    met[s] = 1;
    const auto out = cs.eval(c, *fs);
    return violates(cs.relation, out.lhs, out.rhs);
  };

  CaseResult res;
  res.space = total;
  const auto bad = first_failure(total, exec, fails);
  if (bad < total) {
    auto fs = *draw(bad);
    auto out = cs.eval(c, fs);
    res.counterexample = make_counterexample(cs, case_index, std::move(fs), std::move(out));
  } else {
    res.premise_met = static_cast<std::uint64_t>(std::count(met.begin(), met.end(), 1));
  }
  return res;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& t : registry()) out.push_back(t.info);
    return out;
  }();
  return infos;
}

const TheoremInfo& theorem_info(std::string_view id) { return find_theorem(id).info; }

std::vector<FuzzySubset> fuzzy_two_sided_ideals(const GammaMagma& m, const Lattice& lattice,
                                                std::uint64_t budget, Exec exec) {
  Context c(m, lattice, budget);
  std::vector<FuzzySubset> out;
  for (auto idx : filter_space(c, kind(FuzzyKind::two_sided), exec)) {
    out.push_back(lattice.subset(m.order(), idx));
  }
  return out;
}

Verdict verify(const GammaMagma& m, std::string_view id, const Lattice& lattice, Mode mode,
               const VerifyOptions& options) {
  const auto& th = find_theorem(id);
  Verdict v;
  v.id = th.info.id;
  v.bounds.lattice_den = lattice.den();
  v.bounds.mode = mode;

  const auto have = satisfied_hypotheses(m);
  for (auto h : {Hypothesis::gamma_ag, Hypothesis::ag_star_star, Hypothesis::intra_regular,
                 Hypothesis::every_element_factorizable}) {
    if (th.info.hypotheses.contains(h) && !have.contains(h)) v.missing.insert(h);
  }
  if (v.missing.bits() != 0) {
    v.status = VerdictStatus::hypothesis_not_met;
    return v;
  }

  Context c(m, lattice, options.budget);
  if (th.needs_family) c.family = fuzzy_two_sided_ideals(m, lattice, options.budget, options.exec);
  if (th.info.arity >= 3) c.tabulate_products(options.exec);

  for (std::size_t i = 0; i < th.cases.size(); ++i) {
    const auto& cs = th.cases[i];
    auto res = mode.kind == Mode::Kind::exhaustive ? run_exhaustive(c, cs, i, options.exec)
                                                   : run_sampled(c, cs, i, mode, options.exec);
    v.bounds.space += res.space;
    if (res.counterexample) {
      v.status = VerdictStatus::counterexample;
      v.counterexample = std::move(res.counterexample);
      v.bounds.premise_met = 0;
      return v;
    }
    v.bounds.premise_met += res.premise_met;
  }
  v.status = VerdictStatus::holds;
  return v;
}

std::vector<Verdict> verify_all(const GammaMagma& m, const Lattice& lattice, Mode mode,
                                const VerifyOptions& options) {
  std::vector<Verdict> out;
  for (const auto& th : registry()) {
    try {
      out.push_back(verify(m, th.info.id, lattice, mode, options));
    } catch (const CapacityError& e) {
      Verdict v;
      v.id = th.info.id;
      v.status = VerdictStatus::capacity_exceeded;
      v.bounds.lattice_den = lattice.den();
      v.bounds.mode = mode;
      v.message = e.what();
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::pair<Side, Side> replay(const GammaMagma& m, std::string_view id, const Lattice& lattice,
                             const Counterexample& cx) {
  const auto& th = find_theorem(id);
  if (cx.case_index >= th.cases.size()) throw InputError("counterexample case out of range");
  const auto& cs = th.cases[cx.case_index];
  if (cx.subsets.size() != cs.premises.size()) throw InputError("wrong number of subsets");
  Context c(m, lattice, kDefaultTupleBudget);
  if (th.needs_family) c.family = fuzzy_two_sided_ideals(m, lattice);
  auto out = cs.eval(c, cx.subsets);
  return {std::move(out.lhs), std::move(out.rhs)};
}

SemilatticeReport semilattice_report(const GammaMagma& m, const Lattice& lattice,
                                     std::uint64_t budget) {
  SemilatticeReport r;
  r.lattice_den = lattice.den();
  const auto have = satisfied_hypotheses(m);
  r.hypotheses_met = have.contains(Hypothesis::gamma_ag) &&
                     have.contains(Hypothesis::ag_star_star) &&
                     have.contains(Hypothesis::intra_regular);
  r.ideals = fuzzy_two_sided_ideals(m, lattice, budget);
  const auto k = static_cast<std::uint64_t>(r.ideals.size());
  if (k != 0 && k * k > budget / k) {
    throw CapacityError("semilattice check over " + std::to_string(k) +
                        " ideals exceeds the budget");
  }
  check_semilattice(m, r);
  return r;
}

}  // namespace agg
