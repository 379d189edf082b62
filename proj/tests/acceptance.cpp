// Acceptance suite: one PASS/FAIL line per criterion, each with its own
// time limit. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "agg/commands.hpp"
#include "agg/crisp.hpp"
#include "agg/finder.hpp"
#include "agg/fuzzy.hpp"
#include "agg/generators.hpp"
#include "agg/laws.hpp"
#include "agg/theorems.hpp"
#include "support.hpp"

using namespace agg;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<void()> run;
};

// --- 1 ---------------------------------------------------------------------
void corpus_laws() {
  const auto r = cli::cmd_check(test::corpus("ag9"));
  const auto& laws = r.json["laws"];
  expect(laws["left_invertive"]["holds"] == true, "left_invertive should hold");
  expect(laws["band"]["holds"] == true, "band should hold");
  expect(laws["commutative"]["holds"] == false, "commutative should fail");
  expect(laws["associative"]["holds"] == false, "associative should fail");

  const auto comm = cli::cmd_instance(test::corpus("ag9"), "commutative", {"9,1"}, {"alpha"});
  expect(comm.json["holds"] == false && comm.json["lhs_name"] == "4" &&
             comm.json["rhs_name"] == "5",
         "9 alpha 1 = 4 and 1 alpha 9 = 5 expected");
  expect(comm.json["text"] == "9alpha1 != 1alpha9", "commutativity witness text");
  const auto assoc =
      cli::cmd_instance(test::corpus("ag9"), "associative", {"6,7,8"}, {"alpha,beta"});
  expect(assoc.json["holds"] == false && assoc.json["lhs_name"] == "2" &&
             assoc.json["rhs_name"] == "8",
         "(6 alpha 7) beta 8 = 2 and 6 alpha (7 beta 8) = 8 expected");
  expect(assoc.json["text"] == "(6alpha7)beta8 != 6alpha(7beta8)", "associativity witness text");

  // The reported (lexicographically first) witnesses are genuine violations.
  const auto m = test::load("ag9");
  for (auto law : {Law::commutative, Law::associative}) {
    const auto& w = laws[std::string(law_name(law))]["witness"];
    const auto xs = w["elements"].get<std::vector<Element>>();
    const auto ls = w["labels"].get<std::vector<Label>>();
    const auto [l, rr] = evaluate_law(m, law, xs, ls);
    expect(l != rr, "reported witness does not replay");
  }
}

// --- 2 ---------------------------------------------------------------------
void corpus_intra_regular() {
  const auto r = cli::cmd_check(test::corpus("ir5"));
  expect(r.json["laws"]["ag_star_star"]["holds"] == true, "ag_star_star should hold");
  expect(r.json["intra_regular"] == true, "intra_regular should hold");
  const auto m = test::load("ir5");
  const char* printed[5][3] = {
      {"a", "b", "a"}, {"b", "c", "d"}, {"c", "c", "d"}, {"d", "c", "e"}, {"e", "c", "c"}};
  for (const auto& [e, x, y] : printed) {
    const IntraWitness w{m.parse_element(e), m.parse_element(x), m.parse_element(y), 0, 0, 0};
    expect(witness_holds(m, w), std::string("printed witness for ") + e + " fails");
  }
}

// --- 3 ---------------------------------------------------------------------
void crisp_ideals() {
  const auto m = test::load("ir5");
  expect(classify_subset(m, CrispSubset(5, {0, 1})).contains(IdealKind::two_sided),
         "{a,b} should be two-sided");
  for (auto k : kIdealKinds) {
    const auto got = enumerate_ideals(m, k).size();
    const auto naive = test::naive_ideals(m, k).size();
    expect(got == naive, std::string(ideal_kind_name(k)) + ": " + std::to_string(got) +
                             " ideals, oracle " + std::to_string(naive));
  }
}

// --- 4 ---------------------------------------------------------------------
void grand_equivalence() {
  cli::VerifyRequest req;
  req.theorem = "grand_equiv";
  req.lattice = 2;
  req.mode = "exhaustive";
  const auto r = cli::cmd_verify(test::corpus("ir5"), req);
  expect(r.json["status"] == "holds", "status " + r.json["status"].get<std::string>());
  expect(r.json["bounds"]["space"] == 243, "expected 243 subsets");
}

// --- 5 ---------------------------------------------------------------------
void semilattice() {
  const auto m = test::load("ir5");
  for (std::uint64_t d : {1, 2}) {
    const auto r = semilattice_report(m, Lattice(d));
    expect(r.closed && r.commutative && r.idempotent && r.identity && r.associative,
           "L_" + std::to_string(d) + ": " + r.violation);
  }
}

// --- 6 ---------------------------------------------------------------------
void identities_on_models() {
  for (bool agss : {false, true}) {
    for (std::size_t k = 1; k <= 2; ++k) {
      for (std::size_t n = 1; n <= 3; ++n) {
        SearchSpec spec;
        spec.order = n;
        spec.gamma = k;
        spec.laws = {Law::left_invertive};
        if (agss) spec.laws.push_back(Law::ag_star_star);
        for (const auto& m : enumerate_models(spec)) {
          for (const auto* id : agss ? std::array{"agss_i", "agss_ii"}
                                     : std::array{"trm_i", "trm_ii"}) {
            const auto v = verify(m, id, Lattice(4), Mode::sampled(2024, 200));
            expect(v.status == VerdictStatus::holds, std::string(id) + " failed on a model");
          }
        }
      }
    }
  }
}

// --- 7 ---------------------------------------------------------------------
void integer_example() {
  CounterRng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto a = rng.between(-1'000'000, 1'000'000);
    const auto b = rng.between(-1'000'000, 1'000'000);
    const auto c = rng.between(-1'000'000, 1'000'000);
    const auto beta = rng.between(1, 3), gamma = rng.between(1, 3);
    const auto z = rng.between(-5, 5);
    const auto lhs = integer_op_eval(integer_op_eval(a, beta, b, z), gamma, c, z);
    const auto rhs = integer_op_eval(integer_op_eval(c, beta, b, z), gamma, a, z);
    expect(lhs == rhs && lhs == c - b + 2 * beta + a - 2 * gamma, "identity fails");
  }
}

// --- 8 ---------------------------------------------------------------------
void sf_boundary() {
  const auto m = test::load("const2");
  expect(!every_element_factorizable(m), "structure should have a non-factorizable element");
  const Lattice L(1);
  const auto v = verify(m, "sf", L, Mode::exhaustive());
  expect(v.status == VerdictStatus::counterexample, "expected a counterexample");
  const auto [lhs, rhs] = replay(m, "sf", L, *v.counterexample);
  expect(violates(Relation::equal, lhs, rhs), "replay does not violate S o f = f");
  expect(lhs == v.counterexample->lhs && rhs == v.counterexample->rhs, "replay differs");
  expect(verify(test::load("ir5"), "sf", L, Mode::exhaustive()).status == VerdictStatus::holds,
         "sf should hold on ir5");
}

// --- 9 ---------------------------------------------------------------------
std::size_t naive_count(std::size_t n) {
  std::vector<Element> t(n * n, 0);
  std::set<std::vector<Element>> classes;
  for (;;) {
    if (test::naive_left_invertive(test::magma(n, t))) {
      classes.insert(test::naive_canonical(n, 1, t, false));
    }
    std::size_t i = t.size();
    while (i > 0 && ++t[i - 1] == n) t[--i] = 0;
    if (i == 0) break;
  }
  return classes.size();
}

void finder_counts() {
  const std::size_t frozen[] = {0, 1, 3, 20};
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto oracle = naive_count(n);
    expect(oracle == frozen[n], "oracle drifted at n=" + std::to_string(n));
    for (auto iso : {IsoMode::elements_only, IsoMode::elements_and_gamma}) {
      SearchSpec spec;
      spec.order = n;
      spec.laws = {Law::left_invertive};
      spec.iso = iso;
      const auto got = enumerate_models(spec).size();
      expect(got == oracle, "n=" + std::to_string(n) + " " + std::string(iso_mode_name(iso)) +
                                ": " + std::to_string(got) + " vs " + std::to_string(oracle));
    }
  }
}

// --- 10 --------------------------------------------------------------------
void cut_identities() {
  std::vector<GammaMagma> structures = {test::load("ir5")};
  structures.push_back(*find_counterexample_structure(StructureProperty::non_commutative_ag));
  SearchSpec spec;
  spec.order = 3;
  spec.gamma = 2;
  spec.laws = {Law::left_invertive, Law::ag_star_star};
  structures.push_back(enumerate_models(spec).back());

  const std::array pointwise = {
      std::pair{FuzzyKind::subgroupoid, IdealKind::subgroupoid},
      std::pair{FuzzyKind::left, IdealKind::left},
      std::pair{FuzzyKind::right, IdealKind::right},
      std::pair{FuzzyKind::two_sided, IdealKind::two_sided},
      std::pair{FuzzyKind::bi, IdealKind::bi},
      std::pair{FuzzyKind::generalized_bi, IdealKind::generalized_bi},
      std::pair{FuzzyKind::interior, IdealKind::interior},
  };
  CounterRng rng(10);
  for (const auto& m : structures) {
    for (int i = 0; i < 500; ++i) {
      const auto den = 1 + rng.below(8);
      const auto f = test::random_fuzzy(rng, m.order(), den);
      const auto g = test::random_fuzzy(rng, m.order(), den);
      const Rational t(static_cast<std::int64_t>(1 + rng.below(den)),
                       static_cast<std::int64_t>(den));
      expect(level_cut(gamma_product(m, f, g), t) ==
                 set_product(m, level_cut(f, t), level_cut(g, t)),
             "cut of product differs from product of cuts");
      for (const auto& [fk, ck] : pointwise) {
        bool all_cuts = true;
        for (std::uint64_t s = 1; s <= den; ++s) {
          const auto c = level_cut(f, Rational(static_cast<std::int64_t>(s),
                                               static_cast<std::int64_t>(den)));
          if (!c.empty() && !classify_subset(m, c).contains(ck)) all_cuts = false;
        }
        expect(is_fuzzy(m, f, fk) == all_cuts,
               std::string(fuzzy_kind_name(fk)) + " membership differs from its cuts");
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "corpus law regression (ag9)", 1, corpus_laws},
      {2, "corpus intra-regularity (ir5)", 1, corpus_intra_regular},
      {3, "crisp ideal regression (ir5)", 1, crisp_ideals},
      {4, "grand equivalence on ir5 at L_2", 10, grand_equivalence},
      {5, "semilattice of two-sided ideals on ir5 at L_1, L_2", 30, semilattice},
      {6, "identity statements on finder models", 60, identities_on_models},
      {7, "integer example left invertive law", 1, integer_example},
      {8, "sf boundary behaviour", 1, sf_boundary},
      {9, "finder counts vs brute-force oracle", 60, finder_counts},
      {10, "cut identities", 10, cut_identities},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const Failure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (error.empty() && s >= c.limit_s) error = "too slow";
    char line[256];
    std::snprintf(line, sizeof line, "%s %2d  %-52s %8.3fs (limit %gs)",
                  error.empty() ? "PASS" : "FAIL", c.id, c.name.c_str(), s, c.limit_s);
    std::cout << line;
    if (!error.empty()) std::cout << "  " << error;
    std::cout << '\n';
    if (!error.empty()) ++failed;
  }
  return failed;
}
