#include <doctest.h>

#include "agg/error.hpp"
#include "agg/finder.hpp"
#include "agg/laws.hpp"
#include "agg/theorems.hpp"
#include "support.hpp"

using namespace agg;

namespace {

bool needs_intra_regular(const TheoremInfo& t) {
  return t.hypotheses.contains(Hypothesis::intra_regular);
}

void check_replay(const GammaMagma& m, const Verdict& v, const Lattice& L) {
  REQUIRE(v.counterexample.has_value());
  const auto& cx = *v.counterexample;
  const auto [lhs, rhs] = replay(m, v.id, L, cx);
  CHECK(lhs == cx.lhs);
  CHECK(rhs == cx.rhs);
  CHECK(violates(cx.relation, lhs, rhs));
}

bool same(const Verdict& a, const Verdict& b) {
  if (a.id != b.id || a.status != b.status || !(a.bounds == b.bounds)) return false;
  if (a.counterexample.has_value() != b.counterexample.has_value()) return false;
  if (!a.counterexample) return true;
  return a.counterexample->subsets == b.counterexample->subsets &&
         a.counterexample->case_index == b.counterexample->case_index;
}

}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("registry") {
    const auto& reg = theorem_registry();
    CHECK(reg.size() >= 27);
    for (const auto* id : {"sf", "trm_i", "trm_ii", "agss_i", "agss_ii", "rl_cap_quasi", "qqq",
                           "idem_quasi_bi", "onesided_quasi", "onesided_genbi",
                           "idemquasi_prod_bi", "prod_onesided", "llb", "left_idem",
                           "cap_eq_prod", "semi1", "irr_iff_prime", "all_prime_iff_chain", "inte",
                           "q2", "gener", "bii", "bi_fixedpoint", "interior_fixedpoint", "l145",
                           "grand_equiv"}) {
      CHECK_NOTHROW(theorem_info(id));
    }
    CHECK_THROWS_AS(theorem_info("nope"), InputError);
    CHECK_THROWS_AS(verify(trivial_magma(), "nope", Lattice(1), Mode::exhaustive()), InputError);
  }

  TEST_CASE("mode parsing") {
    CHECK(parse_mode("exhaustive") == Mode::exhaustive());
    CHECK(parse_mode("sampled:7:200") == Mode::sampled(7, 200));
    CHECK(mode_text(Mode::sampled(7, 200)) == "sampled:7:200");
    CHECK_THROWS_AS(parse_mode("sampled:7"), InputError);
    CHECK_THROWS_AS(parse_mode("sampled:x:1"), InputError);
    CHECK_THROWS_AS(parse_mode("sampled:1:0"), InputError);
    CHECK_THROWS_AS(parse_mode("all"), InputError);
  }

  TEST_CASE("grand equivalence and cap = product on ir5 at L_2") {
    const auto m = test::load("ir5");
    const auto v = verify(m, "grand_equiv", Lattice(2), Mode::exhaustive());
    CHECK(v.status == VerdictStatus::holds);
    CHECK(v.bounds.space == 243);
    CHECK(verify(m, "cap_eq_prod", Lattice(2), Mode::exhaustive()).status ==
          VerdictStatus::holds);
  }

  TEST_CASE("every intra-regular statement holds on ir5 at L_2") {
    const auto m = test::load("ir5");
    for (const auto& info : theorem_registry()) {
      if (!needs_intra_regular(info)) continue;
      CAPTURE(info.id);
      CHECK(verify(m, info.id, Lattice(2), Mode::exhaustive()).status == VerdictStatus::holds);
    }
  }

  TEST_CASE("sf: counterexample without factorizations, holds on ir5") {
    const auto m = test::load("const2");
    const Lattice L(1);
    const auto v = verify(m, "sf", L, Mode::exhaustive());
    REQUIRE(v.status == VerdictStatus::counterexample);
    check_replay(m, v, L);
    const auto& cx = *v.counterexample;
    REQUIRE(cx.element.has_value());
    CHECK(*cx.element == 1);
    // (S o f)(1) = 0 because 1 is no product, while f(1) = 1.
    CHECK(std::get<FuzzySubset>(cx.lhs).value(1) == Rational(0));
    CHECK(std::get<FuzzySubset>(cx.rhs).value(1) == Rational(1));

    CHECK(verify(test::load("ir5"), "sf", L, Mode::exhaustive()).status == VerdictStatus::holds);
    CHECK(verify(test::load("ir5"), "sf", Lattice(3), Mode::exhaustive()).status ==
          VerdictStatus::holds);
  }

  TEST_CASE("hypothesis gate") {
    const auto not_ag = test::magma(2, {1, 0, 0, 0});
    REQUIRE_FALSE(law_holds(not_ag, Law::left_invertive));
    const auto v = verify(not_ag, "trm_i", Lattice(1), Mode::exhaustive());
    CHECK(v.status == VerdictStatus::hypothesis_not_met);
    CHECK(v.missing.contains(Hypothesis::gamma_ag));

    const auto ag9 = test::load("ag9");
    for (const auto& v2 : verify_all(ag9, Lattice(1), Mode::sampled(1, 20))) {
      if (theorem_info(v2.id).hypotheses.contains(Hypothesis::ag_star_star)) {
        CHECK(v2.status == VerdictStatus::hypothesis_not_met);
        CHECK(v2.missing.contains(Hypothesis::ag_star_star));
      }
    }
  }

  TEST_CASE("capacity") {
    const auto m = test::load("ir5");
    CHECK_THROWS_AS(verify(m, "trm_ii", Lattice(2), Mode::exhaustive()), CapacityError);
    VerifyOptions small;
    small.budget = 100;
    CHECK_THROWS_AS(verify(m, "grand_equiv", Lattice(2), Mode::exhaustive(), small),
                    CapacityError);
    bool reported = false;
    for (const auto& v : verify_all(m, Lattice(2), Mode::exhaustive(), small)) {
      if (v.id == "grand_equiv") {
        CHECK(v.status == VerdictStatus::capacity_exceeded);
        CHECK_FALSE(v.message.empty());
        reported = true;
      }
    }
    CHECK(reported);
  }

  TEST_CASE("order-1 structure: every statement holds") {
    for (const auto& v : verify_all(trivial_magma(), Lattice(3), Mode::exhaustive())) {
      CAPTURE(v.id);
      CHECK(v.status == VerdictStatus::holds);
    }
  }

  TEST_CASE("serial and parallel verdicts agree") {
    for (const auto* name : {"ir5", "const2", "ag9"}) {
      const auto m = test::load(name);
      const auto L = Lattice(name == std::string("ag9") ? 1 : 2);
      VerifyOptions serial{kDefaultTupleBudget, Exec::serial};
      VerifyOptions parallel{kDefaultTupleBudget, Exec::parallel};
      for (const auto& info : theorem_registry()) {
        if (info.arity >= 3) continue;
        CAPTURE(info.id);
        try {
          const auto a = verify(m, info.id, L, Mode::exhaustive(), serial);
          const auto b = verify(m, info.id, L, Mode::exhaustive(), parallel);
          CHECK(same(a, b));
        } catch (const CapacityError&) {
        }
        const auto a = verify(m, info.id, L, Mode::sampled(9, 50), serial);
        const auto b = verify(m, info.id, L, Mode::sampled(9, 50), parallel);
        CHECK(same(a, b));
      }
    }
  }

  TEST_CASE("sampled mode is deterministic") {
    const auto m = test::load("ir5");
    const auto a = verify(m, "trm_ii", Lattice(4), Mode::sampled(5, 300));
    const auto b = verify(m, "trm_ii", Lattice(4), Mode::sampled(5, 300));
    CHECK(a.status == VerdictStatus::holds);
    CHECK(same(a, b));
    CHECK(a.bounds.space == 300);
    CHECK(a.bounds.premise_met == 300);

    // A counterexample found by sampling replays, and is the same each run.
    const auto c2 = test::load("const2");
    const auto s1 = verify(c2, "sf", Lattice(4), Mode::sampled(3, 100));
    const auto s2 = verify(c2, "sf", Lattice(4), Mode::sampled(3, 100));
    REQUIRE(s1.status == VerdictStatus::counterexample);
    CHECK(same(s1, s2));
    check_replay(c2, s1, Lattice(4));
  }

  TEST_CASE("counterexamples replay on non-AG** AG-groupoids") {
    // Drop the AG** gate by checking statements on structures that only
    // satisfy the left invertive law; any failure must replay exactly.
    SearchSpec spec;
    spec.order = 3;
    spec.laws = {Law::left_invertive};
    std::size_t failures = 0;
    for (const auto& m : enumerate_models(spec)) {
      for (const auto& v : verify_all(m, Lattice(1), Mode::exhaustive())) {
        if (v.status == VerdictStatus::counterexample) {
          ++failures;
          check_replay(m, v, Lattice(1));
        }
      }
    }
    // sf fails wherever some element is not a product.
    CHECK(failures > 0);
  }

  TEST_CASE("finder models with AG** and intra-regularity satisfy every statement") {
    SearchSpec spec;
    spec.order = 3;
    spec.laws = {Law::left_invertive, Law::ag_star_star};
    spec.intra_regular = true;
    const auto models = enumerate_models(spec);
    REQUIRE_FALSE(models.empty());
    for (const auto& m : models) {
      for (const auto& v : verify_all(m, Lattice(1), Mode::exhaustive())) {
        CAPTURE(v.id);
        CHECK(v.status == VerdictStatus::holds);
      }
      for (const auto& v : verify_all(m, Lattice(2), Mode::sampled(17, 100))) {
        CAPTURE(v.id);
        CHECK(v.status == VerdictStatus::holds);
      }
    }
  }

  TEST_CASE("cap = product agrees with a naive recomputation") {
    const auto m = test::load("ir5");
    const Lattice L(1);
    std::size_t pairs = 0;
    for (std::uint64_t i = 0; i < 32; ++i) {
      const auto f = L.subset(5, i);
      if (!is_fuzzy(m, f, FuzzyKind::right)) continue;
      for (std::uint64_t j = 0; j < 32; ++j) {
        const auto g = L.subset(5, j);
        if (!is_fuzzy(m, g, FuzzyKind::left)) continue;
        const auto p = test::naive_product(m, test::values(f), test::values(g));
        CHECK(p == test::values(meet(f, g)));
        ++pairs;
      }
    }
    const auto v = verify(m, "cap_eq_prod", L, Mode::exhaustive());
    CHECK(v.bounds.space == pairs);
  }

  TEST_CASE("semilattice of two-sided ideals on ir5") {
    const auto m = test::load("ir5");
    for (std::uint64_t d : {1, 2}) {
      const auto r = semilattice_report(m, Lattice(d));
      CHECK(r.hypotheses_met);
      CHECK(r.closed);
      CHECK(r.commutative);
      CHECK(r.associative);
      CHECK(r.idempotent);
      CHECK(r.identity);
      CHECK(r.ok());
    }
    // At L_1 the ideals are the characteristic functions of crisp
    // two-sided ideals, plus the zero function.
    const auto r = semilattice_report(m, Lattice(1));
    std::vector<FuzzySubset> expect = {FuzzySubset::zero(5)};
    for (const auto& a : enumerate_ideals(m, IdealKind::two_sided)) {
      expect.push_back(characteristic(a));
    }
    auto sorted = [](std::vector<FuzzySubset> v) {
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.numerators().begin(), a.numerators().end(),
                                            b.numerators().begin(), b.numerators().end());
      });
      return v;
    };
    CHECK(sorted(r.ideals) == sorted(expect));
  }

  TEST_CASE("semilattice on a single element") {
    for (std::uint64_t d : {1, 3, 5}) {
      const auto r = semilattice_report(trivial_magma(), Lattice(d));
      CHECK(r.ideals.size() == d + 1);
      CHECK(r.ok());
    }
  }
}
