#include <doctest.h>

#include "agg/error.hpp"
#include "agg/finder.hpp"
#include "agg/generators.hpp"
#include "agg/laws.hpp"
#include "support.hpp"

using namespace agg;

namespace {

const std::vector<Element> kAg9Base = {
    0, 3, 6, 2, 5, 7, 1, 8, 4,  //
    8, 1, 4, 6, 0, 3, 7, 5, 2,  //
    5, 7, 2, 4, 8, 1, 3, 0, 6,  //
    4, 8, 1, 3, 6, 0, 5, 2, 7,  //
    2, 5, 7, 1, 4, 8, 0, 6, 3,  //
    6, 0, 3, 7, 2, 5, 8, 4, 1,  //
    7, 2, 5, 8, 1, 4, 6, 3, 0,  //
    1, 4, 8, 0, 3, 6, 2, 7, 5,  //
    3, 6, 0, 5, 7, 2, 4, 1, 8,
};

const std::vector<Element> kIr5Base = {
    0, 0, 0, 0, 0,  //
    0, 1, 1, 1, 1,  //
    0, 1, 3, 4, 2,  //
    0, 1, 2, 3, 4,  //
    0, 1, 4, 2, 3,
};

// Lexicographically first failing tuple by brute force: elements vary
// slowest-first as an odometer, labels innermost.
std::optional<std::pair<std::vector<Element>, std::vector<Label>>> naive_first_violation(
    const GammaMagma& m, Law law) {
  const auto [ne, nl] = law_arity(law);
  std::vector<Element> xs(ne, 0);
  for (;;) {
    std::vector<Label> ls(nl, 0);
    for (;;) {
      const auto [l, r] = evaluate_law(m, law, xs, ls);
      if (l != r) return std::make_pair(xs, ls);
      std::size_t i = nl;
      while (i > 0 && ++ls[i - 1] == m.gamma_size()) ls[--i] = 0;
      if (i == 0) break;
    }
    std::size_t i = ne;
    while (i > 0 && ++xs[i - 1] == m.order()) xs[--i] = 0;
    if (i == 0) break;
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("construction rejects malformed structures") {
    CHECK_THROWS_AS(GammaMagma(0, {"g"}, {}), InputError);
    CHECK_THROWS_AS(GammaMagma(2, {}, {}), InputError);
    CHECK_THROWS_AS(GammaMagma(1, {"g", "g"}, {0, 0}), InputError);
    CHECK_THROWS_AS(GammaMagma(1, {""}, {0}), InputError);
    CHECK_THROWS_AS(GammaMagma(2, {"g"}, {0, 1, 1}), InputError);
    CHECK_THROWS_AS(GammaMagma(2, {"g"}, {0, 1, 1, 2}), InputError);
    CHECK_THROWS_AS(GammaMagma(1, {"g"}, {0}, std::vector<std::string>{"a", "b"}), InputError);
  }

  TEST_CASE("apply on corpus structures") {
    const auto ag9 = test::load("ag9");
    CHECK(ag9.apply(ag9.parse_element("9"), "alpha", ag9.parse_element("1")) ==
          ag9.parse_element("4"));
    CHECK(ag9.apply(8, "alpha", 8) == 8);

    const auto ir5 = test::load("ir5");
    CHECK(ir5.apply(ir5.parse_element("c"), "1", ir5.parse_element("d")) ==
          ir5.parse_element("e"));
    CHECK_THROWS_AS(ir5.apply(5, "1", 0), InputError);
    CHECK_THROWS_AS(ir5.apply(0, "2", 0), InputError);
    CHECK_THROWS_AS(ir5.parse_element("z"), InputError);

    const auto one = trivial_magma();
    CHECK(one.apply(0, Label{0}, 0) == 0);
  }

  TEST_CASE("factorization index lists every cell once") {
    const auto ag9 = test::load("ag9");
    std::size_t total = 0;
    for (Element a = 0; a < ag9.order(); ++a) {
      for (const auto& f : ag9.factorizations(a)) {
        CHECK(ag9(f.left, 0, f.right) == a);
      }
      total += ag9.factorizations(a).size();
    }
    // One entry per (x, label, y) cell.
    CHECK(total == 2 * 81);
  }

  TEST_CASE("generators rebuild the corpus") {
    const std::vector<TermPattern> band_terms = {TermPattern::square_left,
                                                 TermPattern::square_right};
    const auto ag9 = test::load("ag9");
    const auto built = from_base_with_terms(9, kAg9Base, band_terms);
    CHECK(std::equal(built.cells().begin(), built.cells().end(), ag9.cells().begin(),
                     ag9.cells().end()));
    // The base is a band, so both derived tables are the base itself.
    for (Label g = 0; g < 2; ++g) {
      const auto t = built.table(g);
      CHECK(std::equal(t.begin(), t.end(), kAg9Base.begin()));
    }

    const std::vector<TermPattern> plain = {TermPattern::product};
    const auto ir5 = from_base_with_terms(5, kIr5Base, plain, {"1"});
    CHECK(ir5.cells().size() == 25);
    CHECK(std::equal(ir5.cells().begin(), ir5.cells().end(), test::load("ir5").cells().begin()));

    const std::vector<TermPattern> twice = {TermPattern::product, TermPattern::product};
    const auto dup = from_base_with_terms(5, kIr5Base, twice);
    const auto t0 = dup.table(0), t1 = dup.table(1);
    CHECK(std::equal(t0.begin(), t0.end(), t1.begin(), t1.end()));
    CHECK(dup.labels() == std::vector<std::string>{"g0", "g1"});

    CHECK(parse_term_pattern("(xx)y") == TermPattern::square_left);
    CHECK_THROWS_AS(parse_term_pattern("xyz"), InputError);
  }

  TEST_CASE("law report on ir5") {
    const auto r = check_laws(test::load("ir5"));
    CHECK(r.holds(Law::left_invertive));
    CHECK(r.holds(Law::ag_star_star));
    CHECK(r.holds(Law::medial));
    CHECK(r.holds(Law::paramedial));
    CHECK_FALSE(r.holds(Law::commutative));
    CHECK_FALSE(r.holds(Law::associative));
    CHECK(r.holds(Law::has_left_identity));
  }

  TEST_CASE("law report on ag9 and the printed counterexamples") {
    const auto m = test::load("ag9");
    const auto r = check_laws(m);
    CHECK(r.holds(Law::left_invertive));
    CHECK(r.holds(Law::band));
    CHECK_FALSE(r.holds(Law::commutative));
    CHECK_FALSE(r.holds(Law::associative));

    // 9 alpha 1 = 4 but 1 alpha 9 = 5.
    const std::vector<Element> nine_one = {8, 0};
    const std::vector<Label> alpha = {0};
    const auto [l, r2] = evaluate_law(m, Law::commutative, nine_one, alpha);
    CHECK(l == 3);
    CHECK(r2 == 4);

    // (6 alpha 7) beta 8 = 2 but 6 alpha (7 beta 8) = 8.
    const std::vector<Element> xyz = {5, 6, 7};
    const std::vector<Label> ab = {0, 1};
    const auto [al, ar] = evaluate_law(m, Law::associative, xyz, ab);
    CHECK(al == 1);
    CHECK(ar == 7);
    CHECK(render_witness(m, Law::associative, LawWitness{xyz, ab, al, ar}) ==
          "(6alpha7)beta8 != 6alpha(7beta8)");
  }

  TEST_CASE("order-1 structure satisfies every law") {
    const auto r = check_laws(trivial_magma(2));
    for (auto law : kAllLaws) CHECK(r.holds(law));
  }

  TEST_CASE("witnesses are the lexicographically first failing tuple") {
    CounterRng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + rng.below(3);
      const std::size_t k = 1 + rng.below(2);
      std::vector<Element> cells(k * n * n);
      for (auto& c : cells) c = static_cast<Element>(rng.below(n));
      const auto m = test::magma(n, cells);
      const auto report = check_laws(m);
      for (auto law : kAllLaws) {
        if (law == Law::has_left_identity) continue;
        const auto expect = naive_first_violation(m, law);
        const auto& got = report.witness(law);
        REQUIRE(got.has_value() == expect.has_value());
        if (got) {
          CHECK(got->elements == expect->first);
          CHECK(got->labels == expect->second);
          CHECK(got->lhs != got->rhs);
        }
      }
      CHECK(report.holds(Law::left_invertive) == test::naive_left_invertive(m));
      CHECK(report.holds(Law::ag_star_star) == test::naive_ag_star_star(m));
    }
  }

  TEST_CASE("left identity witness refutes every candidate") {
    const auto m = test::load("ag9");
    const auto w = find_violation(m, Law::has_left_identity);
    REQUIRE(w.has_value());
    REQUIRE(w->elements.size() == m.order());
    for (Element e = 0; e < m.order(); ++e) {
      CHECK(m(e, w->labels[e], w->elements[e]) != w->elements[e]);
    }
  }

  TEST_CASE("left invertive implies medial, and with AG** paramedial") {
    for (std::size_t k = 1; k <= 2; ++k) {
      for (std::size_t n = 1; n <= 3; ++n) {
        SearchSpec spec;
        spec.order = n;
        spec.gamma = k;
        spec.laws = {Law::left_invertive};
        for (const auto& m : enumerate_models(spec)) {
          const auto r = check_laws(m);
          CHECK(r.holds(Law::medial));
          if (r.holds(Law::ag_star_star)) CHECK(r.holds(Law::paramedial));
        }
      }
    }
    for (const auto* name : {"ag9", "ir5"}) {
      const auto r = check_laws(test::load(name));
      CHECK(r.holds(Law::medial));
    }
  }

  TEST_CASE("single-label structures match the classical laws") {
    CounterRng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng.below(3);
      std::vector<Element> base(n * n);
      for (auto& c : base) c = static_cast<Element>(rng.below(n));
      const std::vector<TermPattern> plain = {TermPattern::product};
      const auto m = from_base_with_terms(n, base, plain);
      auto op = [&](Element x, Element y) { return base[x * n + y]; };
      bool ag = true, comm = true;
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          comm = comm && op(x, y) == op(y, x);
          for (Element z = 0; z < n; ++z) ag = ag && op(op(x, y), z) == op(op(z, y), x);
        }
      CHECK(law_holds(m, Law::left_invertive) == ag);
      CHECK(law_holds(m, Law::commutative) == comm);
    }
  }

  TEST_CASE("integer example satisfies the left invertive law") {
    CHECK(integer_op_eval(0, 1, 0, 0) == -2);
    CounterRng rng(2024);
    for (int i = 0; i < 1000; ++i) {
      const auto a = rng.between(-1'000'000, 1'000'000);
      const auto b = rng.between(-1'000'000, 1'000'000);
      const auto c = rng.between(-1'000'000, 1'000'000);
      const auto beta = rng.between(1, 3);
      const auto gamma = rng.between(1, 3);
      const auto z = rng.between(-5, 5);
      const auto lhs = integer_op_eval(integer_op_eval(a, beta, b, z), gamma, c, z);
      const auto rhs = integer_op_eval(integer_op_eval(c, beta, b, z), gamma, a, z);
      CHECK(lhs == rhs);
      CHECK(lhs == c - b + 2 * beta + a - 2 * gamma);
    }
  }

  TEST_CASE("structure JSON round trip and rejection") {
    const auto m = test::load("ir5");
    CHECK(io::structure_from_json(io::structure_to_json(m)) == m);
    CHECK_THROWS_AS(io::parse_json("{"), InputError);
    CHECK_THROWS_AS(io::structure_from_json(io::parse_json(
                        R"({"order":2,"gamma":["g"],"tables":{"g":[[0,2],[0,0]]}})")),
                    InputError);
    CHECK_THROWS_AS(io::structure_from_json(io::parse_json(
                        R"({"order":2,"gamma":["g"],"tables":{"h":[[0,0],[0,0]]}})")),
                    InputError);
    CHECK_THROWS_AS(io::structure_from_json(io::parse_json(R"({"gamma":["g"]})")), InputError);
  }
}
