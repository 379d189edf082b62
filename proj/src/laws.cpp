#include "agg/laws.hpp"

#include <algorithm>

#include "agg/error.hpp"

namespace agg {
namespace {

using Sides = std::pair<Element, Element>;

Sides sides(const GammaMagma& m, Law law, const Element* e, const Label* l) {
  switch (law) {
    case Law::left_invertive:
      return {m(m(e[0], l[0], e[1]), l[1], e[2]), m(m(e[2], l[0], e[1]), l[1], e[0])};
    case Law::medial:
      return {m(m(e[0], l[0], e[1]), l[1], m(e[2], l[2], e[3])),
              m(m(e[0], l[0], e[2]), l[1], m(e[1], l[2], e[3]))};
    case Law::ag_star_star:
      return {m(e[0], l[0], m(e[1], l[1], e[2])), m(e[1], l[0], m(e[0], l[1], e[2]))};
    case Law::paramedial:
      return {m(m(e[0], l[0], e[1]), l[1], m(e[2], l[2], e[3])),
              m(m(e[3], l[0], e[2]), l[1], m(e[1], l[2], e[0]))};
    case Law::commutative:
      return {m(e[0], l[0], e[1]), m(e[1], l[0], e[0])};
    case Law::associative:
      return {m(m(e[0], l[0], e[1]), l[1], e[2]), m(e[0], l[0], m(e[1], l[1], e[2]))};
    case Law::band:
      return {m(e[0], l[0], e[0]), e[0]};
    case Law::has_left_identity:
      break;
  }
  throw InputError("law has no universal instance form");
}

// Advances an odometer; returns false on wrap-around.
template <typename T>
bool next_tuple(std::vector<T>& digits, std::size_t radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix) return true;
    digits[i] = 0;
  }
  return false;
}

std::optional<LawWitness> left_identity_violation(const GammaMagma& m) {
  LawWitness w;
  const auto n = static_cast<Element>(m.order());
  for (Element e = 0; e < n; ++e) {
    bool refuted = false;
    for (Element x = 0; x < n && !refuted; ++x) {
      for (Label g = 0; g < m.gamma_size() && !refuted; ++g) {
        if (m(e, g, x) != x) {
          w.elements.push_back(x);
          w.labels.push_back(g);
          if (e == 0) {
            w.lhs = m(e, g, x);
            w.rhs = x;
          }
          refuted = true;
        }
      }
    }
    if (!refuted) return std::nullopt;
  }
  return w;
}

}  // namespace

std::string_view law_name(Law law) {
  switch (law) {
    case Law::left_invertive: return "left_invertive";
    case Law::medial: return "medial";
    case Law::ag_star_star: return "ag_star_star";
    case Law::paramedial: return "paramedial";
    case Law::commutative: return "commutative";
    case Law::associative: return "associative";
    case Law::band: return "band";
    case Law::has_left_identity: return "has_left_identity";
  }
  return "?";
}

std::optional<Law> parse_law(std::string_view name) {
  for (Law law : kAllLaws) {
    if (law_name(law) == name) return law;
  }
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> law_arity(Law law) {
  switch (law) {
    case Law::left_invertive: return {3, 2};
    case Law::medial: return {4, 3};
    case Law::ag_star_star: return {3, 2};
    case Law::paramedial: return {4, 3};
    case Law::commutative: return {2, 1};
    case Law::associative: return {3, 2};
    case Law::band: return {1, 1};
    case Law::has_left_identity: return {0, 0};
  }
  return {0, 0};
}

std::pair<Element, Element> evaluate_law(const GammaMagma& m, Law law,
                                         std::span<const Element> elements,
                                         std::span<const Label> labels) {
  if (law == Law::has_left_identity) throw InputError("has_left_identity is existential");
  auto [ne, nl] = law_arity(law);
  if (elements.size() != ne || labels.size() != nl) {
    throw InputError("wrong number of variables for law " + std::string(law_name(law)));
  }
  for (Element e : elements) {
    if (e >= m.order()) throw InputError("element outside carrier");
  }
  for (Label l : labels) {
    if (l >= m.gamma_size()) throw InputError("gamma label index out of range");
  }
  return sides(m, law, elements.data(), labels.data());
}

std::optional<LawWitness> find_violation(const GammaMagma& m, Law law) {
  if (law == Law::has_left_identity) return left_identity_violation(m);
  auto [ne, nl] = law_arity(law);
  std::vector<Element> e(ne, 0);
  std::vector<Label> l(nl, 0);
  do {
    std::fill(l.begin(), l.end(), 0);
    do {
      auto [lhs, rhs] = sides(m, law, e.data(), l.data());
      if (lhs != rhs) return LawWitness{e, l, lhs, rhs};
    } while (next_tuple(l, m.gamma_size()));
  } while (next_tuple(e, m.order()));
  return std::nullopt;
}

LawReport check_laws(const GammaMagma& m) {
  LawReport report;
  for (Law law : kAllLaws) {
    if (auto w = find_violation(m, law)) report.set_failure(law, std::move(*w));
  }
  return report;
}

std::string render_witness(const GammaMagma& m, Law law, const LawWitness& w) {
  auto el = [&](std::size_t i) { return m.element_name(w.elements.at(i)); };
  auto lb = [&](std::size_t i) { return m.labels().at(w.labels.at(i)); };
  switch (law) {
    case Law::left_invertive:
      return "(" + el(0) + lb(0) + el(1) + ")" + lb(1) + el(2) + " != (" + el(2) + lb(0) +
             el(1) + ")" + lb(1) + el(0);
    case Law::medial:
      return "(" + el(0) + lb(0) + el(1) + ")" + lb(1) + "(" + el(2) + lb(2) + el(3) +
             ") != (" + el(0) + lb(0) + el(2) + ")" + lb(1) + "(" + el(1) + lb(2) + el(3) + ")";
    case Law::ag_star_star:
      return el(0) + lb(0) + "(" + el(1) + lb(1) + el(2) + ") != " + el(1) + lb(0) + "(" +
             el(0) + lb(1) + el(2) + ")";
    case Law::paramedial:
      return "(" + el(0) + lb(0) + el(1) + ")" + lb(1) + "(" + el(2) + lb(2) + el(3) +
             ") != (" + el(3) + lb(0) + el(2) + ")" + lb(1) + "(" + el(1) + lb(2) + el(0) + ")";
    case Law::commutative:
      return el(0) + lb(0) + el(1) + " != " + el(1) + lb(0) + el(0);
    case Law::associative:
      return "(" + el(0) + lb(0) + el(1) + ")" + lb(1) + el(2) + " != " + el(0) + lb(0) + "(" +
             el(1) + lb(1) + el(2) + ")";
    case Law::band:
      return el(0) + lb(0) + el(0) + " != " + el(0);
    case Law::has_left_identity: {
      std::string out;
      for (std::size_t e = 0; e < w.elements.size(); ++e) {
        if (!out.empty()) out += "; ";
        out += m.element_name(static_cast<Element>(e)) + lb(e) + el(e) + " != " + el(e);
      }
      return out;
    }
  }
  return {};
}

}  // namespace agg
