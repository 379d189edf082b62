#include "agg/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "agg/crisp.hpp"
#include "agg/fuzzy.hpp"
#include "agg/laws.hpp"

namespace agg::cli {
namespace {

using Json = io::Json;

Json names_of(const GammaMagma& m, std::span<const Element> xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(m.element_name(x));
  return out;
}

Json label_names_of(const GammaMagma& m, std::span<const Label> ls) {
  Json out = Json::array();
  for (auto l : ls) out.push_back(m.labels()[l]);
  return out;
}

Json values_json(const FuzzySubset& f) {
  Json out = Json::array();
  for (Element x = 0; x < f.size(); ++x) out.push_back(f.value(x).to_string());
  return out;
}

Json side_json(const Side& s) {
  if (const auto* b = std::get_if<bool>(&s)) return *b;
  const auto& f = std::get<FuzzySubset>(s);
  auto j = io::fuzzy_to_json(f);
  j["values"] = values_json(f);
  return j;
}

Json kinds_json(const FuzzyKindSet& kinds) {
  Json out = Json::object();
  for (auto k : kFuzzyKinds) out[std::string(fuzzy_kind_name(k))] = kinds.contains(k);
  return out;
}

std::optional<Element> left_identity(const GammaMagma& m) {
  for (Element e = 0; e < m.order(); ++e) {
    bool ok = true;
    for (Label g = 0; g < m.gamma_size() && ok; ++g) {
      for (Element x = 0; x < m.order() && ok; ++x) ok = m(e, g, x) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

Json hypotheses_json(HypothesisSet set) {
  Json out = Json::array();
  for (auto h : {Hypothesis::gamma_ag, Hypothesis::ag_star_star, Hypothesis::intra_regular,
                 Hypothesis::every_element_factorizable}) {
    if (set.contains(h)) out.push_back(std::string(hypothesis_name(h)));
  }
  return out;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

}  // namespace

Json law_report_json(const GammaMagma& m, const LawReport& report) {
  Json out = Json::object();
  for (auto law : kAllLaws) {
    Json entry{{"holds", report.holds(law)}};
    if (const auto& w = report.witness(law)) {
      entry["witness"] = Json{{"elements", w->elements},
                              {"labels", w->labels},
                              {"element_names", names_of(m, w->elements)},
                              {"label_names", label_names_of(m, w->labels)},
                              {"lhs", w->lhs},
                              {"rhs", w->rhs},
                              {"text", render_witness(m, law, *w)}};
    }
    out[std::string(law_name(law))] = std::move(entry);
  }
  return out;
}

Json witness_json(const GammaMagma& m, const IntraWitness& w) {
  const auto& L = m.labels();
  const auto a = m.element_name(w.element);
  return Json{{"element", w.element},
              {"x", w.x},
              {"y", w.y},
              {"beta", L[w.beta]},
              {"xi", L[w.xi]},
              {"gamma", L[w.gamma]},
              {"text", a + " = (" + m.element_name(w.x) + L[w.beta] + "(" + a + L[w.xi] + a + "))" +
                           L[w.gamma] + m.element_name(w.y)}};
}

Json verdict_json(const GammaMagma& m, const Verdict& v) {
  const auto& info = theorem_info(v.id);
  Json out{{"theorem", v.id},
           {"status", std::string(verdict_status_name(v.status))},
           {"statement", info.statement},
           {"hypotheses", hypotheses_json(info.hypotheses)},
           {"missing", hypotheses_json(v.missing)},
           {"bounds", Json{{"lattice", v.bounds.lattice_den},
                           {"mode", mode_text(v.bounds.mode)},
                           {"space", v.bounds.space},
                           {"premise_met", v.bounds.premise_met}}}};
  if (v.counterexample) {
    const auto& cx = *v.counterexample;
    Json subsets = Json::array();
    for (const auto& f : cx.subsets) subsets.push_back(side_json(f));
    Json c{{"case", cx.case_index},
           {"statement", cx.statement},
           {"relation", std::string(relation_name(cx.relation))},
           {"subsets", std::move(subsets)},
           {"lhs", side_json(cx.lhs)},
           {"rhs", side_json(cx.rhs)}};
    if (!cx.detail.empty()) c["detail"] = cx.detail;
    if (cx.element) {
      c["element"] = *cx.element;
      c["element_name"] = m.element_name(*cx.element);
    }
    out["counterexample"] = std::move(c);
  }
  if (!v.message.empty()) out["message"] = v.message;
  return out;
}

Result cmd_check(const Path& structure) {
  const auto m = io::load_structure(structure);
  const auto e = left_identity(m);
  Json out{{"order", m.order()},
           {"gamma", m.labels()},
           {"laws", law_report_json(m, check_laws(m))},
           {"intra_regular", is_intra_regular(m)},
           {"every_element_factorizable", every_element_factorizable(m)},
           {"left_identity", e ? Json(m.element_name(*e)) : Json(nullptr)}};
  return {std::move(out), kSuccess};
}

Result cmd_instance(const Path& structure, const std::string& law_text,
                    const std::vector<std::string>& elements,
                    const std::vector<std::string>& labels) {
  const auto m = io::load_structure(structure);
  const auto law = parse_law(law_text);
  if (!law) throw InputError("unknown law '" + law_text + "'");
  std::vector<Element> xs;
  for (const auto& t : split_list(elements)) xs.push_back(m.parse_element(t));
  std::vector<Label> ls;
  for (const auto& t : split_list(labels)) ls.push_back(m.label_index(t));
  const auto [lhs, rhs] = evaluate_law(m, *law, xs, ls);
  Json out{{"law", law_text},
           {"elements", xs},
           {"labels", ls},
           {"lhs", lhs},
           {"rhs", rhs},
           {"lhs_name", m.element_name(lhs)},
           {"rhs_name", m.element_name(rhs)},
           {"holds", lhs == rhs}};
  if (lhs != rhs) out["text"] = render_witness(m, *law, LawWitness{xs, ls, lhs, rhs});
  return {std::move(out), lhs == rhs ? kSuccess : kNegative};
}

Result cmd_ideals(const Path& structure, const std::string& kind, Exec exec) {
  const auto m = io::load_structure(structure);
  std::vector<IdealKind> kinds;
  if (kind == "all") {
    kinds.assign(kIdealKinds.begin(), kIdealKinds.end());
  } else if (auto k = parse_ideal_kind(kind)) {
    kinds.push_back(*k);
  } else {
    throw InputError("unknown ideal kind '" + kind + "'");
  }
  Json out = Json::object();
  for (auto k : kinds) {
    Json list = Json::array();
    const auto ideals = enumerate_ideals(m, k, exec);
    for (const auto& s : ideals) list.push_back(io::subset_to_json(s));
    out[std::string(ideal_kind_name(k))] = Json{{"count", ideals.size()}, {"ideals", list}};
  }
  return {std::move(out), kSuccess};
}

Result cmd_witness(const Path& structure, const std::optional<std::string>& element) {
  const auto m = io::load_structure(structure);
  std::vector<Element> targets;
  if (element) {
    targets.push_back(m.parse_element(*element));
  } else {
    for (Element a = 0; a < m.order(); ++a) targets.push_back(a);
  }
  Json list = Json::array();
  bool all = true;
  for (auto a : targets) {
    Json entry{{"element", a}, {"name", m.element_name(a)}};
    if (auto w = intra_regular_witness(m, a)) {
      entry["witness"] = witness_json(m, *w);
    } else {
      entry["witness"] = "none";
      all = false;
    }
    list.push_back(std::move(entry));
  }
  Json out = element ? list.front() : Json{{"elements", list}, {"intra_regular", all}};
  return {std::move(out), all ? kSuccess : kNegative};
}

Result cmd_fuzzy(const std::string& op, const Path& structure, const Path& f_path,
                 const std::optional<Path>& g_path, Exec exec) {
  const auto m = io::load_structure(structure);
  const auto f = io::load_fuzzy(f_path);
  if (f.size() != m.order()) throw InputError("fuzzy subset length does not match structure order");
  if (op == "product") {
    if (!g_path) throw InputError("product needs a second fuzzy subset");
    const auto g = io::load_fuzzy(*g_path);
    const auto p = gamma_product(m, f, g, exec).canonical();
    auto j = io::fuzzy_to_json(p);
    j["values"] = values_json(p);
    return {Json{{"op", "product"}, {"result", std::move(j)}}, kSuccess};
  }
  if (op == "classify") {
    return {Json{{"op", "classify"}, {"values", values_json(f)},
                 {"kinds", kinds_json(classify_fuzzy(m, f))}},
            kSuccess};
  }
  throw InputError("fuzzy op must be 'product' or 'classify', got '" + op + "'");
}

Result cmd_verify(const Path& structure, const VerifyRequest& req) {
  const auto m = io::load_structure(structure);
  const Lattice lattice(req.lattice);
  const auto mode = parse_mode(req.mode);
  const VerifyOptions opts{req.budget, req.exec};
  if (req.theorem != "all") {
    const auto v = verify(m, req.theorem, lattice, mode, opts);
    return {verdict_json(m, v), v.status == VerdictStatus::counterexample ? kNegative : kSuccess};
  }
  Json list = Json::array();
  Json summary{{"holds", 0}, {"counterexample", 0}, {"hypothesis_not_met", 0},
               {"capacity_exceeded", 0}};
  bool any_counterexample = false;
  for (const auto& v : verify_all(m, lattice, mode, opts)) {
    auto& slot = summary[std::string(verdict_status_name(v.status))];
    slot = slot.get<int>() + 1;
    any_counterexample = any_counterexample || v.status == VerdictStatus::counterexample;
    list.push_back(verdict_json(m, v));
  }
  Json out{{"lattice", req.lattice}, {"mode", mode_text(mode)}, {"summary", summary},
           {"verdicts", std::move(list)}};
  return {std::move(out), any_counterexample ? kNegative : kSuccess};
}

Result cmd_semilattice(const Path& structure, std::uint64_t lattice, std::uint64_t budget) {
  const auto m = io::load_structure(structure);
  const auto r = semilattice_report(m, Lattice(lattice), budget);
  Json ideals = Json::array();
  for (const auto& f : r.ideals) ideals.push_back(io::fuzzy_to_json(f));
  Json out{{"lattice", r.lattice_den}, {"hypotheses_met", r.hypotheses_met},
           {"count", r.ideals.size()},  {"closed", r.closed},
           {"commutative", r.commutative}, {"associative", r.associative},
           {"idempotent", r.idempotent}, {"identity", r.identity},
           {"ok", r.ok()},             {"ideals", std::move(ideals)}};
  if (!r.violation.empty()) {
    Json w = Json::array();
    for (const auto& f : r.witnesses) w.push_back(io::fuzzy_to_json(f));
    out["violation"] = Json{{"what", r.violation}, {"witnesses", std::move(w)}};
  }
  return {std::move(out), r.ok() ? kSuccess : kNegative};
}

Result cmd_enumerate(const EnumerateRequest& req) {
  SearchSpec spec;
  spec.order = req.order;
  spec.gamma = req.gamma;
  spec.iso = parse_iso_mode(req.iso);
  spec.budget = req.budget;
  Json law_names = Json::array();
  for (const auto& name : split_list(req.laws)) {
    if (name == "intra_regular") {
      spec.intra_regular = true;
    } else if (auto law = parse_law(name)) {
      spec.laws.push_back(*law);
    } else {
      throw InputError("unknown law '" + name + "'");
    }
    law_names.push_back(name);
  }
  SearchStats stats;
  const auto models = enumerate_models(spec, req.exec, &stats);
  Json out{{"order", req.order}, {"gamma", req.gamma},  {"laws", law_names},
           {"iso", req.iso},     {"count", models.size()}, {"nodes", stats.nodes}};
  if (req.emit) {
    std::filesystem::create_directories(*req.emit);
    Json files = Json::array();
    for (const auto& m : models) {
      const auto path = *req.emit / (canonical_hash(m, spec.iso) + ".json");
      io::save_structure(m, path);
      files.push_back(path.filename().string());
    }
    out["files"] = std::move(files);
  } else if (!req.count_only) {
    Json list = Json::array();
    for (const auto& m : models) list.push_back(io::structure_to_json(m));
    out["models"] = std::move(list);
  }
  return {std::move(out), kSuccess};
}

Result cmd_find(const std::string& property, std::size_t max_order, std::uint64_t budget,
                Exec exec) {
  const auto p = parse_structure_property(property);
  const auto m = find_counterexample_structure(p, max_order, budget, exec);
  Json out{{"property", property}, {"max_order", max_order}, {"found", m.has_value()}};
  if (m) out["structure"] = io::structure_to_json(*m);
  return {std::move(out), m ? kSuccess : kNegative};
}

Result cmd_list_theorems() {
  Json list = Json::array();
  for (const auto& t : theorem_registry()) {
    list.push_back(Json{{"id", t.id},
                        {"statement", t.statement},
                        {"arity", t.arity},
                        {"hypotheses", hypotheses_json(t.hypotheses)}});
  }
  return {std::move(list), kSuccess};
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* text = std::getenv("AGG_BUDGET");
  if (!text || !*text) return fallback;
  char* end = nullptr;
  const auto v = std::strtoull(text, &end, 10);
  if (*end != '\0' || v == 0) throw InputError("AGG_BUDGET must be a positive integer");
  return v;
}

}  // namespace agg::cli
