// agg: command-line front end for Γ-magma law checks, crisp and fuzzy
// ideals, statement verification and model enumeration.
#include <iostream>

#include <CLI11.hpp>

#include "agg/commands.hpp"
#include "agg/exec.hpp"

namespace {

using agg::cli::Result;

int emit(const Result& r, const std::string& diagnostic) {
  if (!diagnostic.empty()) std::cerr << "agg: " << diagnostic << '\n';
  std::cout << r.json.dump(2) << '\n';
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Γ-magma law checks, ideals, fuzzy ideals and model enumeration"};
  app.require_subcommand(1);
  int jobs = 0;
  bool serial = false;
  app.add_option("--jobs", jobs, "worker threads for parallel kernels (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--serial", serial, "use the serial reference kernels");

  std::string structure;
  auto* check = app.add_subcommand("check", "law report and intra-regularity as JSON");
  check->add_option("structure", structure)->required();

  std::string law;
  std::vector<std::string> elements, labels;
  auto* instance = app.add_subcommand("instance", "evaluate one instance of a law");
  instance->add_option("structure", structure)->required();
  instance->add_option("--law", law)->required();
  instance->add_option("--elements", elements, "element names or indices, comma separated")
      ->required();
  instance->add_option("--labels", labels, "Γ-labels, comma separated");

  std::string kind = "all";
  auto* ideals = app.add_subcommand("ideals", "enumerate crisp ideals");
  ideals->add_option("structure", structure)->required();
  ideals->add_option("--kind", kind, "ideal kind or 'all'");

  std::optional<std::string> element;
  auto* witness = app.add_subcommand("witness", "intra-regularity witnesses");
  witness->add_option("structure", structure)->required();
  witness->add_option("--element", element);

  std::string op;
  std::string f_file;
  std::optional<std::string> g_file;
  auto* fuzzy = app.add_subcommand("fuzzy", "Γ-product or classification of fuzzy subsets");
  fuzzy->add_option("op", op, "product | classify")->required();
  fuzzy->add_option("structure", structure)->required();
  fuzzy->add_option("f", f_file)->required();
  fuzzy->add_option("g", g_file);

  agg::cli::VerifyRequest vreq;
  auto* verify = app.add_subcommand("verify", "check registered statements");
  verify->add_option("structure", structure)->required();
  verify->add_option("--theorem", vreq.theorem, "statement id or 'all'");
  verify->add_option("--lattice", vreq.lattice, "d: values in {0, 1/d, ..., 1}")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1'000'000}));
  verify->add_option("--mode", vreq.mode, "exhaustive | sampled:SEED:N");
  verify->add_option("--budget", vreq.budget, "tuple cap for exhaustive checks");

  std::uint64_t s_lattice = 1;
  std::uint64_t s_budget = agg::kDefaultTupleBudget;
  auto* semi = app.add_subcommand("semilattice", "semilattice check of fuzzy two-sided ideals");
  semi->add_option("structure", structure)->required();
  semi->add_option("--lattice", s_lattice)->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1'000'000}));
  semi->add_option("--budget", s_budget);

  agg::cli::EnumerateRequest ereq;
  std::string emit_dir;
  auto* enumerate = app.add_subcommand("enumerate", "models up to isomorphism");
  enumerate->add_option("--order", ereq.order)->required();
  enumerate->add_option("--gamma", ereq.gamma);
  enumerate->add_option("--laws", ereq.laws, "comma separated; 'intra_regular' filters");
  enumerate->add_option("--iso", ereq.iso, "elements_only | elements_and_gamma");
  auto* count_flag = enumerate->add_flag("--count", ereq.count_only, "print the count only");
  enumerate->add_option("--emit", emit_dir, "write one structure file per model")
      ->excludes(count_flag);

  std::string property;
  std::size_t max_order = agg::kCounterexampleMaxOrder;
  auto* find = app.add_subcommand("find", "smallest left invertive model with a property");
  find->add_option("property", property)->required();
  find->add_option("--max-order", max_order);

  auto* theorems = app.add_subcommand("theorems", "list registered statements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : agg::cli::kInputError;
  }

  if (jobs > 0) agg::set_jobs(jobs);
  const auto exec = serial ? agg::Exec::serial : agg::Exec::parallel;
  std::string diagnostic;
  auto run = [&]() -> Result {
    if (*check) return agg::cli::cmd_check(structure);
    if (*instance) return agg::cli::cmd_instance(structure, law, elements, labels);
    if (*ideals) return agg::cli::cmd_ideals(structure, kind, exec);
    if (*witness) return agg::cli::cmd_witness(structure, element);
    if (*fuzzy) {
      std::optional<agg::cli::Path> g;
      if (g_file) g = *g_file;
      return agg::cli::cmd_fuzzy(op, structure, f_file, g, exec);
    }
    if (*verify) {
      vreq.exec = exec;
      return agg::cli::cmd_verify(structure, vreq);
    }
    if (*semi) return agg::cli::cmd_semilattice(structure, s_lattice, s_budget);
    if (*enumerate) {
      ereq.exec = exec;
      ereq.budget = agg::cli::budget_from_env(ereq.budget);
      if (!emit_dir.empty()) ereq.emit = emit_dir;
      return agg::cli::cmd_enumerate(ereq);
    }
    if (*find) {
      return agg::cli::cmd_find(property, max_order,
                                agg::cli::budget_from_env(agg::kDefaultNodeBudget), exec);
    }
    if (*theorems) return agg::cli::cmd_list_theorems();
    return {};
  };
  const auto result = agg::cli::guarded(run, diagnostic);
  return emit(result, diagnostic);
}
