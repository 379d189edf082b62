#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "agg/finder.hpp"
#include "agg/io.hpp"
#include "agg/theorems.hpp"

// Command implementations behind the `agg` executable. Each returns the
// JSON document for stdout and the process exit code.
namespace agg::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kInputError = 2, kCapacityError = 3 };

struct Result {
  io::Json json;
  int exit_code = kSuccess;
};

using Path = std::filesystem::path;

Result cmd_check(const Path& structure);

/// Evaluates one instance of a universal law, e.g. elements {"9", "1"} and
/// labels {"alpha"} for commutative.
Result cmd_instance(const Path& structure, const std::string& law,
                    const std::vector<std::string>& elements,
                    const std::vector<std::string>& labels);

/// `kind` is an ideal kind name or "all".
Result cmd_ideals(const Path& structure, const std::string& kind, Exec exec);

/// Without an element, reports every element.
Result cmd_witness(const Path& structure, const std::optional<std::string>& element);

/// op is "product" or "classify"; product needs `g`.
Result cmd_fuzzy(const std::string& op, const Path& structure, const Path& f,
                 const std::optional<Path>& g, Exec exec);

struct VerifyRequest {
  std::string theorem = "all";
  std::uint64_t lattice = 1;
  std::string mode = "exhaustive";
  std::uint64_t budget = kDefaultTupleBudget;
  Exec exec = Exec::parallel;
};
Result cmd_verify(const Path& structure, const VerifyRequest& req);

Result cmd_semilattice(const Path& structure, std::uint64_t lattice, std::uint64_t budget);

struct EnumerateRequest {
  std::size_t order = 1;
  std::size_t gamma = 1;
  std::vector<std::string> laws;  // law names, plus "intra_regular"
  std::string iso = "elements_only";
  bool count_only = false;
  std::optional<Path> emit;
  std::uint64_t budget = kDefaultNodeBudget;
  Exec exec = Exec::parallel;
};
Result cmd_enumerate(const EnumerateRequest& req);

Result cmd_find(const std::string& property, std::size_t max_order, std::uint64_t budget,
                Exec exec);

Result cmd_list_theorems();

/// Node budget from AGG_BUDGET when set, else `fallback`.
std::uint64_t budget_from_env(std::uint64_t fallback);

/// Runs `fn`, mapping InputError, CapacityError and PartialResultError to
/// exit codes 2 and 3 with a JSON error document.
template <typename Fn>
Result guarded(Fn&& fn, std::string& diagnostic);

// JSON renderings shared with tests.
io::Json law_report_json(const GammaMagma& m, const LawReport& report);
io::Json verdict_json(const GammaMagma& m, const Verdict& v);
io::Json witness_json(const GammaMagma& m, const IntraWitness& w);

}  // namespace agg::cli

#include "agg/error.hpp"

namespace agg::cli {

template <typename Fn>
Result guarded(Fn&& fn, std::string& diagnostic) {
  try {
    return fn();
  } catch (const PartialResultError& e) {
    diagnostic = e.what();
    io::Json frontier = io::Json::array();
    for (const auto& p : e.frontier()) frontier.push_back(p);
    return {io::Json{{"error", "capacity"},
                     {"message", e.what()},
                     {"partial_count", e.models().size()},
                     {"nodes", e.nodes()},
                     {"frontier", std::move(frontier)}},
            kCapacityError};
  } catch (const CapacityError& e) {
    diagnostic = e.what();
    return {io::Json{{"error", "capacity"}, {"message", e.what()}}, kCapacityError};
  } catch (const InputError& e) {
    diagnostic = e.what();
    return {io::Json{{"error", "input"}, {"message", e.what()}}, kInputError};
  }
}

}  // namespace agg::cli
