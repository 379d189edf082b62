#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "agg/gamma_magma.hpp"

namespace agg {

/// Term shapes used to derive a Γ-operation from a single base table.
enum class TermPattern {
  product,        // x y
  square_left,    // (x x) y
  square_right,   // x (y y)
};

TermPattern parse_term_pattern(std::string_view text);  // "xy", "(xx)y", "x(yy)"
std::string_view term_pattern_text(TermPattern p);

/// Builds the Γ-magma whose g-th table is `patterns[g]` evaluated in the
/// row-major n×n `base` table. Labels default to g0..g(k-1).
GammaMagma from_base_with_terms(std::size_t order, std::span<const Element> base,
                                std::span<const TermPattern> patterns,
                                std::vector<std::string> labels = {},
                                std::optional<std::vector<std::string>> element_names = {});

/// The integer Γ-operation a b-> b - beta - a - beta - z, with z a fixed
/// parameter. It satisfies the left invertive law for every z:
/// (a beta b) gamma c = c - b + 2 beta + a - 2 gamma.
constexpr std::int64_t integer_op_eval(std::int64_t a, std::int64_t beta, std::int64_t b,
                                       std::int64_t z) {
  return b - beta - a - beta - z;
}

}  // namespace agg
