#pragma once

// Built-in tables and their published summaries.
//
//   example1  3-way probabilities (a synthetic running example)
//   water     4-way counts: softness, brand preference, previous use of M,
//             temperature (1008 consumers)
//   raters    3-way counts: three raters, level 1 coded as 0 (164 patients)

#include "bintab/io.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bintab::datasets {

std::vector<std::string> names();

/// Throws DomainError for an unknown name.
TableDocument table(std::string_view name);

/// Published values, rounded as printed. Vertex and coefficient rows are
/// in canonical order; coefficient rows follow subsets_by_order.
struct Reference {
    std::vector<double> pmf;          ///< printed cell probabilities; empty when not printed
    std::vector<double> odds_ratios;  ///< marginal, pair-lexicographic
    int moment_digits = 3;            ///< rounding used for the printed moments
    std::vector<double> moments;      ///< empty when not printed
    std::optional<double> top_order_odds_ratio;
    std::optional<std::size_t> vertex_count;
    int vertex_digits = 3;  ///< rounding that reproduces the printed vertices
    std::vector<std::vector<double>> uniform_vertices;
    std::vector<std::vector<double>> observed_vertices;
    std::vector<std::vector<double>> zero_mean;  ///< one row per uniform vertex
    std::vector<std::vector<double>> corner;
};

Reference reference(std::string_view name);

}  // namespace bintab::datasets
