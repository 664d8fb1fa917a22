#pragma once

// Table documents (JSON and CSV) and JSON renderings of every result type.

#include "bintab/baselines.hpp"
#include "bintab/constraints.hpp"
#include "bintab/geometry.hpp"
#include "bintab/loglinear.hpp"
#include "bintab/sampling.hpp"
#include "bintab/table.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace bintab {

enum class CellKind { counts, probabilities };

/// A d-way table as read from disk: 2^d exact cell values in lexicographic
/// order plus optional axis names.
struct TableDocument {
    int d = 0;
    CellKind kind = CellKind::probabilities;
    std::vector<Rational> cells;
    std::vector<std::string> labels;

    /// Counts must be nonnegative integers; probabilities nonnegative with
    /// unit sum. Throws ParseError naming the offending cell.
    void validate() const;
    ExactPmf pmf() const;
};

/// {"d": 3, "kind": "counts"|"probabilities", "cells": [...], "labels": [...]}.
/// Cells are numbers or strings ("1/3", "0.25"); numbers are read through
/// their shortest decimal text. Probabilities summing to 1 within 1e-9 are
/// divided by their exact total.
TableDocument parse_table_json(std::string_view text);

/// Header "x1,...,xd,value" then one row per cell in any order. Duplicate or
/// missing configurations are errors. `kind` is inferred: all-integer values
/// with a total other than 1 are counts.
TableDocument parse_table_csv(std::string_view text);

/// Dispatches on the ".csv" extension; anything else is read as JSON.
TableDocument load_table(const std::string& path);

/// Exact rational cell strings, so reading the output back is lossless.
std::string table_to_json(const TableDocument& doc);
std::string table_to_csv(const TableDocument& doc);

nlohmann::json to_json(const ExactPmf& p);
nlohmann::json to_json(const Pmf& p);
nlohmann::json to_json(const MarginTargets& t);
nlohmann::json to_json(const ConstraintMatrix& h);
nlohmann::json to_json(const VertexSet& v);
nlohmann::json to_json(const LogLinearParams& params);
nlohmann::json to_json(const IpfReport& report);
nlohmann::json to_json(const SamplerConfig& config, std::string_view method);

ExactPmf exact_pmf_from_json(const nlohmann::json& j);
VertexSet vertex_set_from_json(const nlohmann::json& j);

}  // namespace bintab
