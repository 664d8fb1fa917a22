#include "bintab/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace bintab {

using nlohmann::json;

namespace {

constexpr double kProbabilityTolerance = 1e-9;

Rational cell_value(const json& v, long cell) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(Integer(v.dump(), 10));
        if (v.is_number()) {
            const double x = v.get<double>();
            if (!std::isfinite(x)) throw ParseError("non-finite value", cell);
            return rational_from_double(x);
        }
    } catch (const ParseError& e) {
        if (e.cell() >= 0) throw;
        throw ParseError(e.what(), cell);
    }
    throw ParseError("cell value must be a number or a rational string", cell);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

// Probabilities inside the tolerance are rescaled by their exact total.
void settle_kind(TableDocument& doc) {
    if (doc.kind != CellKind::probabilities) return;
    Rational total = 0;
    for (const auto& c : doc.cells) total += c;
    if (total == 1) return;
    if (std::abs(total.get_d() - 1.0) > kProbabilityTolerance)
        throw ParseError("probabilities sum to " + to_decimal(total, 12) + ", not 1");
    for (auto& c : doc.cells) c /= total;
}

json rational_array(std::span<const Rational> values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

RowLabel parse_row_label(const std::string& s) {
    RowLabel label;
    if (s.size() == 2 && s[0] == 'm') {
        label.kind = RowKind::margin;
        label.i = s[1] - '1';
    } else if (s.size() == 4 && s.rfind("mu", 0) == 0) {
        label.kind = RowKind::moment;
        label.i = s[2] - '1';
        label.j = s[3] - '1';
    } else {
        throw ParseError("bad constraint row label '" + s + "'");
    }
    return label;
}

}  // namespace

void TableDocument::validate() const {
    check_dimension(d);
    if (cells.size() != cell_count(d))
        throw ParseError("expected " + std::to_string(cell_count(d)) + " cells, got " + std::to_string(cells.size()));
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(d))
        throw ParseError("expected " + std::to_string(d) + " axis labels");
    Rational total = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (cells[k] < 0) throw ParseError("negative cell value", static_cast<long>(k));
        if (kind == CellKind::counts && cells[k].get_den() != 1)
            throw ParseError("count is not an integer", static_cast<long>(k));
        total += cells[k];
    }
    if (kind == CellKind::counts && total == 0) throw ParseError("all counts are zero");
    if (kind == CellKind::probabilities && total != 1) throw ParseError("probabilities do not sum to 1");
}

ExactPmf TableDocument::pmf() const {
    validate();
    if (kind == CellKind::probabilities) return ExactPmf(d, cells);
    Rational total = 0;
    for (const auto& c : cells) total += c;
    std::vector<Rational> p;
    p.reserve(cells.size());
    for (const auto& c : cells) p.push_back(c / total);
    return ExactPmf(d, std::move(p));
}

TableDocument parse_table_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("table document must be a JSON object");
    if (!j.contains("cells") || !j["cells"].is_array()) throw ParseError("table document needs a 'cells' array");
    TableDocument doc;
    const auto& cells = j["cells"];
    if (j.contains("d")) {
        if (!j["d"].is_number_integer()) throw ParseError("'d' must be an integer");
        doc.d = j["d"].get<int>();
    } else {
        doc.d = std::bit_width(cells.size()) - 1;
    }
    const std::string kind = j.value("kind", std::string("probabilities"));
    if (kind == "counts")
        doc.kind = CellKind::counts;
    else if (kind == "probabilities")
        doc.kind = CellKind::probabilities;
    else
        throw ParseError("unknown kind '" + kind + "'");
    for (std::size_t k = 0; k < cells.size(); ++k) doc.cells.push_back(cell_value(cells[k], static_cast<long>(k)));
    if (j.contains("labels")) doc.labels = j["labels"].get<std::vector<std::string>>();
    if (doc.d < 1 || doc.d > kMaxDimension) throw ParseError("dimension out of range");
    if (doc.cells.size() != cell_count(doc.d))
        throw ParseError("expected " + std::to_string(cell_count(doc.d)) + " cells, got " + std::to_string(doc.cells.size()));
    settle_kind(doc);
    doc.validate();
    return doc;
}

TableDocument parse_table_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    for (auto line : split(text, '\n'))
        if (!line.empty() && line.front() != '#') lines.push_back(line);
    if (lines.empty()) throw ParseError("empty CSV document");
    const auto header = split(lines.front(), ',');
    if (header.size() < 2 || header.back() != "value") throw ParseError("CSV header must be x1,...,xd,value");
    TableDocument doc;
    doc.d = static_cast<int>(header.size()) - 1;
    if (doc.d > kMaxDimension) throw ParseError("dimension out of range");
    for (int a = 0; a < doc.d; ++a) doc.labels.emplace_back(header[static_cast<std::size_t>(a)]);
    if (std::all_of(doc.labels.begin(), doc.labels.end(), [&, a = 0](const std::string& l) mutable {
            return l == "x" + std::to_string(++a);
        }))
        doc.labels.clear();

    const std::size_t n = cell_count(doc.d);
    std::vector<std::optional<Rational>> slots(n);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto fields = split(lines[r], ',');
        if (fields.size() != header.size())
            throw ParseError("CSV row " + std::to_string(r) + " has " + std::to_string(fields.size()) + " fields");
        std::size_t offset = 0;
        for (int a = 0; a < doc.d; ++a) {
            const auto f = fields[static_cast<std::size_t>(a)];
            if (f != "0" && f != "1") throw ParseError("CSV row " + std::to_string(r) + ": axis values must be 0 or 1");
            offset = 2 * offset + static_cast<std::size_t>(f == "1");
        }
        if (slots[offset]) throw ParseError("duplicate configuration", static_cast<long>(offset));
        try {
            slots[offset] = parse_rational(fields.back());
        } catch (const ParseError& e) {
            throw ParseError(e.what(), static_cast<long>(offset));
        }
    }
    bool integral = true;
    Rational total = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!slots[k]) throw ParseError("missing configuration", static_cast<long>(k));
        integral = integral && slots[k]->get_den() == 1;
        total += *slots[k];
        doc.cells.push_back(*slots[k]);
    }
    doc.kind = integral && total != 1 ? CellKind::counts : CellKind::probabilities;
    settle_kind(doc);
    doc.validate();
    return doc;
}

TableDocument load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    return csv ? parse_table_csv(buf.str()) : parse_table_json(buf.str());
}

std::string table_to_json(const TableDocument& doc) {
    json j;
    j["d"] = doc.d;
    j["kind"] = doc.kind == CellKind::counts ? "counts" : "probabilities";
    j["cells"] = rational_array(doc.cells);
    if (!doc.labels.empty()) j["labels"] = doc.labels;
    return j.dump(2) + "\n";
}

std::string table_to_csv(const TableDocument& doc) {
    std::string out;
    for (int a = 0; a < doc.d; ++a)
        out += (doc.labels.empty() ? "x" + std::to_string(a + 1) : doc.labels[static_cast<std::size_t>(a)]) + ",";
    out += "value\n";
    for (std::size_t k = 0; k < doc.cells.size(); ++k) {
        for (int a = 0; a < doc.d; ++a) out += std::to_string(axis_bit(k, a, doc.d)) + ",";
        out += to_string(doc.cells[k]) + "\n";
    }
    return out;
}

json to_json(const ExactPmf& p) {
    return json{{"d", p.dimension()}, {"cells", rational_array(p.cells())}};
}

json to_json(const Pmf& p) {
    return json{{"d", p.dimension()}, {"cells", std::vector<double>(p.cells().begin(), p.cells().end())}};
}

json to_json(const MarginTargets& t) {
    json moments = json::object();
    for (auto [i, j] : axis_pairs(t.d)) moments["mu" + std::to_string(i + 1) + std::to_string(j + 1)] = to_string(t.moment(i, j));
    return json{{"d", t.d}, {"univariate", rational_array(t.univariate)}, {"moments", moments}};
}

json to_json(const ConstraintMatrix& h) {
    json rows = json::array(), labels = json::array();
    for (const auto& row : h.rows) rows.push_back(rational_array(row));
    for (const auto& l : h.labels) labels.push_back(l.to_string());
    return json{{"d", h.d}, {"labels", labels}, {"rows", rows}};
}

json to_json(const VertexSet& v) {
    json vertices = json::array();
    for (const auto& r : v.vertices) vertices.push_back(rational_array(r.cells()));
    return json{{"d", v.d}, {"count", v.size()}, {"vertices", vertices}, {"constraints", to_json(v.constraints)}};
}

json to_json(const LogLinearParams& params) {
    json coefficients = json::object();
    for (auto mask : subsets_by_order(params.d)) {
        const auto label = subset_label(mask, params.d);
        coefficients[label.empty() ? "∅" : label] = params[mask];
    }
    return json{{"parametrization", params.parametrization == Parametrization::zero_mean ? "zero-mean" : "corner"},
                {"eps", params.eps},
                {"coefficients", coefficients}};
}

json to_json(const IpfReport& report) {
    return json{{"table", to_json(report.table)},
                {"iterations", report.iterations},
                {"final_residual", report.final_residual},
                {"converged", report.converged},
                {"history", report.history}};
}

json to_json(const SamplerConfig& config, std::string_view method) {
    return json{{"method", method},     {"rng", CounterRng::kName},        {"seed", config.seed},
                {"count", config.count}, {"burn_in", config.burn_in}, {"thinning", config.thinning}};
}

ExactPmf exact_pmf_from_json(const json& j) {
    std::vector<Rational> cells;
    const auto& arr = j.is_array() ? j : j.at("cells");
    for (std::size_t k = 0; k < arr.size(); ++k) cells.push_back(cell_value(arr[k], static_cast<long>(k)));
    const int d = std::bit_width(cells.size()) - 1;
    return ExactPmf(d, std::move(cells));
}

VertexSet vertex_set_from_json(const json& j) {
    try {
        VertexSet v;
        v.d = j.at("d").get<int>();
        const auto& h = j.at("constraints");
        v.constraints.d = v.d;
        for (const auto& row : h.at("rows")) {
            std::vector<Rational> r;
            for (std::size_t k = 0; k < row.size(); ++k) r.push_back(cell_value(row[k], static_cast<long>(k)));
            v.constraints.rows.push_back(std::move(r));
        }
        for (const auto& l : h.at("labels")) v.constraints.labels.push_back(parse_row_label(l.get<std::string>()));
        for (const auto& r : j.at("vertices")) v.vertices.push_back(exact_pmf_from_json(r));
        return v;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed vertex file: ") + e.what());
    }
}

}  // namespace bintab
