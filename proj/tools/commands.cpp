#include "commands.hpp"

#include "bintab/baselines.hpp"
#include "bintab/datasets.hpp"
#include "bintab/geometry.hpp"
#include "bintab/io.hpp"
#include "bintab/loglinear.hpp"
#include "bintab/sampling.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace bintab::cli {

using nlohmann::json;

namespace {

struct Globals {
    bool json = false;
    int digits = kDefaultDigits;
    std::string precision = "rational";
    std::optional<double> tol;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string margins = "uniform";
};

std::string fixed(double v, int places) {
    if (std::isnan(v)) return "undefined";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::abs(v) < 0.5 * std::pow(10.0, -places)) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

std::string general(double v) {
    if (std::isnan(v)) return "undefined";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

json ratio_json(const OddsRatio<Rational>& r) {
    switch (r.kind) {
        case RatioKind::finite: return json{{"value", r.value.get_d()}, {"exact", to_string(r.value)}};
        case RatioKind::infinite: return json{{"value", "inf"}};
        default: return json{{"value", "undefined"}};
    }
}

std::string pair_name(int i, int j) { return std::to_string(i + 1) + std::to_string(j + 1); }

std::string cell_name(std::size_t k, int d) { return Configuration::from_offset(k, d).to_string(); }

TableDocument read_input(const std::string& source) {
    constexpr std::string_view prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) return datasets::table(source.substr(prefix.size()));
    return load_table(source);
}

MarginMode margin_mode(const Globals& g) { return g.margins == "observed" ? MarginMode::observed : MarginMode::uniform; }

EnumerationOptions enumeration(const Globals& g) {
    EnumerationOptions opts;
    opts.threads = std::max(1u, g.threads);
    return opts;
}

VertexSet vertices_from_table(const Globals& g, const TableDocument& doc) {
    const auto targets = targets_from_pmf(doc.pmf(), margin_mode(g), g.digits);
    return enumerate_vertices(build_constraint_matrix(targets), enumeration(g));
}

VertexSet read_vertices(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return vertex_set_from_json(j);
}

VertexSet resolve_vertices(const Globals& g, const std::string& input, const std::string& vertex_file) {
    if (!vertex_file.empty()) return read_vertices(vertex_file);
    if (input.empty()) throw ParseError("need an input table or --vertices FILE");
    return vertices_from_table(g, read_input(input));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << text;
}

std::string render_cell(const Rational& v, const Globals& g) {
    return g.precision == "float" ? general(v.get_d()) : to_string(v);
}

json exact_or_float(const ExactPmf& p, const Globals& g) {
    if (g.precision == "float") return to_json(to_floating(p));
    return to_json(p);
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const Globals& g, const std::string& input, std::ostream& out) {
    const auto doc = read_input(input);
    const auto p = doc.pmf();
    const int d = p.dimension();
    json j;
    j["d"] = d;
    j["kind"] = doc.kind == CellKind::counts ? "counts" : "probabilities";
    j["pmf"] = exact_or_float(p, g);
    json margins = json::array();
    for (int i = 0; i < d; ++i) {
        const auto [m0, m1] = univariate_margin(p, i);
        margins.push_back({{"axis", i + 1}, {"p0", m0.get_d()}, {"p1", m1.get_d()}});
    }
    j["margins"] = margins;
    json pairs = json::array();
    for (auto [a, b] : axis_pairs(d)) {
        json row{{"pair", pair_name(a, b)}, {"moment", second_moment(p, a, b).get_d()}, {"odds_ratio", ratio_json(marginal_odds_ratio(p, a, b))}};
        try {
            row["correlation"] = correlation(p, a, b);
        } catch (const DegenerateMarginError&) {
            row["correlation"] = "undefined";
        }
        pairs.push_back(row);
    }
    j["pairs"] = pairs;
    json conditional = json::array();
    for (auto [a, b] : axis_pairs(d)) {
        for (std::size_t r = 0; r < cell_count(d - 2); ++r) {
            const auto rest = d > 2 ? Configuration::from_offset(r, d - 2) : Configuration();
            conditional.push_back({{"pair", pair_name(a, b)},
                                   {"given", rest.to_string()},
                                   {"odds_ratio", ratio_json(conditional_odds_ratio(p, a, b, rest))}});
        }
    }
    j["conditional_odds_ratios"] = conditional;
    j["top_order_odds_ratio"] = ratio_json(top_order_odds_ratio(p));

    if (g.json) {
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "dimension " << d << ", " << p.size() << " cells (" << j["kind"].get<std::string>() << ")\n\n";
    out << "cell  p\n";
    for (std::size_t k = 0; k < p.size(); ++k) out << std::left << std::setw(d + 2) << cell_name(k, d) << fixed(p[k].get_d(), 6) << "\n";
    out << "\nunivariate margins\naxis  P(X=0)    P(X=1)\n";
    for (const auto& m : margins)
        out << std::left << std::setw(6) << m["axis"].get<int>() << fixed(m["p0"], 6) << "  " << fixed(m["p1"], 6) << "\n";
    out << "\npairs\npair  moment    correlation  odds_ratio\n";
    for (auto [a, b] : axis_pairs(d)) {
        double cor = std::numeric_limits<double>::quiet_NaN();
        try {
            cor = correlation(p, a, b);
        } catch (const DegenerateMarginError&) {
        }
        out << std::left << std::setw(6) << pair_name(a, b) << fixed(second_moment(p, a, b).get_d(), 6) << "  " << std::setw(11)
            << fixed(cor, 6) << "  " << general(marginal_odds_ratio(p, a, b).as_double()) << "\n";
    }
    if (d > 2) {
        out << "\nconditional odds ratios\npair  given  odds_ratio\n";
        for (const auto& c : conditional) {
            const auto& v = c["odds_ratio"]["value"];
            out << std::left << std::setw(6) << c["pair"].get<std::string>() << std::setw(7) << c["given"].get<std::string>()
                << (v.is_number() ? general(v.get<double>()) : v.get<std::string>()) << "\n";
        }
    }
    out << "\ntop-order odds ratio " << general(top_order_odds_ratio(p).as_double()) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- targets / constraints

int cmd_targets(const Globals& g, const std::string& input, std::ostream& out) {
    const auto t = targets_from_pmf(read_input(input).pmf(), margin_mode(g), g.digits);
    if (g.json) {
        out << to_json(t).dump(2) << "\n";
        return kExitOk;
    }
    out << "univariate margins P(X_i=1)\n";
    for (int i = 0; i < t.d; ++i) out << "  m" << i + 1 << " = " << render_cell(t.univariate[static_cast<std::size_t>(i)], g) << "\n";
    out << "second-order moments (digits " << g.digits << ")\n";
    for (auto [i, j] : axis_pairs(t.d)) out << "  mu" << pair_name(i, j) << " = " << to_decimal(t.moment(i, j), g.digits) << "\n";
    return kExitOk;
}

int cmd_constraints(const Globals& g, const std::string& input, std::ostream& out) {
    const auto h = build_constraint_matrix(targets_from_pmf(read_input(input).pmf(), margin_mode(g), g.digits));
    if (g.json) {
        out << to_json(h).dump(2) << "\n";
        return kExitOk;
    }
    out << "H: " << h.rows.size() << " x " << h.columns() << "\n";
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 0;
    for (const auto& row : h.rows) {
        auto& r = cells.emplace_back();
        for (const auto& v : row) {
            r.push_back(render_cell(v, g));
            width = std::max(width, r.back().size());
        }
    }
    out << std::setw(6) << "";
    for (std::size_t k = 0; k < h.columns(); ++k) out << std::right << std::setw(static_cast<int>(width) + 1) << cell_name(k, h.d);
    out << "\n";
    for (std::size_t r = 0; r < cells.size(); ++r) {
        out << std::left << std::setw(6) << h.labels[r].to_string();
        for (const auto& c : cells[r]) out << std::right << std::setw(static_cast<int>(width) + 1) << c;
        out << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- vertices / mixture / decompose

int cmd_vertices(const Globals& g, const std::string& input, const std::string& output, std::ostream& out) {
    const auto v = vertices_from_table(g, read_input(input));
    if (v.empty()) throw InfeasibleError("the feasible set is empty");
    const int dim = polytope_dimension(v);
    json j = to_json(v);
    if (!output.empty()) {
        write_text(output, j.dump(2) + "\n");
        if (g.json)
            out << json{{"count", v.size()}, {"dimension", dim}, {"output", output}}.dump() << "\n";
        else
            out << "n_d = " << v.size() << "\npolytope dimension = " << dim << "\nwrote " << output << "\n";
        return kExitOk;
    }
    if (g.json) {
        j["dimension"] = dim;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "n_d = " << v.size() << "\npolytope dimension = " << dim << "\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << "r" << i + 1 << ":";
        for (const auto& c : v[i].cells()) out << " " << render_cell(c, g);
        out << "\n";
    }
    return kExitOk;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int cmd_mixture(const Globals& g, const std::string& input, const std::string& vertex_file, const std::string& weights,
                std::ostream& out) {
    const auto v = resolve_vertices(g, input, vertex_file);
    std::vector<Rational> theta;
    for (const auto& w : split_list(weights)) theta.push_back(parse_rational(w));
    if (theta.size() != v.size())
        throw DomainError("got " + std::to_string(theta.size()) + " weights for " + std::to_string(v.size()) + " vertices");
    const auto p = mixture(std::span<const Rational>(theta), v);
    if (g.json) {
        out << exact_or_float(p, g).dump(2) << "\n";
        return kExitOk;
    }
    for (std::size_t k = 0; k < p.size(); ++k) out << cell_name(k, p.dimension()) << "  " << render_cell(p[k], g) << "\n";
    return kExitOk;
}

int cmd_decompose(const Globals& g, const std::string& input, const std::string& vertex_file, std::ostream& out) {
    const auto doc = read_input(input);
    const auto v = vertex_file.empty() ? vertices_from_table(g, doc) : read_vertices(vertex_file);
    const auto w = decompose(to_floating(doc.pmf()), v, g.tol.value_or(1e-9));
    if (g.json) {
        out << json{{"theta", w.theta}, {"residual", w.residual}}.dump(2) << "\n";
        return kExitOk;
    }
    for (std::size_t i = 0; i < w.theta.size(); ++i) out << "theta" << i + 1 << " = " << general(w.theta[i]) << "\n";
    out << "residual = " << general(w.residual) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- loglinear

int cmd_loglinear(const Globals& g, const std::string& input, const std::string& vertex_file, bool of_vertices,
                  const std::string& which, double eps, std::ostream& out) {
    std::vector<std::pair<std::string, Pmf>> subjects;
    if (of_vertices || !vertex_file.empty()) {
        const auto v = resolve_vertices(g, input, vertex_file);
        for (std::size_t i = 0; i < v.size(); ++i) subjects.emplace_back("r" + std::to_string(i + 1), to_floating(v[i]));
    } else {
        subjects.emplace_back("p", to_floating(read_input(input).pmf()));
    }
    std::vector<Parametrization> kinds;
    if (which != "corner") kinds.push_back(Parametrization::zero_mean);
    if (which != "zero-mean") kinds.push_back(Parametrization::corner);

    json j = json::array();
    for (const auto& [name, p] : subjects)
        for (auto kind : kinds) {
            const auto params = kind == Parametrization::zero_mean ? zero_mean_params(p, eps) : corner_params(p, eps);
            json entry = to_json(params);
            entry["pmf"] = name;
            j.push_back(entry);
        }
    if (g.json) {
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    const int d = subjects.front().second.dimension();
    out << std::left << std::setw(12) << "coding" << std::setw(5) << "pmf";
    for (auto mask : subsets_by_order(d)) {
        const auto label = subset_label(mask, d);
        out << std::right << std::setw(10) << (label.empty() ? "lambda" : "l" + label);
    }
    out << "\n";
    for (const auto& entry : j) {
        out << std::left << std::setw(12) << entry["parametrization"].get<std::string>() << std::setw(5) << entry["pmf"].get<std::string>();
        for (auto mask : subsets_by_order(d)) {
            const auto label = subset_label(mask, d);
            out << std::right << std::setw(10) << fixed(entry["coefficients"][label.empty() ? "∅" : label].get<double>(), 3);
        }
        out << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- sample / ipf / export

int cmd_sample(const Globals& g, const std::string& input, const std::string& vertex_file, const std::string& method,
               SamplerConfig cfg, const std::string& output, std::ostream& out) {
    cfg.seed = g.seed;
    const auto v = resolve_vertices(g, input, vertex_file);
    if (v.empty()) throw InfeasibleError("the feasible set is empty");
    std::vector<Pmf> draws;
    if (method == "dirichlet") {
        draws = sample_dirichlet(v, cfg);
    } else {
        std::vector<Rational> theta(v.size(), Rational(1, static_cast<unsigned long>(v.size())));
        draws = sample_hit_and_run(v.constraints, to_floating(mixture(std::span<const Rational>(theta), v)), cfg);
    }
    std::ostringstream text;
    text << json{{"header", to_json(cfg, method)}}.dump() << "\n";
    for (const auto& p : draws) text << json(std::vector<double>(p.cells().begin(), p.cells().end())).dump() << "\n";
    if (output.empty())
        out << text.str();
    else
        write_text(output, text.str());
    return kExitOk;
}

int cmd_ipf(const Globals& g, const std::string& input, std::size_t max_iter, std::ostream& out) {
    const auto targets = targets_from_pmf(read_input(input).pmf(), margin_mode(g), g.digits);
    const auto report = ipf_max_entropy(targets, g.tol.value_or(1e-10), max_iter);
    if (g.json) {
        json j = to_json(report);
        j["top_order_odds_ratio"] = top_order_odds_ratio(report.table).as_double();
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << (report.converged ? "converged" : "NOT converged") << " after " << report.iterations << " sweeps, residual "
        << general(report.final_residual) << "\n";
    for (std::size_t k = 0; k < report.table.size(); ++k)
        out << cell_name(k, report.table.dimension()) << "  " << fixed(report.table[k], 6) << "\n";
    out << "top-order odds ratio " << general(top_order_odds_ratio(report.table).as_double()) << "\n";
    return kExitOk;
}

int cmd_export(const std::string& input, const std::string& format, const std::string& output, std::ostream& out) {
    const auto doc = read_input(input);
    const auto text = format == "csv" ? table_to_csv(doc) : table_to_json(doc);
    if (output.empty())
        out << text;
    else
        write_text(output, text);
    return kExitOk;
}

// ---------------------------------------------------------------- reproduce

struct Row {
    std::string entry;
    double computed;
    std::optional<double> published;
};

struct Section {
    std::string title;
    std::vector<Row> rows;
};

void add_cells(Section& s, const std::string& prefix, const Pmf& p, const std::vector<double>& published) {
    for (std::size_t k = 0; k < p.size(); ++k)
        s.rows.push_back({prefix + "[" + cell_name(k, p.dimension()) + "]", p[k],
                          published.empty() ? std::nullopt : std::optional<double>(published[k])});
}

void add_coefficients(Section& s, const std::string& prefix, const LogLinearParams& params, const std::vector<double>& published) {
    const auto order = subsets_by_order(params.d);
    for (std::size_t r = 0; r < order.size(); ++r) {
        const auto label = subset_label(order[r], params.d);
        s.rows.push_back({prefix + " " + (label.empty() ? "lambda" : "lambda^" + label), params[order[r]],
                          published.empty() ? std::nullopt : std::optional<double>(published[r])});
    }
}

Section odds_ratio_section(const ExactPmf& p, const datasets::Reference& ref) {
    Section s{"marginal odds ratios", {}};
    const auto pairs = axis_pairs(p.dimension());
    for (std::size_t r = 0; r < pairs.size(); ++r)
        s.rows.push_back({"omega" + pair_name(pairs[r].first, pairs[r].second),
                          marginal_odds_ratio(p, pairs[r].first, pairs[r].second).as_double(), ref.odds_ratios[r]});
    return s;
}

std::vector<Section> reproduce(const std::string& name, const Globals& g) {
    const auto doc = datasets::table(name);
    const auto ref = datasets::reference(name);
    const auto p = doc.pmf();
    const int d = p.dimension();
    std::vector<Section> out;

    Section data{"input table", {}};
    if (doc.kind == CellKind::counts)
        for (std::size_t k = 0; k < doc.cells.size(); ++k) data.rows.push_back({"n[" + cell_name(k, d) + "]", doc.cells[k].get_d(), std::nullopt});
    add_cells(data, "p", to_floating(p), ref.pmf);
    out.push_back(std::move(data));
    out.push_back(odds_ratio_section(p, ref));
    if (ref.top_order_odds_ratio) {
        out.push_back({"top-order odds ratio", {{"omega^" + std::string("123").substr(0, static_cast<std::size_t>(d)),
                                                 top_order_odds_ratio(p).as_double(), ref.top_order_odds_ratio}}});
    }

    const auto uniform = targets_from_pmf(p, MarginMode::uniform, ref.moment_digits);
    if (!ref.moments.empty()) {
        Section s{"second-order moments, uniform margins (digits " + std::to_string(ref.moment_digits) + ")", {}};
        const auto pairs = axis_pairs(d);
        for (std::size_t r = 0; r < pairs.size(); ++r)
            s.rows.push_back({"mu" + pair_name(pairs[r].first, pairs[r].second), uniform.moments[r].get_d(), ref.moments[r]});
        out.push_back(std::move(s));
    }

    const auto opts = enumeration(g);
    const auto v = enumerate_vertices(build_constraint_matrix(targets_from_pmf(p, MarginMode::uniform, ref.vertex_digits)), opts);
    Section geometry{"feasible polytope, uniform margins (digits " + std::to_string(ref.vertex_digits) + ")", {}};
    geometry.rows.push_back({"n_d", static_cast<double>(v.size()),
                             ref.vertex_count ? std::optional<double>(static_cast<double>(*ref.vertex_count)) : std::nullopt});
    geometry.rows.push_back({"dimension", static_cast<double>(polytope_dimension(v)), std::nullopt});
    if (!ref.uniform_vertices.empty())
        for (std::size_t i = 0; i < v.size(); ++i) add_cells(geometry, "r" + std::to_string(i + 1), to_floating(v[i]), ref.uniform_vertices[i]);
    out.push_back(std::move(geometry));

    if (!ref.zero_mean.empty()) {
        const auto fine = enumerate_vertices(build_constraint_matrix(targets_from_pmf(p, MarginMode::uniform, kDefaultDigits)), opts);
        Section s{"log-linear coefficients of the vertices (digits " + std::to_string(kDefaultDigits) + ", eps 1e-8)", {}};
        for (std::size_t i = 0; i < fine.size(); ++i)
            add_coefficients(s, "corner r" + std::to_string(i + 1), corner_params(to_floating(fine[i])), ref.corner[i]);
        for (std::size_t i = 0; i < fine.size(); ++i)
            add_coefficients(s, "zero-mean r" + std::to_string(i + 1), zero_mean_params(to_floating(fine[i])), ref.zero_mean[i]);
        out.push_back(std::move(s));
    }

    if (!ref.observed_vertices.empty()) {
        const auto obs = enumerate_vertices(build_constraint_matrix(targets_from_pmf(p, MarginMode::observed, ref.vertex_digits)), opts);
        Section s{"feasible polytope, observed margins (digits " + std::to_string(ref.vertex_digits) + ")", {}};
        s.rows.push_back({"n_d", static_cast<double>(obs.size()), static_cast<double>(ref.observed_vertices.size())});
        for (std::size_t i = 0; i < obs.size() && i < ref.observed_vertices.size(); ++i)
            add_cells(s, "r" + std::to_string(i + 1), to_floating(obs[i]), ref.observed_vertices[i]);
        out.push_back(std::move(s));
    }
    return out;
}

int cmd_reproduce(const Globals& g, const std::string& name, std::ostream& out) {
    const auto sections = reproduce(name, g);
    if (g.json) {
        json j = json::array();
        for (const auto& s : sections) {
            json rows = json::array();
            for (const auto& r : s.rows) {
                json row{{"entry", r.entry}, {"computed", r.computed}};
                if (r.published) {
                    row["published"] = *r.published;
                    row["deviation"] = r.computed - *r.published;
                }
                rows.push_back(row);
            }
            j.push_back({{"title", s.title}, {"rows", rows}});
        }
        out << json{{"dataset", name}, {"sections", j}}.dump(2) << "\n";
        return kExitOk;
    }
    out << "dataset " << name << "\n";
    for (const auto& s : sections) {
        out << "\n== " << s.title << "\n";
        out << std::left << std::setw(24) << "entry" << std::right << std::setw(14) << "computed" << std::setw(14) << "published"
            << std::setw(12) << "deviation" << "\n";
        for (const auto& r : s.rows) {
            out << std::left << std::setw(24) << r.entry << std::right << std::setw(14) << fixed(r.computed, 6);
            if (r.published)
                out << std::setw(14) << fixed(*r.published, 3) << std::setw(12) << fixed(r.computed - *r.published, 4);
            out << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binary contingency tables with fixed margins and pairwise dependence"};
    app.name("bintab");
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    app.add_option("--digits", g.digits, "Decimal places used to round second-order moments")->check(CLI::Range(0, 15));
    app.add_option("--precision-mode", g.precision, "Print exact rationals or floating values")
        ->check(CLI::IsMember({"rational", "float"}));
    app.add_option("--tol", g.tol, "Tolerance (decompose: residual; ipf: margin deviation)");
    app.add_option("--seed", g.seed, "Seed of the sampler's counter-based generator");
    app.add_option("--threads", g.threads, "Worker threads for ray enumeration");
    app.add_option("--margins", g.margins, "Univariate margins of the targets")->check(CLI::IsMember({"uniform", "observed"}));

    std::string input, vertex_file, output, weights, format = "json", which = "both", method = "dirichlet", example;
    double eps = kDefaultSmoothing;
    bool of_vertices = false;
    std::size_t max_iter = 10000;
    SamplerConfig cfg;

    const char* input_help = "Table file (.json or .csv) or builtin:NAME";
    auto* analyze = app.add_subcommand("analyze", "Margins, correlations and odds ratios of a table");
    analyze->add_option("input", input, input_help)->required();
    auto* targets = app.add_subcommand("targets", "Moment targets carrying the table's marginal odds ratios");
    targets->add_option("input", input, input_help)->required();
    auto* constraints = app.add_subcommand("constraints", "The constraint matrix H");
    constraints->add_option("input", input, input_help)->required();
    auto* vertices = app.add_subcommand("vertices", "Extreme pmfs of the feasible polytope");
    vertices->add_option("input", input, input_help)->required();
    vertices->add_option("-o,--output", output, "Write the vertex set as JSON");
    auto* mix = app.add_subcommand("mixture", "Convex combination of vertices");
    mix->add_option("input", input, input_help);
    mix->add_option("--vertices", vertex_file, "Vertex file written by 'vertices -o'");
    mix->add_option("--weights", weights, "Comma-separated weights, e.g. 1/2,1/2")->required();
    auto* dec = app.add_subcommand("decompose", "Mixture weights reproducing a table");
    dec->add_option("input", input, input_help)->required();
    dec->add_option("--vertices", vertex_file, "Vertex file; default: the table's own polytope");
    auto* loglin = app.add_subcommand("loglinear", "Saturated log-linear coefficients");
    loglin->add_option("input", input, input_help);
    loglin->add_option("--vertices", vertex_file, "Vertex file whose vertices are parametrized");
    loglin->add_flag("--of-vertices", of_vertices, "Parametrize the vertices of the table's polytope");
    loglin->add_option("--parametrization", which, "zero-mean, corner or both")->check(CLI::IsMember({"zero-mean", "corner", "both"}));
    loglin->add_option("--eps", eps, "Smoothing added before the logarithm");
    auto* sample = app.add_subcommand("sample", "Random pmfs from the feasible polytope (JSON lines)");
    sample->add_option("input", input, input_help);
    sample->add_option("--vertices", vertex_file, "Vertex file");
    sample->add_option("--method", method, "dirichlet or hit-and-run")->check(CLI::IsMember({"dirichlet", "hit-and-run"}));
    sample->add_option("--count", cfg.count, "Number of draws")->check(CLI::PositiveNumber);
    sample->add_option("--burn-in", cfg.burn_in, "Hit-and-run steps discarded first");
    sample->add_option("--thinning", cfg.thinning, "Hit-and-run steps between kept draws");
    sample->add_option("-o,--output", output, "Write draws to a file");
    auto* ipf = app.add_subcommand("ipf", "Maximum-entropy table by iterative proportional fitting");
    ipf->add_option("input", input, input_help)->required();
    ipf->add_option("--max-iter", max_iter, "Maximum number of sweeps");
    auto* repro = app.add_subcommand("reproduce", "Recompute a built-in example next to its published values");
    repro->add_option("example", example, "example1, water or raters")->required();
    auto* exp = app.add_subcommand("export", "Write a table with exact rational cells");
    exp->add_option("input", input, input_help)->required();
    exp->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    exp->add_option("-o,--output", output, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*analyze) return cmd_analyze(g, input, out);
        if (*targets) return cmd_targets(g, input, out);
        if (*constraints) return cmd_constraints(g, input, out);
        if (*vertices) return cmd_vertices(g, input, output, out);
        if (*mix) return cmd_mixture(g, input, vertex_file, weights, out);
        if (*dec) return cmd_decompose(g, input, vertex_file, out);
        if (*loglin) return cmd_loglinear(g, input, vertex_file, of_vertices, which, eps, out);
        if (*sample) return cmd_sample(g, input, vertex_file, method, cfg, output, out);
        if (*ipf) return cmd_ipf(g, input, max_iter, out);
        if (*repro) return cmd_reproduce(g, example, out);
        if (*exp) return cmd_export(input, format, output, out);
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotInPolytopeError& e) {
        err << "not in polytope: " << e.what() << " (residual " << general(e.residual()) << ")\n";
        return kExitDomain;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace bintab::cli
