#include "bintab/datasets.hpp"

namespace bintab::datasets {

namespace {

TableDocument counts(int d, std::initializer_list<long> cells, std::vector<std::string> labels) {
    TableDocument doc;
    doc.d = d;
    doc.kind = CellKind::counts;
    for (long c : cells) doc.cells.emplace_back(c);
    doc.labels = std::move(labels);
    return doc;
}

}  // namespace

std::vector<std::string> names() { return {"example1", "water", "raters"}; }

TableDocument table(std::string_view name) {
    if (name == "example1") {
        TableDocument doc;
        doc.d = 3;
        doc.kind = CellKind::probabilities;
        for (const char* c : {"1/10", "1/20", "3/10", "1/5", "1/10", "1/20", "3/20", "1/20"}) doc.cells.push_back(parse_rational(c));
        return doc;
    }
    if (name == "water")
        return counts(4, {19, 57, 29, 63, 29, 49, 27, 53, 47, 84, 75, 134, 90, 107, 53, 92},
                      {"softness", "preference", "previous_user", "temperature"});
    if (name == "raters") return counts(3, {113, 5, 5, 7, 4, 3, 3, 24}, {"rater1", "rater2", "rater3"});
    throw DomainError("unknown dataset '" + std::string(name) + "'");
}

Reference reference(std::string_view name) {
    Reference r;
    if (name == "example1") {
        r.pmf = {0.1, 0.05, 0.3, 0.2, 0.1, 0.05, 0.15, 0.05};
        r.odds_ratios = {0.40, 0.64, 1.11};
        r.moments = {0.194, 0.222, 0.257};
        r.vertex_count = 2;
        r.uniform_vertices = {{0, 0.194, 0.222, 0.084, 0.257, 0.05, 0.021, 0.173},
                              {0.173, 0.021, 0.05, 0.257, 0.084, 0.222, 0.194, 0}};
        r.observed_vertices = {{0.050, 0.100, 0.350, 0.150, 0.150, 0, 0.100, 0.100},
                               {0.150, 0, 0.250, 0.250, 0.050, 0.100, 0.200, 0}};
        r.zero_mean = {{-4.25, 1.76, 1.85, 2.03, -2.17, -1.92, -1.75, 2.69},
                       {-4.25, -1.76, -1.85, -2.03, -2.17, -1.92, -1.75, -2.69}};
        r.corner = {{-18.42, 17.06, 16.92, 16.78, -19.41, -18.42, -17.75, 21.49},
                    {-1.76, -0.72, -1.24, -2.10, 2.08, 3.07, 3.74, -21.49}};
        return r;
    }
    if (name == "water") {
        r.odds_ratios = {1.070, 0.966, 0.737, 0.563, 0.761, 1.158};
        r.moments = {0.254, 0.248, 0.231, 0.214, 0.233, 0.259};
        r.vertex_count = 96;
        return r;
    }
    if (name == "raters") {
        r.pmf = {0.689, 0.03, 0.03, 0.043, 0.024, 0.018, 0.018, 0.146};
        r.odds_ratios = {37.929, 37.929, 56.672};
        r.top_order_odds_ratio = 2.96625;
        r.vertex_count = 2;
        r.vertex_digits = 6;
        r.uniform_vertices = {{0.372, 0.059, 0.059, 0.011, 0.07, 0, 0, 0.43},
                              {0.43, 0, 0, 0.07, 0.011, 0.059, 0.059, 0.372}};
        r.zero_mean = {{-6.44, -3.65, -0.21, -0.21, 0.66, 0.66, 4.19, 4.14},
                       {-6.44, 3.65, 0.21, 0.21, 0.66, 0.66, 4.19, -4.14}};
        r.corner = {{-0.99, -1.67, -1.85, -1.85, -13.91, -13.91, 0.19, 33.14},
                    {-0.84, -3.65, -17.58, -17.58, 19.23, 19.23, 33.34, -33.14}};
        return r;
    }
    throw DomainError("unknown dataset '" + std::string(name) + "'");
}

}  // namespace bintab::datasets
