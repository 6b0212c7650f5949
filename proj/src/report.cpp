#include "bh/report.hpp"

#include <cstdio>

namespace bh {

namespace {

Vec to_vec(const json& j) { return j.get<Vec>(); }

Matrix to_matrix(const json& j) {
    Matrix m;
    for (const auto& row : j)
        m.push_back(row.get<Vec>());
    return m;
}

const char* to_string(MatrixEntry e) {
    switch (e) {
    case MatrixEntry::verified: return "verified";
    case MatrixEntry::violated: return "violated";
    case MatrixEntry::not_applicable: return "not_applicable";
    case MatrixEntry::observational: return "observational";
    }
    return "?";
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

NormedSpace parse_space(const json& j) {
    const int dim = j.at("dim").get<int>();
    const std::string norm = j.at("norm").get<std::string>();
    if (norm == "euclidean")
        return NormedSpace::euclidean(dim);
    if (norm == "weighted")
        return NormedSpace::weighted(to_vec(j.at("weights")));
    if (norm == "lp")
        return NormedSpace::lp(dim, j.at("p").get<double>());
    if (norm == "linf")
        return NormedSpace::linf(dim);
    if (norm == "l1")
        return NormedSpace::l1(dim);
    throw std::invalid_argument("unknown norm kind: " + norm);
}

ConvexDomain parse_domain(const json& j, const NormedSpace& space) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "all")
        return ConvexDomain::whole_space(space);
    if (kind == "ball")
        return ConvexDomain::open_ball(space, to_vec(j.at("center")),
                                       j.at("radius").get<double>());
    if (kind == "box")
        return ConvexDomain::open_box(space, to_vec(j.at("lower")),
                                      to_vec(j.at("upper")));
    if (kind == "halfspaces") {
        std::vector<Halfspace> faces;
        for (const auto& fj : j.at("faces"))
            faces.push_back(
                Halfspace{Covector{to_vec(fj.at("normal"))}, fj.at("offset").get<double>()});
        return ConvexDomain::halfspace_intersection(space, std::move(faces));
    }
    throw std::invalid_argument("unknown domain kind: " + kind);
}

FunctionOracle parse_oracle(const json& j) {
    const std::string name = j.at("name").get<std::string>();
    OracleParams params;
    if (j.contains("params")) {
        const json& p = j.at("params");
        if (p.contains("A"))
            params.A = to_matrix(p.at("A"));
        if (p.contains("c"))
            params.c = to_vec(p.at("c"));
        if (p.contains("dim"))
            params.dim = p.at("dim").get<int>();
    }
    return builtin(name, params);
}

json space_to_json(const NormedSpace& s) {
    json j{{"dim", s.dim()}, {"norm", to_string(s.kind())}};
    if (s.kind() == NormKind::weighted_euclidean)
        j["weights"] = s.weights();
    if (s.kind() == NormKind::lp)
        j["p"] = s.p();
    return j;
}

json domain_to_json(const ConvexDomain& d) {
    switch (d.kind()) {
    case DomainKind::whole_space: return json{{"kind", "all"}};
    case DomainKind::open_ball: return json{{"kind", "ball"}};
    case DomainKind::open_box: return json{{"kind", "box"}};
    case DomainKind::halfspaces: return json{{"kind", "halfspaces"}};
    }
    return json{};
}

json oracle_to_json(const FunctionOracle& f) {
    json j{{"name", f.name}, {"dim", f.dim}, {"convex", f.convex}};
    return j;
}

json verdict_to_json(const ConditionVerdict& v) {
    json j{{"condition", to_string(v.condition)},
           {"L", v.L},
           {"holds", v.holds},
           {"worst_margin", v.worst_margin},
           {"witness", json{{"x", v.witness_x}, {"y", v.witness_y}}}};
    if (v.witness_lambda)
        j["witness"]["lambda"] = *v.witness_lambda;
    return j;
}

json estimate_to_json(const ConstantEstimate& e) {
    json j{{"condition", to_string(e.condition)},
           {"L_hat", e.L_hat},
           {"unbounded", e.unbounded},
           {"degenerate", e.degenerate},
           {"samples_used", e.samples_used},
           {"witness", json{{"x", e.witness_x}, {"y", e.witness_y}}}};
    if (e.witness_lambda)
        j["witness"]["lambda"] = *e.witness_lambda;
    return j;
}

json implication_report_to_json(const ImplicationReport& r) {
    json estimates = json::array();
    for (const auto& [c, e] : r.estimates)
        estimates.push_back(estimate_to_json(e));
    json matrix = json::array();
    for (const auto& [pr, entry] : r.matrix)
        matrix.push_back(json{{"from", to_string(pr.first)},
                              {"to", to_string(pr.second)},
                              {"entry", to_string(entry)}});
    json orderings = json::array();
    for (const auto& o : r.constant_orderings)
        orderings.push_back(json{{"condition_a", to_string(o.a)},
                                 {"condition_b", to_string(o.b)},
                                 {"L_hat_a", o.L_a},
                                 {"L_hat_b", o.L_b},
                                 {"relation", o.relation},
                                 {"satisfied", o.satisfied}});
    return json{{"space_class", r.space_class},
                {"estimates", estimates},
                {"matrix", matrix},
                {"constant_orderings", orderings},
                {"degenerate", r.degenerate},
                {"all_verified", r.all_verified}};
}

json scenario_report_to_json(const ScenarioReport& r) {
    json results = json::array();
    for (const auto& e : r.results)
        results.push_back(json{{"description", e.description},
                               {"passed", e.passed},
                               {"observed", e.observed},
                               {"expected", e.expected}});
    return json{{"scenario", r.name}, {"all_passed", r.all_passed}, {"results", results}};
}

namespace {

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (j.is_array()) {
        int i = 0;
        for (const auto& v : j)
            flatten(v, prefix + "[" + std::to_string(i++) + "]", rows);
    } else if (j.is_number_float()) {
        rows.emplace_back(prefix, format_double(j.get<double>()));
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

} // namespace

std::string report_to_csv(const json& report) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::string out = "key,value\n";
    for (const auto& [k, v] : rows) {
        out += k;
        out += ',';
        out += v;
        out += '\n';
    }
    return out;
}

} // namespace bh
