// Command-line front end: condition checks, best-constant estimation,
// implication matrices and the counterexample gallery, with JSON/CSV
// reports suitable for CI pipelines.
//
// Exit codes: 0 all checks pass, 1 violation/finding, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bh/report.hpp"

namespace {

using bh::json;

struct RunConfig {
    json oracle = {{"name", "half_sq_norm"}};
    json space = {{"dim", 2}, {"norm", "euclidean"}};
    json domain = {{"kind", "all"}};
    std::vector<std::string> conditions;
    std::vector<double> L_values;
    int budget = 10000;
    std::uint64_t seed = 42;
    std::string output; // empty = stdout
    std::string format = "json";
};

json config_to_json(const RunConfig& c) {
    return json{{"oracle", c.oracle},   {"space", c.space},   {"domain", c.domain},
                {"conditions", c.conditions}, {"L", c.L_values}, {"budget", c.budget},
                {"seed", c.seed},       {"output", c.output}, {"format", c.format}};
}

RunConfig config_from_json(const json& j) {
    RunConfig c;
    if (j.contains("oracle")) c.oracle = j.at("oracle");
    if (j.contains("space")) c.space = j.at("space");
    if (j.contains("domain")) c.domain = j.at("domain");
    if (j.contains("conditions")) c.conditions = j.at("conditions").get<std::vector<std::string>>();
    if (j.contains("L")) c.L_values = j.at("L").get<std::vector<double>>();
    if (j.contains("budget")) c.budget = j.at("budget").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("output")) c.output = j.at("output").get<std::string>();
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
    return c;
}

// Accepts either inline JSON or a shorthand: oracle "name",
// space "norm" / "norm:dim", domain "all".
json parse_inline(const std::string& text, const std::string& what) {
    if (!text.empty() && text.front() == '{')
        return json::parse(text);
    if (what == "oracle")
        return json{{"name", text}};
    if (what == "space") {
        const auto colon = text.find(':');
        const std::string norm = text.substr(0, colon);
        int dim = 2;
        if (colon != std::string::npos)
            dim = std::stoi(text.substr(colon + 1));
        return json{{"dim", dim}, {"norm", norm}};
    }
    return json{{"kind", text}};
}

void emit(const RunConfig& cfg, const json& report) {
    std::string body = cfg.format == "csv" ? bh::report_to_csv(report)
                                           : report.dump(2) + "\n";
    if (cfg.output.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file: " + cfg.output);
        out << body;
    }
}

json run_header(const RunConfig& cfg, const bh::FunctionOracle& f,
                const bh::NormedSpace& s, const bh::ConvexDomain& d) {
    return json{{"oracle", bh::oracle_to_json(f)},
                {"space", bh::space_to_json(s)},
                {"domain", bh::domain_to_json(d)},
                {"seed", cfg.seed},
                {"budget", cfg.budget}};
}

std::vector<bh::ConditionId> resolve_conditions(const RunConfig& cfg,
                                                const bh::FunctionOracle& f,
                                                const bh::NormedSpace& s) {
    std::vector<bh::ConditionId> out;
    if (cfg.conditions.empty()) {
        for (bh::ConditionId c : bh::all_conditions()) {
            if (bh::needs_gradient(c) && !f.has_gradient())
                continue;
            if (bh::needs_hilbert(c) && !s.is_hilbert())
                continue;
            out.push_back(c);
        }
    } else {
        for (const auto& name : cfg.conditions)
            out.push_back(bh::condition_from_string(name));
    }
    return out;
}

int cmd_check(const RunConfig& cfg) {
    const auto f = bh::parse_oracle(cfg.oracle);
    const auto s = bh::parse_space(cfg.space);
    const auto d = bh::parse_domain(cfg.domain, s);
    const auto conds = resolve_conditions(cfg, f, s);
    const std::vector<double> Ls = cfg.L_values.empty() ? std::vector<double>{1.0}
                                                        : cfg.L_values;
    json report = run_header(cfg, f, s, d);
    json checks = json::array();
    bool all_hold = true;
    for (bh::ConditionId c : conds)
        for (double L : Ls) {
            const auto v = bh::run_condition(f, s, d, c, L, cfg.budget, cfg.seed);
            all_hold = all_hold && v.holds;
            checks.push_back(bh::verdict_to_json(v));
        }
    report["checks"] = checks;
    emit(cfg, report);
    return all_hold ? 0 : 1;
}

int cmd_estimate(const RunConfig& cfg) {
    const auto f = bh::parse_oracle(cfg.oracle);
    const auto s = bh::parse_space(cfg.space);
    const auto d = bh::parse_domain(cfg.domain, s);
    json report = run_header(cfg, f, s, d);
    json estimates = json::array();
    for (bh::ConditionId c : resolve_conditions(cfg, f, s))
        estimates.push_back(
            bh::estimate_to_json(bh::estimate_constant(f, s, d, c, cfg.budget, cfg.seed)));
    report["estimates"] = estimates;
    emit(cfg, report);
    return 0;
}

int cmd_matrix(const RunConfig& cfg) {
    const auto f = bh::parse_oracle(cfg.oracle);
    const auto s = bh::parse_space(cfg.space);
    const auto d = bh::parse_domain(cfg.domain, s);
    const auto rep = bh::verify_implication_matrix(f, s, d, cfg.budget, cfg.seed);
    json report = run_header(cfg, f, s, d);
    report.update(bh::implication_report_to_json(rep));
    emit(cfg, report);
    return rep.all_verified ? 0 : 1;
}

int cmd_gallery(const RunConfig& cfg, const std::vector<std::string>& names) {
    const std::vector<std::string> run = names.empty() ? bh::scenario_names() : names;
    json report = json{{"seed", cfg.seed}, {"budget", cfg.budget}};
    json scenarios = json::array();
    bool all_passed = true;
    for (const auto& name : run) {
        const auto rep = bh::run_scenario(name, cfg.budget, cfg.seed);
        all_passed = all_passed && rep.all_passed;
        scenarios.push_back(bh::scenario_report_to_json(rep));
    }
    report["scenarios"] = scenarios;
    emit(cfg, report);
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of smoothness/cocoercivity "
                 "characterizations of convex functions"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string oracle_arg, space_arg, domain_arg, config_path;
    std::vector<std::string> gallery_names;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--oracle", oracle_arg, "oracle name or JSON descriptor");
        sub->add_option("--space", space_arg, "space shorthand norm[:dim] or JSON");
        sub->add_option("--domain", domain_arg, "domain kind or JSON descriptor");
        sub->add_option("--condition", cfg.conditions, "condition tag(s)");
        sub->add_option("--L", cfg.L_values, "constant(s) L to check");
        sub->add_option("--budget", cfg.budget, "sample budget");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--out", cfg.output, "report path (default stdout)");
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--config", config_path, "JSON config file");
    };

    auto* check = app.add_subcommand("check", "check conditions at given L");
    auto* estimate = app.add_subcommand("estimate", "estimate best constants");
    auto* matrix = app.add_subcommand("matrix", "verify the implication matrix");
    auto* gallery = app.add_subcommand("gallery", "run counterexample scenarios");
    for (auto* sub : {check, estimate, matrix, gallery})
        add_common(sub);
    gallery->add_option("names", gallery_names, "scenario names (default: all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw std::invalid_argument("cannot read config file: " + config_path);
            json j = json::parse(in);
            RunConfig file_cfg = config_from_json(j);
            // command-line flags override the file
            if (oracle_arg.empty()) cfg.oracle = file_cfg.oracle;
            if (space_arg.empty()) cfg.space = file_cfg.space;
            if (domain_arg.empty()) cfg.domain = file_cfg.domain;
            if (cfg.conditions.empty()) cfg.conditions = file_cfg.conditions;
            if (cfg.L_values.empty()) cfg.L_values = file_cfg.L_values;
            if (cfg.budget == 10000) cfg.budget = file_cfg.budget;
            if (cfg.seed == 42) cfg.seed = file_cfg.seed;
            if (cfg.output.empty()) cfg.output = file_cfg.output;
            if (cfg.format == "json") cfg.format = file_cfg.format;
        }
        if (!oracle_arg.empty())
            cfg.oracle = parse_inline(oracle_arg, "oracle");
        if (!space_arg.empty())
            cfg.space = parse_inline(space_arg, "space");
        if (!domain_arg.empty())
            cfg.domain = parse_inline(domain_arg, "domain");

        if (*check)
            return cmd_check(cfg);
        if (*estimate)
            return cmd_estimate(cfg);
        if (*matrix)
            return cmd_matrix(cfg);
        if (*gallery)
            return cmd_gallery(cfg, gallery_names);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
