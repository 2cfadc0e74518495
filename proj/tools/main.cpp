// Rule-set redundancy analyzer CLI.
//
// Subcommands:
//   parse    validate a rules file and dump rule ASTs as JSON
//   analyze  split a rule set into core / correlated, write report JSON (+DOT)
//   explain  print one rule's tree, classification and witnesses
//   eval     evaluate rules against a positions CSV, print outcome counts
//
// Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 internal error.

#include "ruleprune/canonical.hpp"
#include "ruleprune/dataset.hpp"
#include "ruleprune/errors.hpp"
#include "ruleprune/evaluate.hpp"
#include "ruleprune/parser.hpp"
#include "ruleprune/partition.hpp"
#include "ruleprune/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using ruleprune::ContainmentMode;
using ruleprune::ValueCheckConfig;
using ordered_json = nlohmann::ordered_json;

struct Options {
    std::string rules_path;
    std::string data_path;
    std::string out_path;
    std::string dot_path;
    std::string rule_id;
    std::string mode = "ac";
    std::string value_check = "symbolic";
    int min_support = 1;
    bool parallel = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ruleprune::RuleError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ruleprune::RuleError("cannot write '" + path + "'");
    out << content;
}

ContainmentMode parse_mode(const std::string& mode) {
    return mode == "strict" ? ContainmentMode::Strict : ContainmentMode::AcEmbed;
}

ordered_json expr_json(const ruleprune::Expr& e) {
    if (const auto* p = e.as_param()) return ordered_json{{"param", p->name}};
    if (const auto* v = e.as_value()) return ordered_json{{"value", v->value.str()}};
    const auto& op = *e.as_op();
    ordered_json children = ordered_json::array();
    for (const auto& c : op.children) children.push_back(expr_json(*c));
    return ordered_json{{"op", ruleprune::op_name(op.kind)}, {"children", std::move(children)}};
}

ordered_json context_json(const ruleprune::Context& ctx) {
    ordered_json j = ordered_json::object();
    if (ctx.classes) {
        std::vector<std::string> classes(ctx.classes->begin(), ctx.classes->end());
        j["classes"] = classes;
    }
    switch (ctx.ccy) {
        case ruleprune::CcyScope::Any: break;
        case ruleprune::CcyScope::Local: j["ccy"] = "local"; break;
        case ruleprune::CcyScope::Base: j["ccy"] = "base"; break;
        case ruleprune::CcyScope::Iso: j["ccy"] = ctx.ccy_code; break;
    }
    if (ctx.window)
        j["period"] = std::vector<std::string>{ctx.window->start.str(), ctx.window->end.str()};
    return j;
}

int run_parse(const Options& opt) {
    ruleprune::RuleSet rules = ruleprune::parse_rules(read_file(opt.rules_path));
    ordered_json out = ordered_json::array();
    for (const auto& r : rules.rules()) {
        ruleprune::CanonicalTree canon = ruleprune::CanonicalTree::of(r.body);
        ordered_json j;
        j["id"] = r.id;
        j["body"] = expr_json(*r.body);
        j["relop"] = ruleprune::relop_symbol(r.predicate.relop);
        j["threshold"] = r.predicate.threshold.str();
        j["action"] = ruleprune::action_name(r.action);
        j["context"] = context_json(r.context);
        j["canonical"] = canon.print();
        j["height"] = canon.height();
        out.push_back(std::move(j));
    }
    std::string text = out.dump() + "\n";
    if (opt.out_path.empty())
        std::cout << text;
    else
        write_file(opt.out_path, text);
    return 0;
}

ruleprune::PartitionReport run_partition(const Options& opt, const ruleprune::RuleSet& rules,
                                         std::optional<ruleprune::Dataset>& dataset) {
    ruleprune::PartitionOptions popts;
    popts.mode = parse_mode(opt.mode);
    popts.value_check.mode = ruleprune::value_check_mode_from_name(opt.value_check);
    popts.value_check.min_support = opt.min_support;
    popts.parallel = opt.parallel;
    if (!opt.data_path.empty()) {
        dataset = ruleprune::load_dataset(opt.data_path);
        popts.dataset = &*dataset;
    }
    return ruleprune::partition(rules, popts);
}

int run_analyze(const Options& opt) {
    ruleprune::RuleSet rules = ruleprune::parse_rules(read_file(opt.rules_path));
    std::optional<ruleprune::Dataset> dataset;
    ruleprune::PartitionReport report = run_partition(opt, rules, dataset);
    std::string json = ruleprune::report_json(report) + "\n";
    std::string dot = ruleprune::export_dot(ruleprune::build_graph(report));
    if (opt.out_path.empty())
        std::cout << json;
    else
        write_file(opt.out_path, json);
    if (!opt.dot_path.empty()) write_file(opt.dot_path, dot);
    return 0;
}

int run_explain(const Options& opt) {
    ruleprune::RuleSet rules = ruleprune::parse_rules(read_file(opt.rules_path));
    std::optional<ruleprune::Dataset> dataset;
    ruleprune::PartitionReport report = run_partition(opt, rules, dataset);
    std::cout << ruleprune::explain_rule(opt.rule_id, rules, report);
    return 0;
}

int run_eval(const Options& opt) {
    ruleprune::RuleSet rules = ruleprune::parse_rules(read_file(opt.rules_path));
    ruleprune::Dataset dataset = ruleprune::load_dataset(opt.data_path);
    ruleprune::OutcomeMatrix matrix = ruleprune::evaluate_all(rules, dataset, opt.parallel);
    std::ostringstream out;
    out << "rule_id,fail,pass,not_evaluable\n";
    for (size_t i = 0; i < matrix.rule_ids().size(); ++i) {
        size_t fail = 0, pass = 0, ne = 0;
        for (size_t g = 0; g < matrix.groups().size(); ++g) {
            switch (matrix.at(i, g).kind) {
                case ruleprune::OutcomeKind::Fail: ++fail; break;
                case ruleprune::OutcomeKind::Pass: ++pass; break;
                case ruleprune::OutcomeKind::NotEvaluable: ++ne; break;
            }
        }
        out << matrix.rule_ids()[i] << ',' << fail << ',' << pass << ',' << ne << '\n';
    }
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NAV business-rule redundancy analyzer"};
    app.require_subcommand(1);
    Options opt;

    auto add_analysis_flags = [&](CLI::App* cmd) {
        cmd->add_option("--mode", opt.mode, "Containment mode")
            ->check(CLI::IsMember({"strict", "ac"}))
            ->capture_default_str();
        cmd->add_option("--value-check", opt.value_check, "Value-check mode")
            ->check(CLI::IsMember({"off", "symbolic", "empirical", "both"}))
            ->capture_default_str();
        cmd->add_option("--min-support", opt.min_support,
                        "Minimum observed failures for an empirical verdict")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--data", opt.data_path, "Positions CSV");
        cmd->add_flag("--parallel", opt.parallel, "Evaluate pairwise checks concurrently");
    };

    CLI::App* parse_cmd = app.add_subcommand("parse", "Validate rules and dump ASTs as JSON");
    parse_cmd->add_option("rules", opt.rules_path, "Rules file")->required();
    parse_cmd->add_option("--out", opt.out_path, "Output path (default: stdout)");

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Partition a rule set into core and correlated sets");
    analyze_cmd->add_option("rules", opt.rules_path, "Rules file")->required();
    analyze_cmd->add_option("--out", opt.out_path, "Report JSON path (default: stdout)");
    analyze_cmd->add_option("--dot", opt.dot_path, "Relationship graph DOT path");
    add_analysis_flags(analyze_cmd);

    CLI::App* explain_cmd = app.add_subcommand("explain", "Explain one rule's classification");
    explain_cmd->add_option("rules", opt.rules_path, "Rules file")->required();
    explain_cmd->add_option("rule_id", opt.rule_id, "Rule to explain")->required();
    add_analysis_flags(explain_cmd);

    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate rules against a dataset");
    eval_cmd->add_option("rules", opt.rules_path, "Rules file")->required();
    eval_cmd->add_option("--data", opt.data_path, "Positions CSV")->required();
    eval_cmd->add_flag("--parallel", opt.parallel, "Evaluate cells concurrently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    bool needs_data = opt.value_check == "empirical" || opt.value_check == "both";
    if ((analyze_cmd->parsed() || explain_cmd->parsed()) && needs_data
        && opt.data_path.empty()) {
        std::cerr << "error: --value-check " << opt.value_check << " requires --data\n";
        return 1;
    }

    try {
        if (parse_cmd->parsed()) return run_parse(opt);
        if (analyze_cmd->parsed()) return run_analyze(opt);
        if (explain_cmd->parsed()) return run_explain(opt);
        if (eval_cmd->parsed()) return run_eval(opt);
        return 1;
    } catch (const ruleprune::RuleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
