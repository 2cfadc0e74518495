#include "ruleprune/report.hpp"

#include "ruleprune/canonical.hpp"
#include "ruleprune/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace ruleprune {

using ordered_json = nlohmann::ordered_json;

namespace {

ContainmentMode mode_from_name(const std::string& name) {
    if (name == "strict") return ContainmentMode::Strict;
    if (name == "ac_embed") return ContainmentMode::AcEmbed;
    throw RuleError("bad containment mode '" + name + "'");
}

WitnessKind witness_kind_from_name(const std::string& name) {
    if (name == "contained_by") return WitnessKind::ContainedBy;
    if (name == "duplicate_of") return WitnessKind::DuplicateOf;
    if (name == "value_implied_by") return WitnessKind::ValueImpliedBy;
    throw RuleError("bad witness kind '" + name + "'");
}

}  // namespace

std::string report_json(const PartitionReport& r) {
    ordered_json j;
    j["mode"] = containment_mode_name(r.mode);
    j["rules"] = r.rules;
    j["core"] = r.core;
    j["correlated"] = ordered_json::array();
    for (const auto& entry : r.correlated) {
        ordered_json e;
        e["id"] = entry.id;
        e["witnesses"] = ordered_json::array();
        for (const auto& w : entry.witnesses) {
            ordered_json wj;
            wj["kind"] = witness_kind_name(w.kind);
            wj["by"] = w.by;
            wj["detail"] = w.detail;
            e["witnesses"].push_back(std::move(wj));
        }
        j["correlated"].push_back(std::move(e));
    }
    j["duplicates"] = r.duplicates;
    j["edges"] = ordered_json::array();
    for (const auto& e : r.edges)
        j["edges"].push_back(ordered_json{{"from", e.from}, {"to", e.to}, {"kind", e.kind}});
    j["stats"] = ordered_json{{"total", r.stats.total},
                              {"core", r.stats.core},
                              {"correlated", r.stats.correlated},
                              {"correlated_pct", r.stats.correlated_pct}};
    return j.dump();
}

PartitionReport report_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw RuleError(std::string("bad report JSON: ") + e.what());
    }
    try {
        PartitionReport r;
        r.mode = mode_from_name(j.at("mode").get<std::string>());
        r.rules = j.at("rules").get<std::vector<std::string>>();
        r.core = j.at("core").get<std::vector<std::string>>();
        for (const auto& e : j.at("correlated")) {
            CorrelatedEntry entry;
            entry.id = e.at("id").get<std::string>();
            for (const auto& wj : e.at("witnesses")) {
                Witness w;
                w.kind = witness_kind_from_name(wj.at("kind").get<std::string>());
                w.by = wj.at("by").get<std::vector<std::string>>();
                w.detail = wj.at("detail").get<std::string>();
                entry.witnesses.push_back(std::move(w));
            }
            r.correlated.push_back(std::move(entry));
        }
        r.duplicates = j.at("duplicates").get<std::vector<std::vector<std::string>>>();
        for (const auto& ej : j.at("edges"))
            r.edges.push_back({ej.at("from").get<std::string>(), ej.at("to").get<std::string>(),
                               ej.at("kind").get<std::string>()});
        const auto& s = j.at("stats");
        r.stats.total = s.at("total").get<size_t>();
        r.stats.core = s.at("core").get<size_t>();
        r.stats.correlated = s.at("correlated").get<size_t>();
        r.stats.correlated_pct = s.at("correlated_pct").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw RuleError(std::string("bad report JSON: ") + e.what());
    }
}

GraphDoc build_graph(const PartitionReport& report) {
    GraphDoc g;
    std::set<std::string> in_core(report.core.begin(), report.core.end());
    std::set<std::string> in_dup_group;
    for (const auto& group : report.duplicates)
        for (const auto& id : group) in_dup_group.insert(id);
    for (const auto& id : report.rules) {
        std::string cls = in_core.contains(id) ? "core"
            : in_dup_group.contains(id)        ? "duplicate"
                                               : "correlated";
        g.nodes.push_back({id, std::move(cls)});
    }
    g.edges = report.edges;
    return g;
}

std::string export_dot(const GraphDoc& graph) {
    if (graph.nodes.empty() && graph.edges.empty()) return "digraph rules { }\n";
    std::vector<GraphDoc::Node> nodes = graph.nodes;
    std::sort(nodes.begin(), nodes.end(),
              [](const GraphDoc::Node& a, const GraphDoc::Node& b) { return a.id < b.id; });
    std::vector<Edge> edges = graph.edges;
    std::sort(edges.begin(), edges.end());

    std::ostringstream out;
    out << "digraph rules {\n";
    for (const auto& n : nodes) {
        const char* shape = n.cls == "core" ? "ellipse" : "box";
        const char* style = n.cls == "duplicate" ? "dashed" : n.cls == "correlated" ? "filled"
                                                                                    : "solid";
        out << "  \"" << n.id << "\" [shape=" << shape << ", style=" << style << ", label=\""
            << n.id << "\\n(" << n.cls << ")\"];\n";
    }
    for (const auto& e : edges)
        out << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"" << e.kind << "\"];\n";
    out << "}\n";
    return out.str();
}

namespace {

void print_tree(const Expr& e, int depth, std::ostringstream& out) {
    out << std::string(4 + 2 * static_cast<size_t>(depth), ' ');
    if (const auto* p = e.as_param())
        out << p->name << "\n";
    else if (const auto* v = e.as_value())
        out << v->value.str() << "\n";
    else {
        const auto& op = *e.as_op();
        out << op_name(op.kind) << "\n";
        for (const auto& c : op.children) print_tree(*c, depth + 1, out);
    }
}

}  // namespace

std::string explain_rule(const std::string& rule_id, const RuleSet& rules,
                         const PartitionReport& report) {
    const Rule* rule = rules.find(rule_id);
    if (!rule) throw UnknownRuleIdError(rule_id);
    CanonicalTree body = CanonicalTree::of(rule->body);
    bool core = std::find(report.core.begin(), report.core.end(), rule_id) != report.core.end();

    std::ostringstream out;
    out << "rule " << rule_id << "\n";
    out << "  classification: " << (core ? "core" : "correlated") << "\n";
    out << "  body: " << body.print() << "\n";
    out << "  tree:\n";
    print_tree(*body.root(), 0, out);
    out << "  height: " << body.height() << "\n";
    out << "  context: " << rule->context.str() << "\n";
    out << "  predicate: " << rule->predicate.str() << "\n";
    out << "  action: " << action_name(rule->action) << "\n";

    const CorrelatedEntry* entry = nullptr;
    for (const auto& e : report.correlated)
        if (e.id == rule_id) entry = &e;
    out << "  witnesses:";
    if (!entry || entry->witnesses.empty()) {
        out << " (none)\n";
    } else {
        out << "\n";
        for (const auto& w : entry->witnesses) {
            out << "    " << witness_kind_name(w.kind);
            for (const auto& by : w.by) out << " " << by;
            if (!w.detail.empty()) out << " (" << w.detail << ")";
            out << "\n";
        }
    }
    std::vector<Edge> touching;
    for (const auto& e : report.edges)
        if (e.from == rule_id || e.to == rule_id) touching.push_back(e);
    out << "  edges:";
    if (touching.empty()) {
        out << " (none)\n";
    } else {
        out << "\n";
        for (const auto& e : touching)
            out << "    " << e.from << " -> " << e.to << " (" << e.kind << ")\n";
    }
    return out.str();
}

}  // namespace ruleprune
