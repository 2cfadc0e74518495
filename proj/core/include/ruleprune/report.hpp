#pragma once

#include "ruleprune/partition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ruleprune {

/// Rule-relationship graph extracted from a partition report: one node per
/// rule (classed core/correlated/duplicate), one directed edge per
/// containment or value implication, contained rule -> containing rule.
struct GraphDoc {
    struct Node {
        std::string id;
        std::string cls;  // "core" | "correlated" | "duplicate"

        bool operator==(const Node&) const = default;
    };

    std::vector<Node> nodes;
    std::vector<Edge> edges;

    bool operator==(const GraphDoc&) const = default;
};

GraphDoc build_graph(const PartitionReport& report);

/// Byte-deterministic JSON with fixed key order and sorted arrays.
std::string report_json(const PartitionReport& report);

/// Inverse of report_json; throws RuleError on malformed input.
PartitionReport report_from_json(std::string_view text);

/// Plain DOT digraph, nodes and edges sorted; node attributes limited to
/// shape, style and label.
std::string export_dot(const GraphDoc& graph);

/// Multi-line explanation of one rule: canonical body, tree layout, height,
/// context, predicate, classification, witnesses and touching edges.
/// Throws UnknownRuleIdError.
std::string explain_rule(const std::string& rule_id, const RuleSet& rules,
                         const PartitionReport& report);

}  // namespace ruleprune
