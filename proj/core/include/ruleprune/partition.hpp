#pragma once

#include "ruleprune/containment.hpp"
#include "ruleprune/rule.hpp"
#include "ruleprune/value_check.hpp"

#include <string>
#include <vector>

namespace ruleprune {

struct CorrelatedEntry {
    std::string id;
    std::vector<Witness> witnesses;

    bool operator==(const CorrelatedEntry&) const = default;
};

struct Edge {
    std::string from;  // the contained (surviving) rule
    std::string to;    // the rule it makes redundant
    std::string kind;  // "containment" | "value-symbolic" | "value-empirical"

    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const {
        if (from != o.from) return from < o.from;
        if (to != o.to) return to < o.to;
        return kind < o.kind;
    }
};

struct PartitionStats {
    size_t total = 0;
    size_t core = 0;
    size_t correlated = 0;
    std::string correlated_pct;  // exact ratio at one decimal, e.g. "17.0%"

    bool operator==(const PartitionStats&) const = default;
};

/// Output of the core/correlated split. All id lists are sorted
/// lexicographically; core and correlated are disjoint and cover the input.
struct PartitionReport {
    ContainmentMode mode = ContainmentMode::AcEmbed;
    std::vector<std::string> rules;
    std::vector<std::string> core;
    std::vector<CorrelatedEntry> correlated;
    std::vector<std::vector<std::string>> duplicates;
    std::vector<Edge> edges;
    PartitionStats stats;

    bool operator==(const PartitionReport&) const = default;
};

struct PartitionOptions {
    ContainmentMode mode = ContainmentMode::AcEmbed;
    ValueCheckConfig value_check{};
    /// Required for empirical/both value checking.
    const Dataset* dataset = nullptr;
    bool parallel = false;
};

/// Exact percentage of a count ratio at one decimal, round half to even.
std::string percent_string(size_t part, size_t total);

/// The split: every rule is classified core or correlated by containment
/// (with duplicate tie-breaking), then each surviving core rule is value
/// checked against a snapshot of the core set and positives move to the
/// correlated set with witnesses.
PartitionReport partition(const RuleSet& rules, const PartitionOptions& options);

/// True when the rule survives the containment phase: not a non-surviving
/// duplicate, and of height 1 or containing no other rule's body (context
/// coverage respected).
bool classify_core(const Rule& rule, const RuleSet& rules, ContainmentMode mode);

/// Groups of exact duplicates (same canonical body, mutually covering
/// contexts, same predicate, same action), each sorted by id; singletons
/// omitted; groups sorted by first member.
std::vector<std::vector<std::string>> duplicates(const RuleSet& rules);

}  // namespace ruleprune
