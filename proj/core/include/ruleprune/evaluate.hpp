#pragma once

#include "ruleprune/dataset.hpp"
#include "ruleprune/rule.hpp"

#include <string>
#include <vector>

namespace ruleprune {

enum class OutcomeKind { Pass, Fail, NotEvaluable };

const char* outcome_name(OutcomeKind k);

/// A rule FAILS on a group when its predicate holds on the computed body
/// value. detail carries the body value, "context-excluded", or the reason
/// the cell is not evaluable.
struct Outcome {
    OutcomeKind kind = OutcomeKind::Pass;
    std::string detail;

    bool operator==(const Outcome&) const = default;
};

/// Complete (rule x group) outcome table; groups sorted by key, rules in
/// declaration order.
class OutcomeMatrix {
public:
    OutcomeMatrix(std::vector<std::string> rule_ids, std::vector<GroupKey> groups);

    const std::vector<std::string>& rule_ids() const { return rule_ids_; }
    const std::vector<GroupKey>& groups() const { return groups_; }

    const Outcome& at(size_t rule_idx, size_t group_idx) const;
    void set(size_t rule_idx, size_t group_idx, Outcome o);

    /// Index of a rule id, or -1.
    int rule_index(const std::string& id) const;

    bool operator==(const OutcomeMatrix& o) const {
        return rule_ids_ == o.rule_ids_ && groups_ == o.groups_ && cells_ == o.cells_;
    }

private:
    std::vector<std::string> rule_ids_;
    std::vector<GroupKey> groups_;
    std::vector<Outcome> cells_;
};

/// Evaluates one rule over one group of rows. Throws UnknownParameterError
/// when a referenced parameter has no matching column under the rule's
/// currency scope.
Outcome evaluate_rule(const Rule& rule, const Dataset& dataset, const Dataset::Group& group);

/// Complete matrix over all rules and groups. Structural problems
/// (UnknownParameterError) abort; anything per-cell degrades to
/// NOT_EVALUABLE. Deterministic, optionally parallel across cells.
OutcomeMatrix evaluate_all(const RuleSet& rules, const Dataset& dataset, bool parallel = false);

/// Matrix over an explicit subset of rules (used by the partition engine).
OutcomeMatrix evaluate_matrix(const std::vector<const Rule*>& rules, const Dataset& dataset,
                              bool parallel = false);

}  // namespace ruleprune
