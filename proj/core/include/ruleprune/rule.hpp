#pragma once

#include "ruleprune/date.hpp"
#include "ruleprune/decimal.hpp"
#include "ruleprune/expr.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ruleprune {

enum class RelOp { Eq, Lt, Gt, Le, Ge, Ne };

const char* relop_symbol(RelOp op);

/// The verification predicate: body value `relop` threshold. A rule FAILS
/// exactly when its predicate holds on the computed body value.
struct Predicate {
    RelOp relop = RelOp::Eq;
    Decimal threshold;

    bool holds(const Decimal& value) const;
    /// e.g. "<= 0.2"
    std::string str() const;

    bool operator==(const Predicate& o) const {
        return relop == o.relop && threshold == o.threshold;
    }
};

enum class Action { Fail, Warn };

const char* action_name(Action a);

enum class CcyScope { Any, Local, Base, Iso };

struct DateRange {
    Date start;
    Date end;

    bool operator==(const DateRange&) const = default;
    bool contains(const Date& d) const { return start <= d && d <= end; }
    /// True when [start, end] contains [o.start, o.end].
    bool covers(const DateRange& o) const { return start <= o.start && o.end <= end; }
};

/// Where a rule applies: asset-class set, currency scope, time window.
/// Each absent part is universal.
struct Context {
    std::optional<std::set<std::string>> classes;
    CcyScope ccy = CcyScope::Any;
    std::string ccy_code;  // set only for CcyScope::Iso
    std::optional<DateRange> window;

    static Context universal() { return {}; }
    bool is_universal() const {
        return !classes && ccy == CcyScope::Any && !window;
    }

    bool operator==(const Context& o) const {
        return classes == o.classes && ccy == o.ccy && ccy_code == o.ccy_code
            && window == o.window;
    }

    /// e.g. "class=bond,equity AND ccy=local AND period=[2011-01-01,2011-12-31]",
    /// or "universal".
    std::string str() const;
};

struct Rule {
    std::string id;
    ExprPtr body;
    Predicate predicate;
    Action action = Action::Fail;
    Context context;
};

/// Structural equality over every part of the rule.
bool rule_equal(const Rule& a, const Rule& b);

/// Ordered rule collection with unique ids (declaration order preserved).
class RuleSet {
public:
    /// Throws DuplicateRuleIdError.
    void add(Rule r);

    const std::vector<Rule>& rules() const { return rules_; }
    const Rule* find(const std::string& id) const;
    /// Declaration position of an id, or -1.
    int position(const std::string& id) const;
    size_t size() const { return rules_.size(); }
    bool empty() const { return rules_.empty(); }

private:
    std::vector<Rule> rules_;
    std::map<std::string, size_t> index_;
};

}  // namespace ruleprune
