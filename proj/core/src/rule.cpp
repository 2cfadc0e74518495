#include "ruleprune/rule.hpp"

#include "ruleprune/errors.hpp"

#include <stdexcept>

namespace ruleprune {

const char* relop_symbol(RelOp op) {
    switch (op) {
        case RelOp::Eq: return "=";
        case RelOp::Lt: return "<";
        case RelOp::Gt: return ">";
        case RelOp::Le: return "<=";
        case RelOp::Ge: return ">=";
        case RelOp::Ne: return "!=";
    }
    throw std::logic_error("bad RelOp");
}

bool Predicate::holds(const Decimal& value) const {
    int c = value.compare(threshold);
    switch (relop) {
        case RelOp::Eq: return c == 0;
        case RelOp::Lt: return c < 0;
        case RelOp::Gt: return c > 0;
        case RelOp::Le: return c <= 0;
        case RelOp::Ge: return c >= 0;
        case RelOp::Ne: return c != 0;
    }
    throw std::logic_error("bad RelOp");
}

std::string Predicate::str() const {
    return std::string(relop_symbol(relop)) + " " + threshold.str();
}

const char* action_name(Action a) {
    return a == Action::Fail ? "FAIL" : "WARN";
}

std::string Context::str() const {
    if (is_universal()) return "universal";
    std::string out;
    auto append = [&](const std::string& part) {
        if (!out.empty()) out += " AND ";
        out += part;
    };
    if (classes) {
        std::string part = "class=";
        bool first = true;
        for (const auto& c : *classes) {
            if (!first) part += ',';
            part += c;
            first = false;
        }
        append(part);
    }
    switch (ccy) {
        case CcyScope::Any: break;
        case CcyScope::Local: append("ccy=local"); break;
        case CcyScope::Base: append("ccy=base"); break;
        case CcyScope::Iso: append("ccy=" + ccy_code); break;
    }
    if (window) append("period=[" + window->start.str() + "," + window->end.str() + "]");
    return out;
}

bool rule_equal(const Rule& a, const Rule& b) {
    return a.id == b.id && expr_equal(a.body, b.body) && a.predicate == b.predicate
        && a.action == b.action && a.context == b.context;
}

void RuleSet::add(Rule r) {
    if (!r.body) throw std::logic_error("rule body must be non-empty");
    if (!index_.emplace(r.id, rules_.size()).second) throw DuplicateRuleIdError(r.id);
    rules_.push_back(std::move(r));
}

const Rule* RuleSet::find(const std::string& id) const {
    int pos = position(id);
    return pos < 0 ? nullptr : &rules_[static_cast<size_t>(pos)];
}

int RuleSet::position(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : static_cast<int>(it->second);
}

}  // namespace ruleprune
