#include "ruleprune/evaluate.hpp"

#include "ruleprune/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>
#include <variant>

namespace ruleprune {

const char* outcome_name(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::Pass: return "PASS";
        case OutcomeKind::Fail: return "FAIL";
        case OutcomeKind::NotEvaluable: return "NOT_EVALUABLE";
    }
    throw std::logic_error("bad OutcomeKind");
}

OutcomeMatrix::OutcomeMatrix(std::vector<std::string> rule_ids, std::vector<GroupKey> groups)
    : rule_ids_(std::move(rule_ids)), groups_(std::move(groups)),
      cells_(rule_ids_.size() * groups_.size()) {}

const Outcome& OutcomeMatrix::at(size_t rule_idx, size_t group_idx) const {
    return cells_.at(rule_idx * groups_.size() + group_idx);
}

void OutcomeMatrix::set(size_t rule_idx, size_t group_idx, Outcome o) {
    cells_.at(rule_idx * groups_.size() + group_idx) = std::move(o);
}

int OutcomeMatrix::rule_index(const std::string& id) const {
    for (size_t i = 0; i < rule_ids_.size(); ++i)
        if (rule_ids_[i] == id) return static_cast<int>(i);
    return -1;
}

namespace {

void collect_params(const Expr& e, std::set<std::string>& out) {
    if (const auto* p = e.as_param()) {
        out.insert(p->name);
        return;
    }
    if (const auto* op = e.as_op())
        for (const auto& c : op->children) collect_params(*c, out);
}

// Currency scope binds `cost` to `cost_local`/`cost_base` when such a column
// exists; otherwise the parameter binds to its own column.
int resolve_column(const Dataset& ds, const std::string& param, CcyScope ccy) {
    if (ccy == CcyScope::Local || ccy == CcyScope::Base) {
        int idx = ds.column_index(param + (ccy == CcyScope::Local ? "_local" : "_base"));
        if (idx >= 0) return idx;
    }
    return ds.column_index(param);
}

struct NotEvaluable {
    std::string reason;
};
using EvalResult = std::variant<Decimal, NotEvaluable>;

class Evaluator {
public:
    Evaluator(const Rule& rule, const Dataset& ds, std::vector<size_t> rows)
        : rule_(rule), ds_(ds), rows_(std::move(rows)) {}

    EvalResult eval(const Expr& e, const size_t* row) {
        if (const auto* v = e.as_value()) return v->value;
        if (const auto* p = e.as_param()) return eval_param(p->name, row);
        const auto& op = *e.as_op();
        switch (op.kind) {
            case OpKind::Add:
            case OpKind::Mul: {
                Decimal acc;
                bool first = true;
                for (const auto& c : op.children) {
                    EvalResult r = eval(*c, row);
                    if (auto* ne = std::get_if<NotEvaluable>(&r)) return *ne;
                    const Decimal& v = std::get<Decimal>(r);
                    if (first) {
                        acc = v;
                        first = false;
                    } else {
                        acc = op.kind == OpKind::Add ? acc + v : acc * v;
                    }
                }
                return acc;
            }
            case OpKind::Sub:
            case OpKind::Div: {
                EvalResult lr = eval(*op.children[0], row);
                if (auto* ne = std::get_if<NotEvaluable>(&lr)) return *ne;
                EvalResult rr = eval(*op.children[1], row);
                if (auto* ne = std::get_if<NotEvaluable>(&rr)) return *ne;
                const Decimal& l = std::get<Decimal>(lr);
                const Decimal& r = std::get<Decimal>(rr);
                if (op.kind == OpKind::Sub) return l - r;
                auto q = Decimal::divide(l, r);
                if (!q) return NotEvaluable{"division by zero"};
                return *q;
            }
            case OpKind::Sum: {
                // Empty row set sums to exactly 0.
                Decimal acc;
                for (size_t ri : rows_) {
                    EvalResult r = eval(*op.children[0], &ri);
                    if (auto* ne = std::get_if<NotEvaluable>(&r)) return *ne;
                    acc = acc + std::get<Decimal>(r);
                }
                return acc;
            }
        }
        throw std::logic_error("bad OpKind");
    }

private:
    EvalResult eval_param(const std::string& name, const size_t* row) {
        int col = resolve_column(ds_, name, rule_.context.ccy);
        if (col < 0) throw UnknownParameterError(rule_.id, name);
        if (row) return cell(*row, col, name);
        // Outside any sum the parameter must be a single value across the
        // filtered group.
        if (rows_.empty())
            return NotEvaluable{"parameter '" + name + "' has no rows in scope"};
        std::optional<Decimal> common;
        for (size_t ri : rows_) {
            EvalResult r = cell(ri, col, name);
            if (auto* ne = std::get_if<NotEvaluable>(&r)) return *ne;
            const Decimal& v = std::get<Decimal>(r);
            if (!common)
                common = v;
            else if (!(*common == v))
                return NotEvaluable{"non-scalar outside sum: '" + name + "'"};
        }
        return *common;
    }

    EvalResult cell(size_t row_idx, int col, const std::string& name) {
        const auto& v = ds_.rows()[row_idx].values[static_cast<size_t>(col)];
        if (!v) return NotEvaluable{"missing value in column '" + name + "'"};
        return *v;
    }

    const Rule& rule_;
    const Dataset& ds_;
    std::vector<size_t> rows_;
};

}  // namespace

Outcome evaluate_rule(const Rule& rule, const Dataset& dataset, const Dataset::Group& group) {
    const Context& ctx = rule.context;
    if (ctx.window && !ctx.window->contains(group.key.date))
        return {OutcomeKind::Pass, "context-excluded"};
    std::vector<size_t> rows;
    for (size_t ri : group.row_indices) {
        if (ctx.classes && !ctx.classes->contains(dataset.rows()[ri].asset_class)) continue;
        rows.push_back(ri);
    }
    Evaluator ev(rule, dataset, std::move(rows));
    EvalResult r = ev.eval(*rule.body, nullptr);
    if (auto* ne = std::get_if<NotEvaluable>(&r)) return {OutcomeKind::NotEvaluable, ne->reason};
    const Decimal& value = std::get<Decimal>(r);
    if (rule.predicate.holds(value)) return {OutcomeKind::Fail, value.str()};
    return {OutcomeKind::Pass, value.str()};
}

OutcomeMatrix evaluate_matrix(const std::vector<const Rule*>& rules, const Dataset& dataset,
                              bool parallel) {
    // Structural check first: every referenced parameter must bind, in rule
    // order, so an unknown column aborts identically with or without data.
    for (const Rule* r : rules) {
        std::set<std::string> params;
        collect_params(*r->body, params);
        for (const auto& p : params)
            if (resolve_column(dataset, p, r->context.ccy) < 0)
                throw UnknownParameterError(r->id, p);
    }

    std::vector<std::string> ids;
    ids.reserve(rules.size());
    for (const Rule* r : rules) ids.push_back(r->id);
    std::vector<GroupKey> keys;
    keys.reserve(dataset.groups().size());
    for (const auto& g : dataset.groups()) keys.push_back(g.key);
    OutcomeMatrix m(std::move(ids), std::move(keys));

    const size_t n_groups = dataset.groups().size();
    const size_t n_cells = rules.size() * n_groups;
    auto fill = [&](size_t begin, size_t end) {
        for (size_t c = begin; c < end; ++c) {
            size_t ri = c / n_groups;
            size_t gi = c % n_groups;
            m.set(ri, gi, evaluate_rule(*rules[ri], dataset, dataset.groups()[gi]));
        }
    };
    unsigned hw = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    if (hw <= 1 || n_cells < 2 * static_cast<size_t>(hw)) {
        fill(0, n_cells);
    } else {
        std::vector<std::thread> workers;
        size_t chunk = (n_cells + hw - 1) / hw;
        for (unsigned t = 0; t < hw; ++t) {
            size_t begin = t * chunk;
            size_t end = std::min(n_cells, begin + chunk);
            if (begin >= end) break;
            workers.emplace_back(fill, begin, end);
        }
        for (auto& w : workers) w.join();
    }
    return m;
}

OutcomeMatrix evaluate_all(const RuleSet& rules, const Dataset& dataset, bool parallel) {
    std::vector<const Rule*> ptrs;
    ptrs.reserve(rules.size());
    for (const auto& r : rules.rules()) ptrs.push_back(&r);
    return evaluate_matrix(ptrs, dataset, parallel);
}

}  // namespace ruleprune
