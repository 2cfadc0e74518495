#include "ruleprune/value_check.hpp"

#include "ruleprune/canonical.hpp"
#include "ruleprune/containment.hpp"
#include "ruleprune/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ruleprune {

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::ContainedBy: return "contained_by";
        case WitnessKind::DuplicateOf: return "duplicate_of";
        case WitnessKind::ValueImpliedBy: return "value_implied_by";
    }
    throw std::logic_error("bad WitnessKind");
}

ValueCheckConfig::Mode value_check_mode_from_name(const std::string& name) {
    if (name == "off") return ValueCheckConfig::Mode::Off;
    if (name == "symbolic") return ValueCheckConfig::Mode::Symbolic;
    if (name == "empirical") return ValueCheckConfig::Mode::Empirical;
    if (name == "both") return ValueCheckConfig::Mode::Both;
    throw std::invalid_argument("bad value-check mode '" + name + "'");
}

const char* value_check_mode_name(ValueCheckConfig::Mode m) {
    switch (m) {
        case ValueCheckConfig::Mode::Off: return "off";
        case ValueCheckConfig::Mode::Symbolic: return "symbolic";
        case ValueCheckConfig::Mode::Empirical: return "empirical";
        case ValueCheckConfig::Mode::Both: return "both";
    }
    throw std::logic_error("bad mode");
}

bool predicate_implies(const Predicate& pi, const Predicate& pj) {
    const Decimal& a = pi.threshold;
    const Decimal& b = pj.threshold;
    switch (pi.relop) {
        case RelOp::Eq:
            // Solutions of pi are the single point a.
            return pj.holds(a);
        case RelOp::Ne:
            // Everything but a: only another "everything but a" contains it.
            return pj.relop == RelOp::Ne && b == a;
        case RelOp::Lt:
            switch (pj.relop) {
                case RelOp::Lt:
                case RelOp::Le: return a <= b;
                case RelOp::Ne: return b >= a;
                default: return false;
            }
        case RelOp::Le:
            switch (pj.relop) {
                case RelOp::Lt: return a < b;
                case RelOp::Le: return a <= b;
                case RelOp::Ne: return b > a;
                default: return false;
            }
        case RelOp::Gt:
            switch (pj.relop) {
                case RelOp::Gt:
                case RelOp::Ge:
                case RelOp::Ne: return b <= a;
                default: return false;
            }
        case RelOp::Ge:
            switch (pj.relop) {
                case RelOp::Ge: return b <= a;
                case RelOp::Gt:
                case RelOp::Ne: return b < a;
                default: return false;
            }
    }
    throw std::logic_error("bad RelOp");
}

std::optional<Witness> value_check_symbolic(const Rule& ri,
                                            const std::vector<const Rule*>& others) {
    std::vector<const Rule*> sorted = others;
    std::sort(sorted.begin(), sorted.end(),
              [](const Rule* a, const Rule* b) { return a->id < b->id; });
    CanonicalTree ti = CanonicalTree::of(ri.body);
    for (const Rule* rj : sorted) {
        if (rj->id == ri.id) continue;
        if (!(CanonicalTree::of(rj->body) == ti)) continue;
        if (!context_covers(rj->context, ri.context)) continue;
        if (!predicate_implies(ri.predicate, rj->predicate)) continue;
        Witness w;
        w.kind = WitnessKind::ValueImpliedBy;
        w.by = {rj->id};
        w.detail = "symbolic: (" + ri.predicate.str() + ") implies (" + rj->predicate.str()
            + ")";
        return w;
    }
    return std::nullopt;
}

ValueCheckResult value_check_empirical(const Rule& ri, const std::vector<const Rule*>& others,
                                       const OutcomeMatrix& matrix, int min_support) {
    int i = matrix.rule_index(ri.id);
    if (i < 0) throw std::logic_error("matrix does not cover rule " + ri.id);
    std::vector<size_t> failing;
    for (size_t g = 0; g < matrix.groups().size(); ++g)
        if (matrix.at(static_cast<size_t>(i), g).kind == OutcomeKind::Fail) failing.push_back(g);
    if (static_cast<int>(failing.size()) < min_support)
        return {std::nullopt, ValueCheckFired::None, "insufficient support"};

    std::set<std::string> covering;
    for (size_t g : failing) {
        bool covered = false;
        for (const Rule* rj : others) {
            if (rj->id == ri.id) continue;
            int j = matrix.rule_index(rj->id);
            if (j < 0) throw std::logic_error("matrix does not cover rule " + rj->id);
            if (matrix.at(static_cast<size_t>(j), g).kind == OutcomeKind::Fail) {
                covered = true;
                covering.insert(rj->id);
            }
        }
        if (!covered) return {std::nullopt, ValueCheckFired::None, "uncovered failing group"};
    }
    Witness w;
    w.kind = WitnessKind::ValueImpliedBy;
    w.by.assign(covering.begin(), covering.end());
    w.detail = "empirical: " + std::to_string(failing.size()) + " failing group(s) covered";
    return {std::move(w), ValueCheckFired::Empirical, ""};
}

ValueCheckResult value_check(const Rule& ri, const std::vector<const Rule*>& others,
                             const ValueCheckConfig& config, const OutcomeMatrix* matrix) {
    using Mode = ValueCheckConfig::Mode;
    switch (config.mode) {
        case Mode::Off:
            return {std::nullopt, ValueCheckFired::None, ""};
        case Mode::Symbolic: {
            auto w = value_check_symbolic(ri, others);
            if (w) return {std::move(w), ValueCheckFired::Symbolic, ""};
            return {std::nullopt, ValueCheckFired::None, ""};
        }
        case Mode::Empirical: {
            if (!matrix) throw ValueCheckDataMissingError();
            return value_check_empirical(ri, others, *matrix, config.min_support);
        }
        case Mode::Both: {
            auto w = value_check_symbolic(ri, others);
            if (w) return {std::move(w), ValueCheckFired::Symbolic, ""};
            if (!matrix) throw ValueCheckDataMissingError();
            return value_check_empirical(ri, others, *matrix, config.min_support);
        }
    }
    throw std::logic_error("bad value-check mode");
}

}  // namespace ruleprune
