#include "ruleprune/containment.hpp"

#include <map>
#include <stdexcept>

namespace ruleprune {

const char* containment_mode_name(ContainmentMode m) {
    return m == ContainmentMode::Strict ? "strict" : "ac_embed";
}

const char* relation_kind_name(RelationKind k) {
    switch (k) {
        case RelationKind::None: return "none";
        case RelationKind::IInJ: return "i_in_j";
        case RelationKind::JInI: return "j_in_i";
        case RelationKind::Equal: return "equal";
    }
    throw std::logic_error("bad RelationKind");
}

namespace {

bool is_ac(OpKind k) { return k == OpKind::Add || k == OpKind::Mul; }

// Keyed by canonical pretty-print, which is injective on canonical trees.
std::map<std::string, int> child_counts(const Expr::Op& op) {
    std::map<std::string, int> counts;
    for (const auto& c : op.children) ++counts[prefix_print(*c)];
    return counts;
}

// candidate's children form a proper sub-multiset of node's children.
bool proper_sub_multiset(const Expr::Op& candidate, const Expr::Op& node) {
    if (candidate.children.size() >= node.children.size()) return false;
    auto need = child_counts(candidate);
    auto have = child_counts(node);
    for (const auto& [print, n] : need) {
        auto it = have.find(print);
        if (it == have.end() || it->second < n) return false;
    }
    return true;
}

bool strict_search(const Expr& node, const Expr& candidate, bool is_root) {
    if (!is_root && expr_equal(node, candidate)) return true;
    if (const auto* op = node.as_op())
        for (const auto& c : op->children)
            if (strict_search(*c, candidate, false)) return true;
    return false;
}

bool embed_search(const Expr& node, const Expr::Op& candidate) {
    if (const auto* op = node.as_op()) {
        if (op->kind == candidate.kind && proper_sub_multiset(candidate, *op)) return true;
        for (const auto& c : op->children)
            if (embed_search(*c, candidate)) return true;
    }
    return false;
}

}  // namespace

bool contains(const CanonicalTree& container, const CanonicalTree& candidate,
              ContainmentMode mode) {
    if (strict_search(*container.root(), *candidate.root(), true)) return true;
    if (mode == ContainmentMode::AcEmbed) {
        const auto* cop = candidate.root()->as_op();
        if (cop && is_ac(cop->kind) && embed_search(*container.root(), *cop)) return true;
    }
    return false;
}

bool context_covers(const Context& outer, const Context& inner) {
    if (outer.classes) {
        if (!inner.classes) return false;
        for (const auto& c : *inner.classes)
            if (!outer.classes->contains(c)) return false;
    }
    if (outer.ccy != CcyScope::Any) {
        if (outer.ccy != inner.ccy || outer.ccy_code != inner.ccy_code) return false;
    }
    if (outer.window) {
        if (!inner.window) return false;
        if (!outer.window->covers(*inner.window)) return false;
    }
    return true;
}

RelationKind relate_canonical(const CanonicalTree& ti, const Context& ci,
                              const CanonicalTree& tj, const Context& cj,
                              ContainmentMode mode) {
    if (ti == tj) {
        if (context_covers(ci, cj) && context_covers(cj, ci)) return RelationKind::Equal;
        return RelationKind::None;
    }
    if (contains(tj, ti, mode) && context_covers(cj, ci)) return RelationKind::IInJ;
    if (contains(ti, tj, mode) && context_covers(ci, cj)) return RelationKind::JInI;
    return RelationKind::None;
}

RelationKind relate(const Rule& ri, const Rule& rj, ContainmentMode mode) {
    return relate_canonical(CanonicalTree::of(ri.body), ri.context,
                            CanonicalTree::of(rj.body), rj.context, mode);
}

}  // namespace ruleprune
