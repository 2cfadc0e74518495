#include "ruleprune/canonical.hpp"

#include <algorithm>
#include <set>

namespace ruleprune {

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string prefix_print(const Expr& e) {
    if (const auto* p = e.as_param()) return p->name;
    if (const auto* v = e.as_value()) return v->value.str();
    const auto& op = *e.as_op();
    std::string out = op_name(op.kind);
    out += '(';
    for (size_t i = 0; i < op.children.size(); ++i) {
        if (i) out += ',';
        out += prefix_print(*op.children[i]);
    }
    out += ')';
    return out;
}

namespace {

struct CanonInfo {
    ExprPtr node;
    uint64_t digest;
    std::string print;
};

CanonInfo make_info(ExprPtr node, std::string print) {
    uint64_t d = fnv1a64(print);
    return {std::move(node), d, std::move(print)};
}

CanonInfo canon(const Expr& e) {
    if (e.is_param() || e.is_value()) {
        auto node = std::make_shared<Expr>(e.node());
        std::string print = prefix_print(*node);
        return make_info(std::move(node), std::move(print));
    }
    const auto& op = *e.as_op();
    std::vector<CanonInfo> children;
    children.reserve(op.children.size());
    for (const auto& c : op.children) children.push_back(canon(*c));

    if (op.kind == OpKind::Add || op.kind == OpKind::Mul) {
        // Splice same-kind children, then sort by (digest, print).
        std::vector<CanonInfo> flat;
        for (auto& c : children) {
            const auto* cop = c.node->as_op();
            if (cop && cop->kind == op.kind) {
                for (const auto& gc : cop->children) {
                    std::string print = prefix_print(*gc);
                    flat.push_back(make_info(gc, std::move(print)));
                }
            } else {
                flat.push_back(std::move(c));
            }
        }
        std::sort(flat.begin(), flat.end(), [](const CanonInfo& a, const CanonInfo& b) {
            if (a.digest != b.digest) return a.digest < b.digest;
            return a.print < b.print;
        });
        children = std::move(flat);
    }

    std::vector<ExprPtr> kids;
    kids.reserve(children.size());
    std::string print = op_name(op.kind);
    print += '(';
    for (size_t i = 0; i < children.size(); ++i) {
        if (i) print += ',';
        print += children[i].print;
        kids.push_back(std::move(children[i].node));
    }
    print += ')';
    return make_info(Expr::op(op.kind, std::move(kids)), std::move(print));
}

void collect_nodes(const ExprPtr& e, std::vector<ExprPtr>& out) {
    out.push_back(e);
    if (const auto* op = e->as_op())
        for (const auto& c : op->children) collect_nodes(c, out);
}

}  // namespace

CanonicalTree CanonicalTree::of(const ExprPtr& tree) {
    CanonInfo info = canon(*tree);
    return CanonicalTree(std::move(info.node), info.digest, std::move(info.print));
}

std::vector<CanonicalTree> subtrees(const CanonicalTree& t) {
    std::vector<ExprPtr> nodes;
    collect_nodes(t.root(), nodes);
    std::vector<CanonicalTree> out;
    std::set<std::string> seen;
    for (const auto& n : nodes) {
        // Subtrees of a canonical tree are already canonical.
        std::string print = prefix_print(*n);
        if (!seen.insert(print).second) continue;
        uint64_t d = fnv1a64(print);
        out.push_back(CanonicalTree(n, d, std::move(print)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ruleprune
