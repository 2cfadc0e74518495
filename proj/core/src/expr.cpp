#include "ruleprune/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace ruleprune {

const char* op_name(OpKind k) {
    switch (k) {
        case OpKind::Add: return "add";
        case OpKind::Sub: return "sub";
        case OpKind::Mul: return "mul";
        case OpKind::Div: return "div";
        case OpKind::Sum: return "sum";
    }
    throw std::logic_error("bad OpKind");
}

ExprPtr Expr::param(std::string name) {
    return std::make_shared<Expr>(Node{Param{std::move(name)}});
}

ExprPtr Expr::value(Decimal v) {
    return std::make_shared<Expr>(Node{Value{std::move(v)}});
}

ExprPtr Expr::op(OpKind kind, std::vector<ExprPtr> children) {
    switch (kind) {
        case OpKind::Add:
        case OpKind::Mul:
            if (children.size() < 2) throw std::logic_error("ADD/MUL need at least 2 children");
            break;
        case OpKind::Sub:
        case OpKind::Div:
            if (children.size() != 2) throw std::logic_error("SUB/DIV need exactly 2 children");
            break;
        case OpKind::Sum:
            if (children.size() != 1) throw std::logic_error("SUM needs exactly 1 child");
            break;
    }
    for (const auto& c : children)
        if (!c) throw std::logic_error("null child");
    return std::make_shared<Expr>(Node{Op{kind, std::move(children)}});
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.node().index() != b.node().index()) return false;
    if (const auto* p = a.as_param()) return p->name == b.as_param()->name;
    if (const auto* v = a.as_value()) return v->value == b.as_value()->value;
    const auto& oa = *a.as_op();
    const auto& ob = *b.as_op();
    if (oa.kind != ob.kind || oa.children.size() != ob.children.size()) return false;
    for (size_t i = 0; i < oa.children.size(); ++i)
        if (!expr_equal(*oa.children[i], *ob.children[i])) return false;
    return true;
}

size_t node_count(const Expr& e) {
    if (const auto* o = e.as_op()) {
        size_t n = 1;
        for (const auto& c : o->children) n += node_count(*c);
        return n;
    }
    return 1;
}

int expr_height(const Expr& e) {
    if (const auto* o = e.as_op()) {
        int h = 0;
        for (const auto& c : o->children) h = std::max(h, expr_height(*c));
        return h + 1;
    }
    return 1;
}

}  // namespace ruleprune
