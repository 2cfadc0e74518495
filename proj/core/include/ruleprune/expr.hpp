#pragma once

#include "ruleprune/decimal.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace ruleprune {

enum class OpKind { Add, Sub, Mul, Div, Sum };

const char* op_name(OpKind k);

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree node. ADD/MUL are n-ary (binary as parsed,
/// wider after canonicalization), SUB/DIV take exactly two children and
/// SUM exactly one; leaves are parameters or decimal literals.
class Expr {
public:
    struct Param {
        std::string name;
    };
    struct Value {
        Decimal value;
    };
    struct Op {
        OpKind kind;
        std::vector<ExprPtr> children;
    };
    using Node = std::variant<Param, Value, Op>;

    static ExprPtr param(std::string name);
    static ExprPtr value(Decimal v);
    /// Throws std::logic_error on arity violations.
    static ExprPtr op(OpKind kind, std::vector<ExprPtr> children);

    const Node& node() const { return node_; }

    bool is_param() const { return std::holds_alternative<Param>(node_); }
    bool is_value() const { return std::holds_alternative<Value>(node_); }
    bool is_op() const { return std::holds_alternative<Op>(node_); }
    const Param* as_param() const { return std::get_if<Param>(&node_); }
    const Value* as_value() const { return std::get_if<Value>(&node_); }
    const Op* as_op() const { return std::get_if<Op>(&node_); }

    explicit Expr(Node n) : node_(std::move(n)) {}

private:
    Node node_;
};

bool expr_equal(const Expr& a, const Expr& b);
inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) { return expr_equal(*a, *b); }

size_t node_count(const Expr& e);
inline size_t node_count(const ExprPtr& e) { return node_count(*e); }

/// Height with leaves at 1.
int expr_height(const Expr& e);
inline int expr_height(const ExprPtr& e) { return expr_height(*e); }

}  // namespace ruleprune
