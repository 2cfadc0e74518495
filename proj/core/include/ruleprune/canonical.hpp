#pragma once

#include "ruleprune/expr.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ruleprune {

/// FNV-1a over the UTF-8 bytes; stable across runs and platforms.
uint64_t fnv1a64(std::string_view bytes);

/// Prefix functional form: `div(sum(mul(a,b)),nav)`. Children are printed
/// as stored, so on a canonical tree this is the canonical pretty-print.
std::string prefix_print(const Expr& e);
inline std::string prefix_print(const ExprPtr& e) { return prefix_print(*e); }

/// An expression tree in canonical form: nested ADD/ADD and MUL/MUL children
/// spliced into their parent, ADD/MUL children sorted ascending by
/// (digest, pretty-print). SUB, DIV and SUM keep their structure and order.
/// No constant folding. Equal trees have equal digests; a digest match is
/// confirmed structurally before two trees are treated as equal.
class CanonicalTree {
public:
    static CanonicalTree of(const ExprPtr& tree);

    const ExprPtr& root() const { return root_; }
    uint64_t digest() const { return digest_; }
    const std::string& print() const { return print_; }
    int height() const { return expr_height(root_); }

    bool operator==(const CanonicalTree& o) const {
        return digest_ == o.digest_ && expr_equal(root_, o.root_);
    }
    bool operator<(const CanonicalTree& o) const {
        if (digest_ != o.digest_) return digest_ < o.digest_;
        return print_ < o.print_;
    }

private:
    CanonicalTree(ExprPtr root, uint64_t digest, std::string print)
        : root_(std::move(root)), digest_(digest), print_(std::move(print)) {}

    friend std::vector<CanonicalTree> subtrees(const CanonicalTree&);

    ExprPtr root_;
    uint64_t digest_ = 0;
    std::string print_;
};

/// Canonical trees rooted at every node of t, t itself included; duplicates
/// collapsed. Sorted by (digest, print).
std::vector<CanonicalTree> subtrees(const CanonicalTree& t);

}  // namespace ruleprune
