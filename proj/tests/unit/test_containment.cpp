#include "ruleprune/containment.hpp"

#include "ruleprune/parser.hpp"
#include "../support/generators.hpp"
#include "../support/oracle.hpp"

#include <doctest.h>

using namespace ruleprune;

namespace {
CanonicalTree canon(const char* text) { return CanonicalTree::of(parse_expression(text)); }
Rule mk(const char* line) { return parse_rules(line).rules()[0]; }
}  // namespace

TEST_CASE("containment is proper") {
    CanonicalTree t = canon("sum(a * b * c) / nav");
    CHECK_FALSE(contains(t, t, ContainmentMode::Strict));
    CHECK_FALSE(contains(t, t, ContainmentMode::AcEmbed));
}

TEST_CASE("rooted subtree containment") {
    CanonicalTree outer = canon("sum(a * b * c) / nav");
    CanonicalTree inner = canon("sum(a * b * c)");
    CHECK(contains(outer, inner, ContainmentMode::Strict));
    CHECK(contains(outer, canon("a * b * c"), ContainmentMode::Strict));
    CHECK(contains(outer, canon("nav"), ContainmentMode::Strict));
    CHECK_FALSE(contains(inner, outer, ContainmentMode::Strict));
    // AC order on the way in does not matter
    CHECK(contains(outer, canon("c * b * a"), ContainmentMode::Strict));
}

TEST_CASE("ac embedding matches proper child sub-multisets") {
    CanonicalTree big = canon("a + b + c");
    CanonicalTree small = canon("a + b");
    CHECK(contains(big, small, ContainmentMode::AcEmbed));
    CHECK_FALSE(contains(big, small, ContainmentMode::Strict));
    // same kind required
    CHECK_FALSE(contains(big, canon("a * b"), ContainmentMode::AcEmbed));
    // multiset, not set: a appears once in the container
    CHECK_FALSE(contains(canon("a + b + c"), canon("a + a"), ContainmentMode::AcEmbed));
    CHECK(contains(canon("a + a + b"), canon("a + a"), ContainmentMode::AcEmbed));
    // embedding applies at depth too
    CHECK(contains(canon("(a + b + c) / nav"), canon("a + b"), ContainmentMode::AcEmbed));
}

TEST_CASE("value leaves are subtrees like any other") {
    CHECK(contains(canon("q / 365"), canon("365"), ContainmentMode::Strict));
    CHECK(contains(canon("q / 365"), canon("365.0"), ContainmentMode::Strict));
    CHECK_FALSE(contains(canon("q / 365"), canon("366"), ContainmentMode::Strict));
}

TEST_CASE("context coverage") {
    Context universal;
    Context equity = parse_context("class=equity");
    Context eq_bond = parse_context("class=bond,equity");
    Context local = parse_context("ccy=local");
    Context year = parse_context("period=[2011-01-01,2011-12-31]");
    Context half = parse_context("period=[2011-01-01,2011-06-30]");

    CHECK(context_covers(universal, universal));
    CHECK(context_covers(universal, equity));
    CHECK(context_covers(universal, local));
    CHECK_FALSE(context_covers(equity, universal));
    CHECK(context_covers(equity, equity));
    CHECK(context_covers(eq_bond, equity));
    CHECK_FALSE(context_covers(equity, eq_bond));
    CHECK(context_covers(year, half));
    CHECK_FALSE(context_covers(half, year));
    CHECK_FALSE(context_covers(local, parse_context("ccy=base")));
    CHECK_FALSE(context_covers(parse_context("ccy=EUR"), parse_context("ccy=USD")));
    CHECK(context_covers(parse_context("ccy=EUR"), parse_context("ccy=EUR")));
}

TEST_CASE("relate") {
    Rule narrow = mk("RI: IF sum(tx * u * fx) = 0 THEN FAIL");
    Rule wide = mk("RJ: IF sum(tx * u * fx) / nav <= 0.05 THEN FAIL");
    CHECK(relate(narrow, wide, ContainmentMode::AcEmbed) == RelationKind::IInJ);
    CHECK(relate(wide, narrow, ContainmentMode::AcEmbed) == RelationKind::JInI);

    Rule copy = mk("RK: IF sum(tx * u * fx) = 0 THEN FAIL");
    CHECK(relate(narrow, copy, ContainmentMode::Strict) == RelationKind::Equal);
    CHECK(relate(copy, narrow, ContainmentMode::Strict) == RelationKind::Equal);

    CHECK(relate(mk("RA: IF a + b = 0 THEN FAIL"), mk("RB: IF c * d = 0 THEN FAIL"),
                 ContainmentMode::AcEmbed)
          == RelationKind::None);

    // equal bodies, incomparable contexts
    Rule eq = mk("RE: IF a + b = 0 THEN FAIL CONTEXT class=equity");
    Rule bo = mk("RF: IF a + b = 0 THEN FAIL CONTEXT class=bond");
    CHECK(relate(eq, bo, ContainmentMode::AcEmbed) == RelationKind::None);

    // containment without context coverage is no relation
    Rule inner_wide = mk("RG: IF sum(q) = 0 THEN FAIL");
    Rule outer_narrow = mk("RH: IF sum(q) / nav = 0 THEN FAIL CONTEXT class=equity");
    CHECK(relate(inner_wide, outer_narrow, ContainmentMode::AcEmbed) == RelationKind::None);
    // and with the broad context on the container it holds
    Rule inner_narrow = mk("RG: IF sum(q) = 0 THEN FAIL CONTEXT class=equity");
    Rule outer_wide = mk("RH: IF sum(q) / nav = 0 THEN FAIL");
    CHECK(relate(inner_narrow, outer_wide, ContainmentMode::AcEmbed) == RelationKind::IInJ);
}

TEST_CASE("strict containment agrees with the enumeration oracle on small trees") {
    testgen::Rng rng(23);
    int positives = 0;
    for (int i = 0; i < 300; ++i) {
        ExprPtr inner = testgen::random_tree(rng, 3);
        ExprPtr outer;
        switch (i % 3) {
            case 0:
                outer = Expr::op(OpKind::Div, {inner, testgen::random_tree(rng, 2)});
                break;
            case 1: outer = testgen::random_tree(rng, 4); break;
            default: outer = Expr::op(OpKind::Sum, {inner}); break;
        }
        if (node_count(outer) > 20) continue;
        bool lib = contains(CanonicalTree::of(outer), CanonicalTree::of(inner),
                            ContainmentMode::Strict);
        bool ref = oracle::contains(outer, inner, ContainmentMode::Strict);
        CAPTURE(prefix_print(outer));
        CAPTURE(prefix_print(inner));
        CHECK(lib == ref);
        positives += lib;
    }
    CHECK(positives > 100);  // the generator must actually exercise containment
}
