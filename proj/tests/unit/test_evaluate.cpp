#include "ruleprune/evaluate.hpp"

#include "ruleprune/errors.hpp"
#include "ruleprune/parser.hpp"

#include <doctest.h>

using namespace ruleprune;

namespace {

Rule mk(const char* line) { return parse_rules(line).rules()[0]; }

Outcome eval_one(const char* rule_line, const std::string& csv, size_t group = 0) {
    Dataset ds = Dataset::from_csv(csv);
    REQUIRE(group < ds.groups().size());
    return evaluate_rule(mk(rule_line), ds, ds.groups()[group]);
}

const char* kTwoGroups =
    "fund_id,date,position_id,asset_class,txn_price,units,fx_rate\n"
    "F1,2011-01-01,P1,equity,10,2,1\n"
    "F1,2011-01-01,P2,equity,5,4,1\n"
    "F1,2011-01-02,P1,equity,3,1,1\n";

}  // namespace

TEST_CASE("dataset ingestion") {
    Dataset ds = Dataset::from_csv(kTwoGroups);
    CHECK(ds.groups().size() == 2);
    CHECK(ds.rows().size() == 3);
    CHECK(ds.param_columns() == std::vector<std::string>{"txn_price", "units", "fx_rate"});
    CHECK(ds.groups()[0].key.str() == "F1/2011-01-01");
    CHECK(ds.groups()[0].row_indices.size() == 2);

    SUBCASE("key columns may come in any order") {
        Dataset d2 = Dataset::from_csv(
            "units,asset_class,position_id,date,fund_id\n1,bond,P1,2011-01-01,F1\n");
        CHECK(d2.rows().size() == 1);
        CHECK(d2.param_columns() == std::vector<std::string>{"units"});
    }
    SUBCASE("missing key column") {
        CHECK_THROWS_AS(Dataset::from_csv("fund_id,date,position_id,px\nF1,2011-01-01,P1,1\n"),
                        MissingKeyColumnError);
    }
    SUBCASE("duplicate position key") {
        CHECK_THROWS_AS(Dataset::from_csv("fund_id,date,position_id,asset_class,px\n"
                                          "F1,2011-01-01,P1,equity,1\n"
                                          "F1,2011-01-01,P1,equity,2\n"),
                        DuplicatePositionKeyError);
    }
    SUBCASE("bad decimal carries row and column") {
        try {
            Dataset::from_csv("fund_id,date,position_id,asset_class,px\n"
                              "F1,2011-01-01,P1,equity,1\n"
                              "F1,2011-01-01,P2,equity,abc\n");
            FAIL("expected BadDecimalError");
        } catch (const BadDecimalError& e) {
            CHECK(e.line() == 3);
            CHECK(e.column() == "px");
        }
    }
    SUBCASE("bad date") {
        CHECK_THROWS_AS(Dataset::from_csv("fund_id,date,position_id,asset_class,px\n"
                                          "F1,2011-02-30,P1,equity,1\n"),
                        DatasetFormatError);
    }
}

TEST_CASE("sum aggregates the product over the group") {
    Outcome o = eval_one("R1: IF sum(txn_price * units * fx_rate) = 40 THEN FAIL", kTwoGroups);
    CHECK(o.kind == OutcomeKind::Fail);
    CHECK(o.detail == "40");
    // second group: 3*1*1 = 3, predicate does not hold
    Outcome o2 =
        eval_one("R1: IF sum(txn_price * units * fx_rate) = 40 THEN FAIL", kTwoGroups, 1);
    CHECK(o2.kind == OutcomeKind::Pass);
    CHECK(o2.detail == "3");
}

TEST_CASE("empty filtered row set sums to zero") {
    // the context filter removes every row, so the sum is exactly 0
    Outcome o = eval_one("R1: IF sum(txn_price) = 0 THEN FAIL CONTEXT class=bond", kTwoGroups);
    CHECK(o.kind == OutcomeKind::Fail);
    CHECK(o.detail == "0");
}

TEST_CASE("division by zero is not evaluable") {
    const char* csv =
        "fund_id,date,position_id,asset_class,a,nav\n"
        "F1,2011-01-01,P1,equity,5,0\n";
    Outcome o = eval_one("R1: IF a / nav > 1 THEN FAIL", csv);
    CHECK(o.kind == OutcomeKind::NotEvaluable);
    CHECK(o.detail == "division by zero");
}

TEST_CASE("parameters outside sum must be scalar over the group") {
    const char* csv =
        "fund_id,date,position_id,asset_class,nav,px\n"
        "F1,2011-01-01,P1,equity,100,1\n"
        "F1,2011-01-01,P2,equity,100,2\n";
    // nav is constant: binds fine
    CHECK(eval_one("R1: IF nav = 100 THEN FAIL", csv).kind == OutcomeKind::Fail);
    // px varies
    Outcome o = eval_one("R1: IF px = 1 THEN FAIL", csv);
    CHECK(o.kind == OutcomeKind::NotEvaluable);
    CHECK(o.detail == "non-scalar outside sum: 'px'");
    // and with nothing in scope it cannot bind at all
    Outcome empty = eval_one("R1: IF nav = 100 THEN FAIL CONTEXT class=bond", csv);
    CHECK(empty.kind == OutcomeKind::NotEvaluable);
    CHECK(empty.detail == "parameter 'nav' has no rows in scope");
}

TEST_CASE("missing values poison only cells that touch them") {
    const char* csv =
        "fund_id,date,position_id,asset_class,a,b\n"
        "F1,2011-01-01,P1,equity,1,\n"
        "F1,2011-01-01,P2,bond,2,5\n";
    Outcome touched = eval_one("R1: IF sum(b) = 0 THEN FAIL", csv);
    CHECK(touched.kind == OutcomeKind::NotEvaluable);
    CHECK(touched.detail == "missing value in column 'b'");
    // the bond row's b is present; filtering to bond avoids the hole
    CHECK(eval_one("R1: IF sum(b) = 5 THEN FAIL CONTEXT class=bond", csv).kind
          == OutcomeKind::Fail);
    // a is complete
    CHECK(eval_one("R1: IF sum(a) = 3 THEN FAIL", csv).kind == OutcomeKind::Fail);
}

TEST_CASE("class filter never reads excluded rows") {
    // bond row carries a value that would flip the outcome if read
    const char* csv =
        "fund_id,date,position_id,asset_class,mv\n"
        "F1,2011-01-01,P1,equity,7\n"
        "F1,2011-01-01,P2,bond,1000000\n";
    Outcome o = eval_one("R1: IF sum(mv) = 7 THEN FAIL CONTEXT class=equity", csv);
    CHECK(o.kind == OutcomeKind::Fail);
    CHECK(o.detail == "7");
}

TEST_CASE("groups outside the window are context-excluded") {
    Outcome o = eval_one(
        "R1: IF sum(txn_price) = 0 THEN FAIL CONTEXT period=[2012-01-01,2012-12-31]",
        kTwoGroups);
    CHECK(o.kind == OutcomeKind::Pass);
    CHECK(o.detail == "context-excluded");
}

TEST_CASE("currency scope binds suffixed columns") {
    const char* csv =
        "fund_id,date,position_id,asset_class,cost_local,cost_base,units\n"
        "F1,2011-01-01,P1,equity,5,999,2\n";
    CHECK(eval_one("R1: IF sum(cost) = 5 THEN FAIL CONTEXT ccy=local", csv).kind
          == OutcomeKind::Fail);
    CHECK(eval_one("R1: IF sum(cost) = 999 THEN FAIL CONTEXT ccy=base", csv).kind
          == OutcomeKind::Fail);
    // unsuffixed parameters bind directly under any scope
    CHECK(eval_one("R1: IF sum(units) = 2 THEN FAIL CONTEXT ccy=local", csv).kind
          == OutcomeKind::Fail);
    // without a scope the bare column is required
    CHECK_THROWS_AS(eval_one("R1: IF sum(cost) = 5 THEN FAIL", csv), UnknownParameterError);
}

TEST_CASE("nested sums re-aggregate over the same filtered rows") {
    const char* csv =
        "fund_id,date,position_id,asset_class,x\n"
        "F1,2011-01-01,P1,equity,1\n"
        "F1,2011-01-01,P2,equity,2\n";
    // inner sum is 3 for every row of the outer loop: 3 + 3
    Outcome o = eval_one("R1: IF sum(sum(x)) = 6 THEN FAIL", csv);
    CHECK(o.kind == OutcomeKind::Fail);
    CHECK(o.detail == "6");
}

TEST_CASE("evaluate_all") {
    RuleSet rules = parse_rules(
        "R1: IF sum(txn_price * units * fx_rate) = 40 THEN FAIL\n"
        "R2: IF sum(units) > 100 THEN FAIL\n");
    Dataset ds = Dataset::from_csv(kTwoGroups);
    OutcomeMatrix m = evaluate_all(rules, ds);
    CHECK(m.rule_ids().size() == 2);
    CHECK(m.groups().size() == 2);
    CHECK(m.at(0, 0).kind == OutcomeKind::Fail);
    CHECK(m.at(0, 1).kind == OutcomeKind::Pass);
    CHECK(m.at(1, 0).kind == OutcomeKind::Pass);
    CHECK(m.at(1, 1).kind == OutcomeKind::Pass);

    SUBCASE("unknown parameter aborts naming rule and column") {
        RuleSet bad = parse_rules("R9: IF sum(ghost) = 0 THEN FAIL\n");
        try {
            evaluate_all(bad, ds);
            FAIL("expected UnknownParameterError");
        } catch (const UnknownParameterError& e) {
            CHECK(e.rule_id() == "R9");
            CHECK(e.parameter() == "ghost");
        }
    }
    SUBCASE("parallel evaluation is identical") {
        CHECK(evaluate_all(rules, ds, true) == evaluate_all(rules, ds, false));
    }
}
