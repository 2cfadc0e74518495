#include "ruleprune/value_check.hpp"

#include "ruleprune/errors.hpp"
#include "ruleprune/parser.hpp"
#include "../support/generators.hpp"

#include <doctest.h>

using namespace ruleprune;

namespace {
Predicate pred(RelOp op, const char* t) { return {op, *Decimal::parse(t)}; }
Rule mk(const char* line) { return parse_rules(line).rules()[0]; }
}  // namespace

TEST_CASE("predicate implication case analysis") {
    CHECK(predicate_implies(pred(RelOp::Eq, "0"), pred(RelOp::Le, "0.2")));
    CHECK(predicate_implies(pred(RelOp::Lt, "3"), pred(RelOp::Le, "3")));
    CHECK_FALSE(predicate_implies(pred(RelOp::Le, "3"), pred(RelOp::Lt, "3")));
    CHECK_FALSE(predicate_implies(pred(RelOp::Ne, "0"), pred(RelOp::Gt, "-5")));

    CHECK(predicate_implies(pred(RelOp::Eq, "0"), pred(RelOp::Ne, "1")));
    CHECK_FALSE(predicate_implies(pred(RelOp::Eq, "1"), pred(RelOp::Ne, "1")));
    CHECK(predicate_implies(pred(RelOp::Ne, "2"), pred(RelOp::Ne, "2")));
    CHECK_FALSE(predicate_implies(pred(RelOp::Ne, "2"), pred(RelOp::Ne, "3")));
    CHECK(predicate_implies(pred(RelOp::Gt, "5"), pred(RelOp::Ge, "5")));
    CHECK_FALSE(predicate_implies(pred(RelOp::Ge, "5"), pred(RelOp::Gt, "5")));
    CHECK(predicate_implies(pred(RelOp::Gt, "5"), pred(RelOp::Gt, "4")));
    CHECK(predicate_implies(pred(RelOp::Lt, "-1"), pred(RelOp::Ne, "0")));
    CHECK(predicate_implies(pred(RelOp::Ge, "1"), pred(RelOp::Ne, "0.5")));

    // reflexivity across every operator
    for (RelOp op : {RelOp::Eq, RelOp::Lt, RelOp::Gt, RelOp::Le, RelOp::Ge, RelOp::Ne})
        CHECK(predicate_implies(pred(op, "0.2"), pred(op, "0.2")));
}

TEST_CASE("predicate implication is transitive over a sampled pool") {
    testgen::Rng rng(31);
    std::vector<Predicate> pool;
    for (int i = 0; i < 40; ++i) pool.push_back(testgen::random_predicate(rng));
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool)
                if (predicate_implies(a, b) && predicate_implies(b, c))
                    CHECK(predicate_implies(a, c));
}

TEST_CASE("symbolic value check") {
    Rule ri = mk("RI: IF sum(a * b) = 0 THEN FAIL");
    Rule rj = mk("RJ: IF sum(a * b) <= 0.2 THEN FAIL");
    Rule other_body = mk("RK: IF sum(a * c) <= 0.2 THEN FAIL");

    auto w = value_check_symbolic(ri, {&rj, &other_body});
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::ValueImpliedBy);
    CHECK(w->by == std::vector<std::string>{"RJ"});
    CHECK(w->detail == "symbolic: (= 0) implies (<= 0.2)");

    CHECK_FALSE(value_check_symbolic(ri, {&other_body}).has_value());
    CHECK_FALSE(value_check_symbolic(rj, {&ri}).has_value());  // direction matters

    // the covering context must be on the implying side
    Rule narrow = mk("RN: IF sum(a * b) = 0 THEN FAIL CONTEXT class=equity");
    Rule wide = mk("RW: IF sum(a * b) <= 0.2 THEN FAIL");
    CHECK(value_check_symbolic(narrow, {&wide}).has_value());
    Rule narrow_other = mk("RO: IF sum(a * b) <= 0.2 THEN FAIL CONTEXT class=bond");
    CHECK_FALSE(value_check_symbolic(wide, {&narrow_other}).has_value());

    // first hit by id order wins
    Rule rj2 = mk("RA: IF sum(a * b) <= 0.5 THEN FAIL");
    auto first = value_check_symbolic(ri, {&rj, &rj2});
    REQUIRE(first.has_value());
    CHECK(first->by == std::vector<std::string>{"RA"});
}

namespace {
OutcomeMatrix make_matrix(const std::vector<std::string>& ids, int groups,
                          const std::vector<std::vector<int>>& fail_cells) {
    std::vector<GroupKey> keys;
    for (int g = 0; g < groups; ++g) keys.push_back({"F", Date{2011, 1, g + 1}});
    OutcomeMatrix m(ids, keys);
    for (size_t r = 0; r < ids.size(); ++r)
        for (int g = 0; g < groups; ++g) m.set(r, static_cast<size_t>(g), {OutcomeKind::Pass, ""});
    for (size_t r = 0; r < fail_cells.size(); ++r)
        for (int g : fail_cells[r]) m.set(r, static_cast<size_t>(g), {OutcomeKind::Fail, ""});
    return m;
}
}  // namespace

TEST_CASE("empirical value check") {
    Rule ri = mk("RI: IF sum(a) = 0 THEN FAIL");
    Rule rj = mk("RJ: IF sum(b) = 0 THEN FAIL");
    Rule rk = mk("RK: IF sum(c) = 0 THEN FAIL");

    SUBCASE("failures covered by one other rule") {
        auto m = make_matrix({"RI", "RJ", "RK"}, 4, {{0, 1}, {0, 1, 2}, {}});
        auto res = value_check_empirical(ri, {&rj, &rk}, m, 1);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->by == std::vector<std::string>{"RJ"});
        CHECK(res.witness->detail == "empirical: 2 failing group(s) covered");
        CHECK(res.fired == ValueCheckFired::Empirical);
    }
    SUBCASE("uncovered failure blocks the witness") {
        auto m = make_matrix({"RI", "RJ", "RK"}, 4, {{0, 3}, {0, 1, 2}, {}});
        auto res = value_check_empirical(ri, {&rj, &rk}, m, 1);
        CHECK_FALSE(res.witness.has_value());
        CHECK(res.note == "uncovered failing group");
    }
    SUBCASE("a not-evaluable cell is not a failure") {
        auto m = make_matrix({"RI", "RJ"}, 2, {{0}, {}});
        m.set(1, 0, {OutcomeKind::NotEvaluable, "division by zero"});
        auto res = value_check_empirical(ri, {&rj}, m, 1);
        CHECK_FALSE(res.witness.has_value());
    }
    SUBCASE("insufficient support") {
        auto m = make_matrix({"RI", "RJ"}, 3, {{}, {0, 1, 2}});
        auto res = value_check_empirical(ri, {&rj}, m, 1);
        CHECK_FALSE(res.witness.has_value());
        CHECK(res.note == "insufficient support");
    }
    SUBCASE("min_support gates the verdict") {
        auto m = make_matrix({"RI", "RJ"}, 4, {{0, 1}, {0, 1, 2}});
        CHECK(value_check_empirical(ri, {&rj}, m, 2).witness.has_value());
        CHECK_FALSE(value_check_empirical(ri, {&rj}, m, 3).witness.has_value());
        CHECK_FALSE(value_check_empirical(ri, {&rj}, m, 1000000000).witness.has_value());
    }
    SUBCASE("multiple covering rules are all reported") {
        auto m = make_matrix({"RI", "RJ", "RK"}, 4, {{0, 1}, {0}, {1}});
        auto res = value_check_empirical(ri, {&rj, &rk}, m, 1);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->by == std::vector<std::string>{"RJ", "RK"});
    }
    SUBCASE("enlarging others never loses a witness") {
        auto m = make_matrix({"RI", "RJ", "RK"}, 4, {{0, 1}, {0, 1}, {2, 3}});
        REQUIRE(value_check_empirical(ri, {&rj}, m, 1).witness.has_value());
        CHECK(value_check_empirical(ri, {&rj, &rk}, m, 1).witness.has_value());
    }
}

TEST_CASE("value check dispatch") {
    Rule ri = mk("RI: IF sum(a * b) = 0 THEN FAIL");
    Rule rj = mk("RJ: IF sum(a * b) <= 0.2 THEN FAIL");
    ValueCheckConfig cfg;

    cfg.mode = ValueCheckConfig::Mode::Off;
    CHECK_FALSE(value_check(ri, {&rj}, cfg, nullptr).witness.has_value());

    cfg.mode = ValueCheckConfig::Mode::Symbolic;
    auto sym = value_check(ri, {&rj}, cfg, nullptr);
    REQUIRE(sym.witness.has_value());
    CHECK(sym.fired == ValueCheckFired::Symbolic);

    // Both short-circuits on a symbolic hit: no matrix needed
    cfg.mode = ValueCheckConfig::Mode::Both;
    CHECK(value_check(ri, {&rj}, cfg, nullptr).fired == ValueCheckFired::Symbolic);

    cfg.mode = ValueCheckConfig::Mode::Empirical;
    CHECK_THROWS_AS(value_check(ri, {&rj}, cfg, nullptr), ValueCheckDataMissingError);
}

TEST_CASE("a symbolic hit implies an empirical hit on evaluable data with support") {
    testgen::Rng rng(47);
    for (int round = 0; round < 50; ++round) {
        Rule ri = mk("RI: IF sum(a * b) = 0 THEN FAIL");
        Rule rj = mk("RJ: IF sum(a * b) <= 0.2 THEN FAIL");
        REQUIRE(value_check_symbolic(ri, {&rj}).has_value());

        // random dataset with at least one zero-sum group planted
        std::string csv = "fund_id,date,position_id,asset_class,a,b\n";
        int groups = testgen::pick(rng, 2, 6);
        for (int g = 0; g < groups; ++g) {
            for (int p = 0; p < 3; ++p) {
                std::string a = g == 0 ? "0" : std::to_string(testgen::pick(rng, 0, 3));
                csv += "F1,2011-01-0" + std::to_string(g + 1) + ",P" + std::to_string(p)
                    + ",equity," + a + "," + std::to_string(testgen::pick(rng, 1, 3)) + "\n";
            }
        }
        Dataset ds = Dataset::from_csv(csv);
        RuleSet set;
        set.add(ri);
        set.add(rj);
        OutcomeMatrix m = evaluate_all(set, ds);
        auto res = value_check_empirical(ri, {&rj}, m, 1);
        CHECK(res.witness.has_value());
    }
}
