#include "ruleprune/canonical.hpp"
#include "ruleprune/containment.hpp"
#include "ruleprune/dataset.hpp"
#include "ruleprune/evaluate.hpp"
#include "ruleprune/parser.hpp"
#include "ruleprune/partition.hpp"
#include "ruleprune/report.hpp"

#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

namespace {

using namespace ruleprune;

// n-family synthetic set: hub + strict dependant + AC-embedded dependant.
std::string synthetic_rules(int families) {
    std::ostringstream out;
    for (int i = 0; i < families; ++i) {
        std::string p = "p" + std::to_string(i) + "_";
        std::string id = "R" + std::to_string(i);
        out << id << ": IF sum(" << p << "a * " << p << "b) = 0 THEN FAIL\n";
        out << id << "X: IF sum(" << p << "a * " << p << "b) / " << p
            << "c <= 0.05 THEN FAIL\n";
        out << id << "Y: IF " << p << "a + " << p << "b + " << p << "c > 12 THEN FAIL\n";
    }
    return out.str();
}

std::string synthetic_csv(int groups, int positions) {
    std::ostringstream out;
    out << "fund_id,date,position_id,asset_class,a,b\n";
    for (int g = 0; g < groups; ++g) {
        char date[32];
        std::snprintf(date, sizeof(date), "2011-%02d-%02d", g / 28 + 1, g % 28 + 1);
        for (int p = 0; p < positions; ++p)
            out << "F1," << date << ",P" << p << ",equity," << (g % 7) << "." << p << ",2\n";
    }
    return out.str();
}

void BM_ParseRules(benchmark::State& state) {
    std::string text = synthetic_rules(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(parse_rules(text));
}
BENCHMARK(BM_ParseRules)->Arg(16)->Arg(48);

void BM_Canonicalize(benchmark::State& state) {
    ExprPtr body = parse_expression(
        "sum(txn_price * units * fx_rate) / nav + base_cost * (fee + levy + stamp) - adj");
    for (auto _ : state) benchmark::DoNotOptimize(CanonicalTree::of(body));
}
BENCHMARK(BM_Canonicalize);

void BM_Containment(benchmark::State& state) {
    CanonicalTree outer =
        CanonicalTree::of(parse_expression("sum(a * b * c) / nav + fee + levy + stamp"));
    CanonicalTree inner = CanonicalTree::of(parse_expression("fee + levy"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(contains(outer, inner, ContainmentMode::Strict));
        benchmark::DoNotOptimize(contains(outer, inner, ContainmentMode::AcEmbed));
    }
}
BENCHMARK(BM_Containment);

void BM_Partition(benchmark::State& state) {
    RuleSet rules = parse_rules(synthetic_rules(static_cast<int>(state.range(0))));
    PartitionOptions opts;
    for (auto _ : state) benchmark::DoNotOptimize(partition(rules, opts));
    state.SetLabel(std::to_string(rules.size()) + " rules");
}
BENCHMARK(BM_Partition)->Arg(16)->Arg(48);

void BM_PartitionParallel(benchmark::State& state) {
    RuleSet rules = parse_rules(synthetic_rules(48));
    PartitionOptions opts;
    opts.parallel = true;
    for (auto _ : state) benchmark::DoNotOptimize(partition(rules, opts));
}
BENCHMARK(BM_PartitionParallel);

void BM_EvaluateAll(benchmark::State& state) {
    RuleSet rules = parse_rules(
        "R1: IF sum(a * b) = 0 THEN FAIL\n"
        "R2: IF sum(a * b) <= 0.2 THEN FAIL\n"
        "R3: IF sum(a) - sum(b) > 100 THEN WARN\n");
    Dataset ds = Dataset::from_csv(synthetic_csv(static_cast<int>(state.range(0)), 20));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_all(rules, ds));
}
BENCHMARK(BM_EvaluateAll)->Arg(20)->Arg(100);

void BM_ReportJson(benchmark::State& state) {
    RuleSet rules = parse_rules(synthetic_rules(48));
    PartitionReport report = partition(rules, PartitionOptions{});
    for (auto _ : state) benchmark::DoNotOptimize(report_json(report));
}
BENCHMARK(BM_ReportJson);

}  // namespace

BENCHMARK_MAIN();
