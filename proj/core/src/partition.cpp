#include "ruleprune/partition.hpp"

#include "ruleprune/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace ruleprune {

std::string percent_string(size_t part, size_t total) {
    // Tenths of a percent, rounded half to even.
    size_t tenths = 0;
    if (total > 0) {
        size_t num = part * 1000;
        tenths = num / total;
        size_t rem = num % total;
        if (2 * rem > total || (2 * rem == total && tenths % 2 == 1)) ++tenths;
    }
    return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10) + "%";
}

namespace {

struct RuleInfo {
    const Rule* rule;
    CanonicalTree body;
    std::string dup_key;
};

std::string duplicate_key(const Rule& r, const CanonicalTree& body) {
    return body.print() + "|" + r.context.str() + "|" + r.predicate.str() + "|"
        + action_name(r.action);
}

std::vector<RuleInfo> build_infos(const std::vector<Rule>& rules) {
    std::vector<RuleInfo> infos;
    infos.reserve(rules.size());
    for (const auto& r : rules) {
        CanonicalTree t = CanonicalTree::of(r.body);
        std::string key = duplicate_key(r, t);
        infos.push_back({&r, std::move(t), std::move(key)});
    }
    return infos;
}

// contained[i][j] = rule j's body properly inside rule i's body, with rule
// i's context covering rule j's.
std::vector<char> containment_table(const std::vector<RuleInfo>& infos, ContainmentMode mode,
                                    bool parallel) {
    const size_t n = infos.size();
    std::vector<char> table(n * n, 0);
    auto fill_row = [&](size_t i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (contains(infos[i].body, infos[j].body, mode)
                && context_covers(infos[i].rule->context, infos[j].rule->context))
                table[i * n + j] = 1;
        }
    };
    unsigned hw = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    if (hw <= 1 || n < 2 * static_cast<size_t>(hw)) {
        for (size_t i = 0; i < n; ++i) fill_row(i);
    } else {
        std::vector<std::thread> workers;
        size_t chunk = (n + hw - 1) / hw;
        for (unsigned t = 0; t < hw; ++t) {
            size_t begin = t * chunk;
            size_t end = std::min(n, begin + chunk);
            if (begin >= end) break;
            workers.emplace_back([&, begin, end] {
                for (size_t i = begin; i < end; ++i) fill_row(i);
            });
        }
        for (auto& w : workers) w.join();
    }
    return table;
}

std::map<std::string, std::vector<std::string>> duplicate_groups(
    const std::vector<RuleInfo>& infos) {
    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& info : infos) groups[info.dup_key].push_back(info.rule->id);
    for (auto& [key, ids] : groups) std::sort(ids.begin(), ids.end());
    return groups;
}

}  // namespace

std::vector<std::vector<std::string>> duplicates(const RuleSet& rules) {
    auto infos = build_infos(rules.rules());
    std::vector<std::vector<std::string>> out;
    for (auto& [key, ids] : duplicate_groups(infos))
        if (ids.size() >= 2) out.push_back(ids);
    std::sort(out.begin(), out.end());
    return out;
}

bool classify_core(const Rule& rule, const RuleSet& rules, ContainmentMode mode) {
    auto infos = build_infos(rules.rules());
    const RuleInfo* self = nullptr;
    for (const auto& info : infos)
        if (info.rule->id == rule.id) self = &info;
    if (!self) throw UnknownRuleIdError(rule.id);

    for (const auto& info : infos)
        if (info.dup_key == self->dup_key && info.rule->id < rule.id) return false;
    if (self->body.height() == 1) return true;
    for (const auto& info : infos) {
        if (info.rule->id == rule.id) continue;
        if (contains(self->body, info.body, mode)
            && context_covers(rule.context, info.rule->context))
            return false;
    }
    return true;
}

PartitionReport partition(const RuleSet& rules, const PartitionOptions& options) {
    const auto& rule_list = rules.rules();
    const size_t n = rule_list.size();
    auto infos = build_infos(rule_list);
    auto contained = containment_table(infos, options.mode, options.parallel);
    auto dup_groups = duplicate_groups(infos);

    PartitionReport report;
    report.mode = options.mode;
    for (const auto& info : infos) report.rules.push_back(info.rule->id);
    std::sort(report.rules.begin(), report.rules.end());

    // Containment phase: core unless a smaller-id duplicate exists or some
    // other rule's body sits properly inside this one.
    std::vector<bool> is_core(n, false);
    std::map<std::string, CorrelatedEntry> correlated;
    for (size_t i = 0; i < n; ++i) {
        const RuleInfo& info = infos[i];
        const std::string& survivor = dup_groups.at(info.dup_key).front();
        bool duplicate_loser = survivor != info.rule->id;
        bool contains_other = false;
        for (size_t j = 0; j < n && !contains_other; ++j)
            if (contained[i * n + j]) contains_other = true;
        is_core[i] = !duplicate_loser && (info.body.height() == 1 || !contains_other);

        if (is_core[i]) continue;
        CorrelatedEntry entry;
        entry.id = info.rule->id;
        if (duplicate_loser) {
            Witness w;
            w.kind = WitnessKind::DuplicateOf;
            w.by = {survivor};
            w.detail = "identical body, context, predicate and action";
            entry.witnesses.push_back(std::move(w));
        }
        if (info.body.height() > 1) {
            for (size_t j = 0; j < n; ++j) {
                if (!contained[i * n + j]) continue;
                Witness w;
                w.kind = WitnessKind::ContainedBy;
                w.by = {infos[j].rule->id};
                w.detail = contains(infos[i].body, infos[j].body, ContainmentMode::Strict)
                    ? "strict subtree"
                    : "ac-embedded sub-multiset";
                entry.witnesses.push_back(std::move(w));
            }
        }
        std::sort(entry.witnesses.begin(), entry.witnesses.end(),
                  [](const Witness& a, const Witness& b) {
                      if (a.by != b.by) return a.by < b.by;
                      return a.kind < b.kind;
                  });
        correlated[entry.id] = std::move(entry);
    }

    // Value-check phase against the immutable containment-phase core
    // snapshot; all positives move at once.
    std::vector<size_t> core_snapshot;
    for (size_t i = 0; i < n; ++i)
        if (is_core[i]) core_snapshot.push_back(i);

    std::vector<Edge> value_edges;
    if (options.value_check.mode != ValueCheckConfig::Mode::Off && !core_snapshot.empty()) {
        std::optional<OutcomeMatrix> matrix;
        bool needs_data = options.value_check.mode == ValueCheckConfig::Mode::Empirical
            || options.value_check.mode == ValueCheckConfig::Mode::Both;
        if (needs_data) {
            if (!options.dataset) throw ValueCheckDataMissingError();
            std::vector<const Rule*> core_rules;
            core_rules.reserve(core_snapshot.size());
            for (size_t i : core_snapshot) core_rules.push_back(infos[i].rule);
            matrix = evaluate_matrix(core_rules, *options.dataset, options.parallel);
        }
        // Sorted by id for a deterministic sweep.
        std::vector<size_t> order = core_snapshot;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return infos[a].rule->id < infos[b].rule->id; });
        for (size_t i : order) {
            std::vector<const Rule*> others;
            for (size_t j : core_snapshot)
                if (j != i) others.push_back(infos[j].rule);
            ValueCheckResult res = value_check(*infos[i].rule, others, options.value_check,
                                               matrix ? &*matrix : nullptr);
            if (!res.witness) continue;
            is_core[i] = false;
            const char* kind =
                res.fired == ValueCheckFired::Symbolic ? "value-symbolic" : "value-empirical";
            for (const auto& by : res.witness->by)
                value_edges.push_back({by, infos[i].rule->id, kind});
            CorrelatedEntry entry;
            entry.id = infos[i].rule->id;
            entry.witnesses.push_back(std::move(*res.witness));
            correlated[entry.id] = std::move(entry);
        }
    }

    for (size_t i = 0; i < n; ++i)
        if (is_core[i]) report.core.push_back(infos[i].rule->id);
    std::sort(report.core.begin(), report.core.end());
    for (auto& [id, entry] : correlated) report.correlated.push_back(std::move(entry));

    for (auto& [key, ids] : dup_groups)
        if (ids.size() >= 2) report.duplicates.push_back(ids);
    std::sort(report.duplicates.begin(), report.duplicates.end());

    for (const auto& entry : report.correlated)
        for (const auto& w : entry.witnesses)
            if (w.kind == WitnessKind::ContainedBy)
                report.edges.push_back({w.by.front(), entry.id, "containment"});
    report.edges.insert(report.edges.end(), value_edges.begin(), value_edges.end());
    std::sort(report.edges.begin(), report.edges.end());

    report.stats.total = n;
    report.stats.core = report.core.size();
    report.stats.correlated = report.correlated.size();
    report.stats.correlated_pct = percent_string(report.stats.correlated, n);
    return report;
}

}  // namespace ruleprune
