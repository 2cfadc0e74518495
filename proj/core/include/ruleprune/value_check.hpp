#pragma once

#include "ruleprune/evaluate.hpp"
#include "ruleprune/rule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ruleprune {

enum class WitnessKind { ContainedBy, DuplicateOf, ValueImpliedBy };

const char* witness_kind_name(WitnessKind k);

/// Why a rule landed in the correlated set. ContainedBy/DuplicateOf name
/// exactly one rule; ValueImpliedBy names one or more.
struct Witness {
    WitnessKind kind = WitnessKind::ContainedBy;
    std::vector<std::string> by;
    std::string detail;

    bool operator==(const Witness&) const = default;
};

struct ValueCheckConfig {
    enum class Mode { Off, Symbolic, Empirical, Both };

    Mode mode = Mode::Symbolic;
    /// Minimum observed failures of the candidate rule before an empirical
    /// verdict is allowed.
    int min_support = 1;
};

ValueCheckConfig::Mode value_check_mode_from_name(const std::string& name);
const char* value_check_mode_name(ValueCheckConfig::Mode m);

/// True iff every value satisfying pi also satisfies pj, decided by case
/// analysis on the two operators and thresholds.
bool predicate_implies(const Predicate& pi, const Predicate& pj);

enum class ValueCheckFired { None, Symbolic, Empirical };

struct ValueCheckResult {
    std::optional<Witness> witness;
    ValueCheckFired fired = ValueCheckFired::None;
    /// Why no witness was produced (e.g. "insufficient support").
    std::string note;
};

/// First rule (by id order) among others with the same canonical body, a
/// covering context, and an implied predicate.
std::optional<Witness> value_check_symbolic(const Rule& ri,
                                            const std::vector<const Rule*>& others);

/// ri is implied when every group where ri FAILs has at least one FAIL among
/// others, with at least min_support failing groups observed.
ValueCheckResult value_check_empirical(const Rule& ri, const std::vector<const Rule*>& others,
                                       const OutcomeMatrix& matrix, int min_support);

/// Dispatch per config; Both tries symbolic first. Throws
/// ValueCheckDataMissingError when an empirical check has no matrix.
ValueCheckResult value_check(const Rule& ri, const std::vector<const Rule*>& others,
                             const ValueCheckConfig& config, const OutcomeMatrix* matrix);

}  // namespace ruleprune
