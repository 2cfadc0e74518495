#pragma once

#include "ruleprune/canonical.hpp"
#include "ruleprune/rule.hpp"

namespace ruleprune {

enum class ContainmentMode { Strict, AcEmbed };

const char* containment_mode_name(ContainmentMode m);

/// Proper containment of candidate inside container.
///
/// Strict: candidate equals a rooted subtree of container other than the
/// container itself. AcEmbed additionally matches an ADD/MUL candidate whose
/// children form a proper sub-multiset (size >= 2) of a same-kind node's
/// children anywhere in the container.
bool contains(const CanonicalTree& container, const CanonicalTree& candidate,
              ContainmentMode mode);

/// True when outer applies everywhere inner does: outer classes are a
/// superset (absent set = all classes), currency scopes match exactly or
/// outer is unrestricted, and outer's window contains inner's.
bool context_covers(const Context& outer, const Context& inner);

enum class RelationKind { None, IInJ, JInI, Equal };

const char* relation_kind_name(RelationKind k);

/// Def-style relationship between two rules' bodies with context gating.
/// Equal requires equal canonical bodies and mutually covering contexts;
/// equal bodies with incomparable contexts relate as None.
RelationKind relate(const Rule& ri, const Rule& rj, ContainmentMode mode);

/// Same as relate() with canonical bodies precomputed by the caller.
RelationKind relate_canonical(const CanonicalTree& ti, const Context& ci,
                              const CanonicalTree& tj, const Context& cj,
                              ContainmentMode mode);

}  // namespace ruleprune
