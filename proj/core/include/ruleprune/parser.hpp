#pragma once

#include "ruleprune/rule.hpp"

#include <string>
#include <string_view>

namespace ruleprune {

/// Parses a whole rules file. One rule per line; blank lines and `#` comments
/// ignored. Grammar:
///
///   rule   := ID ":" "IF" expr relop number "THEN" ("FAIL"|"WARN")
///             [ "CONTEXT" atom { "AND" atom } ]
///   expr   := term { ("+"|"-") term }
///   term   := factor { ("*"|"/") factor }
///   factor := "sum" "(" expr ")" | param | number | "(" expr ")"
///   atom   := "class" "=" ID { "," ID }
///           | "ccy" "=" ("local" | "base" | ISO-4217)
///           | "period" "=" "[" YYYY-MM-DD "," YYYY-MM-DD "]"
///
/// Throws SyntaxError, DuplicateRuleIdError, UnknownContextKeywordError,
/// InvalidPeriodError.
RuleSet parse_rules(std::string_view source);

/// Parses a standalone expression (line 1 for error positions).
ExprPtr parse_expression(std::string_view text);

/// Parses a standalone context clause, e.g. "class=equity AND ccy=local".
Context parse_context(std::string_view text);

/// One-line DSL text for the rule; parse_rules(format_rule(r)) round-trips
/// rules whose bodies have parser shape (binary ADD/MUL).
std::string format_rule(const Rule& rule);

/// Infix form of a body expression with minimal parentheses.
std::string format_expression(const ExprPtr& e);

}  // namespace ruleprune
