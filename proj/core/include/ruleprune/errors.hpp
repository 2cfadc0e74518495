#pragma once

#include <stdexcept>
#include <string>

namespace ruleprune {

/// Base class for every domain error raised by the library.
class RuleError : public std::runtime_error {
public:
    explicit RuleError(const std::string& msg) : std::runtime_error(msg) {}
};

class SyntaxError : public RuleError {
public:
    SyntaxError(int line, int column, std::string expected, std::string got)
        : RuleError("syntax error at line " + std::to_string(line) + ", column "
                    + std::to_string(column) + ": expected " + expected
                    + (got.empty() ? "" : ", got " + got)),
          line_(line), column_(column), expected_(std::move(expected)) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    int line_;
    int column_;
    std::string expected_;
};

class DuplicateRuleIdError : public RuleError {
public:
    explicit DuplicateRuleIdError(std::string id)
        : RuleError("duplicate rule id '" + id + "'"), id_(std::move(id)) {}

    const std::string& id() const { return id_; }

private:
    std::string id_;
};

class UnknownContextKeywordError : public RuleError {
public:
    UnknownContextKeywordError(int line, int column, std::string token)
        : RuleError("unknown context keyword '" + token + "' at line " + std::to_string(line)
                    + ", column " + std::to_string(column)),
          token_(std::move(token)) {}

    const std::string& token() const { return token_; }

private:
    std::string token_;
};

class InvalidPeriodError : public RuleError {
public:
    InvalidPeriodError(std::string start, std::string end)
        : RuleError("invalid period: end " + end + " is before start " + start) {}
};

class UnknownRuleIdError : public RuleError {
public:
    explicit UnknownRuleIdError(std::string id)
        : RuleError("unknown rule id '" + id + "'"), id_(std::move(id)) {}

    const std::string& id() const { return id_; }

private:
    std::string id_;
};

// Dataset ingestion errors.

class MissingKeyColumnError : public RuleError {
public:
    explicit MissingKeyColumnError(std::string column)
        : RuleError("dataset is missing key column '" + column + "'"), column_(std::move(column)) {}

    const std::string& column() const { return column_; }

private:
    std::string column_;
};

class DuplicatePositionKeyError : public RuleError {
public:
    DuplicatePositionKeyError(int line, const std::string& fund, const std::string& date,
                              const std::string& position)
        : RuleError("duplicate position key (" + fund + ", " + date + ", " + position
                    + ") at line " + std::to_string(line)),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class BadDecimalError : public RuleError {
public:
    BadDecimalError(int line, std::string column, const std::string& cell)
        : RuleError("bad decimal '" + cell + "' at line " + std::to_string(line) + ", column '"
                    + column + "'"),
          line_(line), column_(std::move(column)) {}

    int line() const { return line_; }
    const std::string& column() const { return column_; }

private:
    int line_;
    std::string column_;
};

class DatasetFormatError : public RuleError {
public:
    DatasetFormatError(int line, const std::string& what)
        : RuleError("dataset format error at line " + std::to_string(line) + ": " + what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Evaluation / value-check errors.

class UnknownParameterError : public RuleError {
public:
    UnknownParameterError(std::string rule_id, std::string parameter)
        : RuleError("rule '" + rule_id + "' references parameter '" + parameter
                    + "' with no matching dataset column"),
          rule_id_(std::move(rule_id)), parameter_(std::move(parameter)) {}

    const std::string& rule_id() const { return rule_id_; }
    const std::string& parameter() const { return parameter_; }

private:
    std::string rule_id_;
    std::string parameter_;
};

class ValueCheckDataMissingError : public RuleError {
public:
    ValueCheckDataMissingError()
        : RuleError("empirical value check requested but no dataset was supplied") {}
};

}  // namespace ruleprune
