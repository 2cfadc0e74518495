#pragma once

#include "ruleprune/date.hpp"
#include "ruleprune/decimal.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ruleprune {

/// One (fund, date) snapshot: the population a SUM aggregates over.
struct GroupKey {
    std::string fund_id;
    Date date;

    auto operator<=>(const GroupKey&) const = default;
    std::string str() const { return fund_id + "/" + date.str(); }
};

struct PositionRow {
    std::string fund_id;
    Date date;
    std::string position_id;
    std::string asset_class;
    /// Aligned with Dataset::param_columns(); empty cell = missing.
    std::vector<std::optional<Decimal>> values;
};

/// Positions table keyed by (fund_id, date, position_id) with derived
/// (fund_id, date) groups, sorted by key.
class Dataset {
public:
    struct Group {
        GroupKey key;
        std::vector<size_t> row_indices;
    };

    /// Parses positions CSV text. Header required; key columns
    /// fund_id,date,position_id,asset_class in any order; every other column
    /// is a decimal parameter. Throws MissingKeyColumnError,
    /// DuplicatePositionKeyError, BadDecimalError, DatasetFormatError.
    static Dataset from_csv(std::string_view text);

    const std::vector<std::string>& param_columns() const { return param_columns_; }
    const std::vector<PositionRow>& rows() const { return rows_; }
    const std::vector<Group>& groups() const { return groups_; }

    /// Index into param_columns(), or -1.
    int column_index(const std::string& name) const;

private:
    std::vector<std::string> param_columns_;
    std::vector<PositionRow> rows_;
    std::vector<Group> groups_;
};

/// Reads the file then parses; file errors surface as DatasetFormatError
/// with line 0.
Dataset load_dataset(const std::string& path);

}  // namespace ruleprune
