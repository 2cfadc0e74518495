#include "ruleprune/dataset.hpp"

#include "ruleprune/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace ruleprune {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    size_t pos = 0;
    while (true) {
        size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(pos)));
            break;
        }
        cells.push_back(trim(line.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return cells;
}

}  // namespace

Dataset Dataset::from_csv(std::string_view text) {
    Dataset ds;
    std::vector<std::string_view> lines;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw DatasetFormatError(1, "empty file (header required)");

    auto header = split_csv_line(lines[0]);
    const std::vector<std::string> key_columns = {"fund_id", "date", "position_id",
                                                  "asset_class"};
    std::map<std::string, int> key_index;
    std::vector<int> param_source;  // csv column index per parameter column
    for (size_t i = 0; i < header.size(); ++i) {
        const std::string& name = header[i];
        if (name.empty()) throw DatasetFormatError(1, "empty column name in header");
        if (std::find(key_columns.begin(), key_columns.end(), name) != key_columns.end()) {
            if (key_index.count(name))
                throw DatasetFormatError(1, "key column '" + name + "' appears twice");
            key_index[name] = static_cast<int>(i);
        } else {
            ds.param_columns_.push_back(name);
            param_source.push_back(static_cast<int>(i));
        }
    }
    for (const auto& k : key_columns)
        if (!key_index.count(k)) throw MissingKeyColumnError(k);

    std::set<std::tuple<std::string, Date, std::string>> seen_keys;
    for (size_t li = 1; li < lines.size(); ++li) {
        int line_no = static_cast<int>(li) + 1;
        if (trim(lines[li]).empty()) continue;
        auto cells = split_csv_line(lines[li]);
        if (cells.size() != header.size())
            throw DatasetFormatError(line_no,
                                     "expected " + std::to_string(header.size()) + " cells, got "
                                         + std::to_string(cells.size()));
        PositionRow row;
        row.fund_id = cells[key_index["fund_id"]];
        row.position_id = cells[key_index["position_id"]];
        row.asset_class = cells[key_index["asset_class"]];
        if (row.fund_id.empty()) throw DatasetFormatError(line_no, "empty fund_id");
        if (row.position_id.empty()) throw DatasetFormatError(line_no, "empty position_id");
        const std::string& date_cell = cells[key_index["date"]];
        auto date = Date::parse(date_cell);
        if (!date)
            throw DatasetFormatError(line_no, "bad date '" + date_cell + "' (want YYYY-MM-DD)");
        row.date = *date;
        if (!seen_keys.insert({row.fund_id, row.date, row.position_id}).second)
            throw DuplicatePositionKeyError(line_no, row.fund_id, row.date.str(),
                                            row.position_id);
        row.values.reserve(ds.param_columns_.size());
        for (size_t p = 0; p < ds.param_columns_.size(); ++p) {
            const std::string& cell = cells[param_source[p]];
            if (cell.empty()) {
                row.values.push_back(std::nullopt);
                continue;
            }
            auto v = Decimal::parse(cell);
            if (!v) throw BadDecimalError(line_no, ds.param_columns_[p], cell);
            row.values.push_back(*v);
        }
        ds.rows_.push_back(std::move(row));
    }

    std::map<GroupKey, std::vector<size_t>> grouped;
    for (size_t i = 0; i < ds.rows_.size(); ++i)
        grouped[{ds.rows_[i].fund_id, ds.rows_[i].date}].push_back(i);
    for (auto& [key, idx] : grouped) ds.groups_.push_back({key, std::move(idx)});
    return ds;
}

int Dataset::column_index(const std::string& name) const {
    for (size_t i = 0; i < param_columns_.size(); ++i)
        if (param_columns_[i] == name) return static_cast<int>(i);
    return -1;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DatasetFormatError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return Dataset::from_csv(buf.str());
}

}  // namespace ruleprune
