#pragma once

#include "tapps/cell.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace tapps {

using Row = std::vector<CellValue>;

/// Named rectangular table. Series (columns) keep their declared order and rows
/// keep insertion order; every row has exactly one value per series and a
/// unique text label.
class DataFrame {
public:
    DataFrame() = default;
    explicit DataFrame(std::string name, std::vector<std::string> series_names = {});

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const std::vector<std::string>& series_names() const noexcept { return series_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t series_count() const noexcept { return series_.size(); }
    std::size_t row_count() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty() && series_.empty(); }

    std::optional<std::size_t> series_index(const std::string& series) const;
    /// Throws UnknownSeries.
    std::size_t require_series(const std::string& series) const;
    std::optional<std::size_t> label_index(const std::string& label) const;
    bool has_label(const std::string& label) const { return label_index(label).has_value(); }

    const Row& row(std::size_t index) const { return rows_[index]; }
    Row& row(std::size_t index) { return rows_[index]; }
    /// Throws UnknownName.
    const Row& row(const std::string& label) const;

    const CellValue& at(std::size_t row, std::size_t column) const { return rows_[row][column]; }
    CellValue& at(std::size_t row, std::size_t column) { return rows_[row][column]; }

    /// Appends a row. Throws LengthMismatch or DuplicateName.
    void add_row(std::string label, Row values);
    /// Appends a series filled with values in row order. Throws DuplicateSeries or
    /// LengthMismatch.
    void add_series(std::string series, std::span<const CellValue> values);
    /// Requires an existing label; the row keeps its position.
    void replace_row(std::size_t index, Row values);

    void rename_series(std::size_t index, std::string new_name);
    void rename_label(std::size_t index, std::string new_label);

    void clear();

    bool operator==(const DataFrame& other) const;

private:
    std::string name_;
    std::vector<std::string> series_;
    std::vector<std::string> labels_;
    std::vector<Row> rows_;
    std::unordered_map<std::string, std::size_t> label_lookup_;
};

/// The session's container of named data frames, in attachment order.
class MultiDataFrame {
public:
    bool contains(const std::string& name) const { return find(name) != nullptr; }
    const DataFrame* find(const std::string& name) const;
    DataFrame* find(const std::string& name);
    /// Throws UnknownDataFrame.
    const DataFrame& get(const std::string& name) const;
    DataFrame& get(const std::string& name);

    /// Throws DuplicateFrameName. The frame is renamed to `name`.
    void attach(const std::string& name, DataFrame frame);
    /// Replaces an existing frame in place, keeping its position.
    void replace(const std::string& name, DataFrame frame);
    /// Throws UnknownDataFrame.
    void remove(const std::string& name);
    void clear() { frames_.clear(); }

    std::size_t size() const noexcept { return frames_.size(); }
    const std::vector<DataFrame>& frames() const noexcept { return frames_; }

    bool operator==(const MultiDataFrame&) const = default;

private:
    std::vector<DataFrame> frames_;
};

}  // namespace tapps
