#pragma once

#include "tapps/dataframe.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tapps {

enum class BinOp { GT, LT, GE, LE, EQ, NE };

std::string_view binop_symbol(BinOp op);
std::optional<BinOp> binop_from_symbol(std::string_view symbol);
BinOp negate(BinOp op);

enum class CastType { Alpha, NonAlpha, Float, Real, Integer };

std::string_view cast_type_name(CastType type);
std::optional<CastType> cast_type_from_name(std::string_view name);

/// Either every series of a frame or an explicit list of series names.
struct SeriesSelector {
    bool all = false;
    std::vector<std::string> names;

    static SeriesSelector every() { return {true, {}}; }
    bool operator==(const SeriesSelector&) const = default;
};

enum class Axis { Series, Labels };

/// Numeric comparison when both sides are numbers (numeric text included),
/// otherwise lexicographic comparison of the canonical renderings.
bool compare_values(const CellValue& lhs, const CellValue& rhs, BinOp op);

/// Converts the selected series in place; returns how many cells converted.
/// Cells that do not parse under a numeric cast stay as they are.
std::size_t cast_values(DataFrame& df, const SeriesSelector& selector, CastType type);

DataFrame select_all(const DataFrame& src, const std::string& new_name);
/// Rows where at least one cell satisfies `cell op value`.
DataFrame select_greedy(const DataFrame& src, const std::string& new_name, BinOp op,
                        const CellValue& value);
/// Rows whose cell in `series` satisfies `cell op value`.
DataFrame select_by_series(const DataFrame& src, const std::string& new_name,
                           const std::string& series, BinOp op, const CellValue& value);

/// Adds src's rows to dst by label. Shared labels keep dst's row unless
/// `replace` is set. Requires identical series names.
void merge_labels(const DataFrame& src, DataFrame& dst, bool replace);
/// Appends the listed series of src as new columns of dst, matched by label.
/// Requires equal label sets.
void merge_series(const std::vector<std::string>& series, const DataFrame& src, DataFrame& dst);

void rename(DataFrame& df, Axis axis, const std::string& old_name, const std::string& new_name);

/// Fills an empty frame column-wise: series are the column keys (sorted), row i
/// is labelled row_labels[i].
void add_columnar_data(DataFrame& df, const std::map<std::string, std::vector<CellValue>>& columns,
                       const std::vector<std::string>& row_labels);

struct SeriesDescription {
    std::string name;
    std::optional<double> minimum;
    std::optional<double> maximum;
    std::size_t text_count = 0;
    std::size_t int_count = 0;
    std::size_t real_count = 0;
    std::size_t unknown_count = 0;
};

struct DescriptionReport {
    std::string frame_name;
    std::vector<std::string> series_names;
    std::size_t row_count = 0;
    std::vector<SeriesDescription> series;

    std::string render() const;
};

DescriptionReport describe(const DataFrame& df);

/// The four-line summary block used by SHOW DATAFRAME and describe.
std::string frame_header(const DataFrame& df);

}  // namespace tapps
