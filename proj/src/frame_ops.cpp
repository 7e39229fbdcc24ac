#include "tapps/frame_ops.hpp"

#include "tapps/error.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace tapps {

std::string_view binop_symbol(BinOp op) {
    switch (op) {
        case BinOp::GT: return ">";
        case BinOp::LT: return "<";
        case BinOp::GE: return ">=";
        case BinOp::LE: return "<=";
        case BinOp::EQ: return "==";
        case BinOp::NE: return "!=";
    }
    return "?";
}

std::optional<BinOp> binop_from_symbol(std::string_view symbol) {
    if (symbol == ">") return BinOp::GT;
    if (symbol == "<") return BinOp::LT;
    if (symbol == ">=") return BinOp::GE;
    if (symbol == "<=") return BinOp::LE;
    if (symbol == "==") return BinOp::EQ;
    if (symbol == "!=") return BinOp::NE;
    return std::nullopt;
}

BinOp negate(BinOp op) {
    switch (op) {
        case BinOp::GT: return BinOp::LE;
        case BinOp::LT: return BinOp::GE;
        case BinOp::GE: return BinOp::LT;
        case BinOp::LE: return BinOp::GT;
        case BinOp::EQ: return BinOp::NE;
        case BinOp::NE: return BinOp::EQ;
    }
    return op;
}

std::string_view cast_type_name(CastType type) {
    switch (type) {
        case CastType::Alpha: return "alpha";
        case CastType::NonAlpha: return "nonalpha";
        case CastType::Float: return "float";
        case CastType::Real: return "real";
        case CastType::Integer: return "integer";
    }
    return "?";
}

std::optional<CastType> cast_type_from_name(std::string_view name) {
    for (auto t : {CastType::Alpha, CastType::NonAlpha, CastType::Float, CastType::Real,
                   CastType::Integer}) {
        if (cast_type_name(t) == name) return t;
    }
    return std::nullopt;
}

namespace {

std::optional<CellValue> numeric_view(const CellValue& v) {
    if (v.is_int() || v.is_real()) return v;
    return parse_number(v.text());
}

template <typename T>
bool apply(T lhs, T rhs, BinOp op) {
    switch (op) {
        case BinOp::GT: return lhs > rhs;
        case BinOp::LT: return lhs < rhs;
        case BinOp::GE: return lhs >= rhs;
        case BinOp::LE: return lhs <= rhs;
        case BinOp::EQ: return lhs == rhs;
        case BinOp::NE: return lhs != rhs;
    }
    return false;
}

double as_double(const CellValue& v) {
    return v.is_int() ? static_cast<double>(v.as_int()) : v.as_real();
}

std::optional<CellValue> truncate_to_int(double d) {
    double t = std::trunc(d);
    if (t >= -9223372036854775808.0 && t < 9223372036854775808.0) {
        return CellValue(static_cast<std::int64_t>(t));
    }
    return std::nullopt;
}

bool nonalpha_keep(char c) {
    return (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E';
}

std::optional<CellValue> convert(const CellValue& cell, CastType type) {
    switch (type) {
        case CastType::Alpha:
            return CellValue(cell.render());
        case CastType::Integer: {
            auto num = numeric_view(cell);
            if (!num) return std::nullopt;
            if (num->is_int()) return num;
            return truncate_to_int(num->as_real());
        }
        case CastType::Float:
        case CastType::Real: {
            auto num = numeric_view(cell);
            if (!num) return std::nullopt;
            return CellValue(as_double(*num));
        }
        case CastType::NonAlpha: {
            // already numeric: keep the value (and its type) as is
            if (!cell.is_text()) return cell;
            std::string stripped;
            for (char c : cell.render()) {
                if (nonalpha_keep(c)) stripped.push_back(c);
            }
            return parse_number(stripped);
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> resolve(const DataFrame& df, const SeriesSelector& selector) {
    std::vector<std::size_t> columns;
    if (selector.all) {
        for (std::size_t i = 0; i < df.series_count(); ++i) columns.push_back(i);
        return columns;
    }
    for (const auto& name : selector.names) {
        columns.push_back(df.require_series(name));
    }
    return columns;
}

template <typename Pred>
DataFrame filter_rows(const DataFrame& src, const std::string& new_name, Pred keep) {
    DataFrame out(new_name, src.series_names());
    for (std::size_t r = 0; r < src.row_count(); ++r) {
        if (keep(src.row(r))) out.add_row(src.labels()[r], src.row(r));
    }
    return out;
}

}  // namespace

bool compare_values(const CellValue& lhs, const CellValue& rhs, BinOp op) {
    auto a = numeric_view(lhs);
    auto b = numeric_view(rhs);
    if (a && b) {
        if (a->is_int() && b->is_int()) return apply(a->as_int(), b->as_int(), op);
        return apply(as_double(*a), as_double(*b), op);
    }
    return apply(lhs.render(), rhs.render(), op);
}

std::size_t cast_values(DataFrame& df, const SeriesSelector& selector, CastType type) {
    auto columns = resolve(df, selector);
    std::size_t converted = 0;
    for (std::size_t r = 0; r < df.row_count(); ++r) {
        for (auto c : columns) {
            if (auto v = convert(df.at(r, c), type)) {
                df.at(r, c) = std::move(*v);
                ++converted;
            }
        }
    }
    return converted;
}

DataFrame select_all(const DataFrame& src, const std::string& new_name) {
    DataFrame copy = src;
    copy.set_name(new_name);
    return copy;
}

DataFrame select_greedy(const DataFrame& src, const std::string& new_name, BinOp op,
                        const CellValue& value) {
    return filter_rows(src, new_name, [&](const Row& row) {
        for (const auto& cell : row) {
            if (compare_values(cell, value, op)) return true;
        }
        return false;
    });
}

DataFrame select_by_series(const DataFrame& src, const std::string& new_name,
                           const std::string& series, BinOp op, const CellValue& value) {
    auto column = src.require_series(series);
    return filter_rows(src, new_name,
                       [&](const Row& row) { return compare_values(row[column], value, op); });
}

void merge_labels(const DataFrame& src, DataFrame& dst, bool replace) {
    if (src.series_names() != dst.series_names()) {
        throw Error(ErrorKind::SeriesMismatch, "cannot merge labels of '" + src.name() +
                                                   "' into '" + dst.name() +
                                                   "': series names differ");
    }
    for (std::size_t r = 0; r < src.row_count(); ++r) {
        const auto& label = src.labels()[r];
        if (auto existing = dst.label_index(label)) {
            if (replace) dst.replace_row(*existing, src.row(r));
        } else {
            dst.add_row(label, src.row(r));
        }
    }
}

void merge_series(const std::vector<std::string>& series, const DataFrame& src, DataFrame& dst) {
    if (series.empty()) return;
    std::set<std::string> seen;
    std::vector<std::size_t> columns;
    for (const auto& name : series) {
        columns.push_back(src.require_series(name));
        if (dst.series_index(name) || !seen.insert(name).second) {
            throw Error(ErrorKind::DuplicateSeries,
                        "series '" + name + "' already exists in data frame '" + dst.name() + "'");
        }
    }
    bool same_labels = src.row_count() == dst.row_count();
    for (std::size_t r = 0; same_labels && r < dst.row_count(); ++r) {
        same_labels = src.has_label(dst.labels()[r]);
    }
    if (!same_labels) {
        throw Error(ErrorKind::LabelMismatch, "data frames '" + src.name() + "' and '" +
                                                  dst.name() + "' have different labels");
    }
    for (std::size_t i = 0; i < series.size(); ++i) {
        std::vector<CellValue> values;
        values.reserve(dst.row_count());
        for (const auto& label : dst.labels()) {
            values.push_back(src.row(label)[columns[i]]);
        }
        dst.add_series(series[i], values);
    }
}

void rename(DataFrame& df, Axis axis, const std::string& old_name, const std::string& new_name) {
    const bool series = axis == Axis::Series;
    std::optional<std::size_t> index = series ? df.series_index(old_name) : df.label_index(old_name);
    if (!index) {
        throw Error(ErrorKind::UnknownName, std::string(series ? "series" : "label") + " '" +
                                                old_name + "' not found in data frame '" +
                                                df.name() + "'");
    }
    if (old_name == new_name) return;
    if (new_name.empty()) {
        throw Error(ErrorKind::InvalidValue, "names must be non-empty");
    }
    bool taken = series ? df.series_index(new_name).has_value() : df.has_label(new_name);
    if (taken) {
        throw Error(ErrorKind::DuplicateName, std::string(series ? "series" : "label") + " '" +
                                                  new_name + "' already exists in data frame '" +
                                                  df.name() + "'");
    }
    if (series) {
        df.rename_series(*index, new_name);
    } else {
        df.rename_label(*index, new_name);
    }
}

void add_columnar_data(DataFrame& df, const std::map<std::string, std::vector<CellValue>>& columns,
                       const std::vector<std::string>& row_labels) {
    if (!df.empty()) {
        throw Error(ErrorKind::InvalidArgument, "data frame '" + df.name() + "' is not empty");
    }
    for (const auto& [name, values] : columns) {
        if (values.size() != row_labels.size()) {
            throw Error(ErrorKind::LengthMismatch,
                        "column '" + name + "' has " + std::to_string(values.size()) +
                            " values for " + std::to_string(row_labels.size()) + " labels");
        }
    }
    DataFrame built(df.name());
    for (const auto& [name, values] : columns) {
        built.add_series(name, {});
    }
    for (std::size_t i = 0; i < row_labels.size(); ++i) {
        Row row;
        row.reserve(columns.size());
        for (const auto& [name, values] : columns) row.push_back(values[i]);
        built.add_row(row_labels[i], std::move(row));
    }
    df = std::move(built);
}

DescriptionReport describe(const DataFrame& df) {
    DescriptionReport report;
    report.frame_name = df.name();
    report.series_names = df.series_names();
    report.row_count = df.row_count();
    for (std::size_t c = 0; c < df.series_count(); ++c) {
        SeriesDescription sd;
        sd.name = df.series_names()[c];
        for (std::size_t r = 0; r < df.row_count(); ++r) {
            const auto& cell = df.at(r, c);
            switch (cell.type()) {
                case CellType::Text: ++sd.text_count; break;
                case CellType::Int: ++sd.int_count; break;
                case CellType::Real: ++sd.real_count; break;
            }
            if (auto n = cell.to_number()) {
                sd.minimum = sd.minimum ? std::min(*sd.minimum, *n) : *n;
                sd.maximum = sd.maximum ? std::max(*sd.maximum, *n) : *n;
            }
        }
        report.series.push_back(std::move(sd));
    }
    return report;
}

namespace {

std::string join(const std::vector<std::string>& items, char sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out.push_back(sep);
        out += items[i];
    }
    return out;
}

}  // namespace

std::string frame_header(const DataFrame& df) {
    std::ostringstream os;
    os << "Dataframe Name: " << df.name() << '\n'
       << "Series Names: " << join(df.series_names(), ',') << '\n'
       << "Number of Series: " << df.series_count() << '\n'
       << "Number of Labels (data rows): " << df.row_count() << '\n';
    return os.str();
}

std::string DescriptionReport::render() const {
    std::ostringstream os;
    os << "Describing Dataframe - " << frame_name << '\n'
       << "Series Names: " << join(series_names, ',') << '\n'
       << "Number of Series: " << series_names.size() << '\n'
       << "Number of Labels (data rows): " << row_count << '\n';
    for (const auto& s : series) {
        os << '\n' << "Series Name - " << s.name << '\n';
        if (s.minimum) os << "Minimum value in " << s.name << ": " << format_real(*s.minimum) << '\n';
        if (s.maximum) os << "Maximum value in " << s.name << ": " << format_real(*s.maximum) << '\n';
        os << "Number of string data type values: " << s.text_count << '\n'
           << "Number of integer data type values: " << s.int_count << '\n'
           << "Number of float data type values: " << s.real_count << '\n'
           << "Number of unknown data type values: " << s.unknown_count << '\n';
    }
    return os.str();
}

}  // namespace tapps
