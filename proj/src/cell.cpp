#include "tapps/cell.hpp"

#include "tapps/error.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace tapps {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownSeries: return "UnknownSeries";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::DuplicateName: return "DuplicateName";
        case ErrorKind::DuplicateSeries: return "DuplicateSeries";
        case ErrorKind::SeriesMismatch: return "SeriesMismatch";
        case ErrorKind::LabelMismatch: return "LabelMismatch";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NonNumericCell: return "NonNumericCell";
        case ErrorKind::InvalidValue: return "InvalidValue";
        case ErrorKind::LexError: return "LexError";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::CyclicInclude: return "CyclicInclude";
        case ErrorKind::FileNotFound: return "FileNotFound";
        case ErrorKind::UnknownDataFrame: return "UnknownDataFrame";
        case ErrorKind::DuplicateFrameName: return "DuplicateFrameName";
        case ErrorKind::UnknownParameterSet: return "UnknownParameterSet";
        case ErrorKind::DuplicateParameterSetName: return "DuplicateParameterSetName";
        case ErrorKind::UnknownPlugin: return "UnknownPlugin";
        case ErrorKind::EmptySlot: return "EmptySlot";
        case ErrorKind::MissingInputFrame: return "MissingInputFrame";
        case ErrorKind::PluginFailure: return "PluginFailure";
        case ErrorKind::SpawnFailure: return "SpawnFailure";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::RaggedRow: return "RaggedRow";
        case ErrorKind::EmptyFile: return "EmptyFile";
        case ErrorKind::WriteFailure: return "WriteFailure";
        case ErrorKind::FormatError: return "FormatError";
        case ErrorKind::VersionMismatch: return "VersionMismatch";
    }
    return "Error";
}

CellValue::CellValue(double value) : value_(value) {
    if (!std::isfinite(value)) {
        throw Error(ErrorKind::InvalidValue, "non-finite real value");
    }
}

std::optional<double> CellValue::to_number() const {
    switch (type()) {
        case CellType::Int: return static_cast<double>(as_int());
        case CellType::Real: return as_real();
        case CellType::Text: {
            auto parsed = parse_number(text());
            if (!parsed) return std::nullopt;
            return parsed->is_int() ? static_cast<double>(parsed->as_int()) : parsed->as_real();
        }
    }
    return std::nullopt;
}

std::string format_real(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string CellValue::render() const {
    switch (type()) {
        case CellType::Text: return text();
        case CellType::Int: return std::to_string(as_int());
        case CellType::Real: return format_real(as_real());
    }
    return {};
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Grammar: [+-]? digits ( '.' digits? )? ( [eE] [+-]? digits )?  or  [+-]? '.' digits ...
// Returns true and sets `integral` when the literal has no fraction or exponent.
bool scan_numeric(std::string_view s, bool& integral) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t int_digits = 0;
    while (i < s.size() && is_digit(s[i])) { ++i; ++int_digits; }
    std::size_t frac_digits = 0;
    integral = true;
    if (i < s.size() && s[i] == '.') {
        integral = false;
        ++i;
        while (i < s.size() && is_digit(s[i])) { ++i; ++frac_digits; }
    }
    if (int_digits + frac_digits == 0) return false;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        integral = false;
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t exp_digits = 0;
        while (i < s.size() && is_digit(s[i])) { ++i; ++exp_digits; }
        if (exp_digits == 0) return false;
    }
    return i == s.size();
}

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<CellValue> parse_number(std::string_view text) {
    auto s = trim(text);
    bool integral = false;
    if (!scan_numeric(s, integral)) return std::nullopt;
    // from_chars rejects a leading '+'
    if (s.front() == '+') s.remove_prefix(1);
    if (integral) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && ptr == s.data() + s.size()) return CellValue(v);
    }
    double d = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(d)) {
        return std::nullopt;
    }
    return CellValue(d);
}

CellValue cell_from_literal(std::string_view text) {
    if (auto n = parse_number(text)) return *n;
    return CellValue(std::string(text));
}

}  // namespace tapps
