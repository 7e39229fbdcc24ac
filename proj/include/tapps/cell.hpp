#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace tapps {

enum class CellType { Text, Int, Real };

/// A single data element: text, a signed integer, or a finite real.
class CellValue {
public:
    CellValue() : value_(std::string{}) {}
    CellValue(std::string text) : value_(std::move(text)) {}
    CellValue(const char* text) : value_(std::string(text)) {}
    CellValue(std::int64_t value) : value_(value) {}
    CellValue(int value) : value_(static_cast<std::int64_t>(value)) {}
    /// Throws Error(InvalidValue) when value is NaN or infinite.
    CellValue(double value);

    CellType type() const noexcept { return static_cast<CellType>(value_.index()); }
    bool is_text() const noexcept { return type() == CellType::Text; }
    bool is_int() const noexcept { return type() == CellType::Int; }
    bool is_real() const noexcept { return type() == CellType::Real; }

    const std::string& text() const { return std::get<std::string>(value_); }
    std::int64_t as_int() const { return std::get<std::int64_t>(value_); }
    double as_real() const { return std::get<double>(value_); }

    /// Numeric view: Int and Real directly, Text when it parses fully as a number.
    std::optional<double> to_number() const;

    /// Canonical rendering: Int in decimal, Real in shortest round-trip form,
    /// Text verbatim.
    std::string render() const;

    bool operator==(const CellValue&) const = default;

private:
    std::variant<std::string, std::int64_t, double> value_;
};

/// Parses a complete numeric literal (surrounding whitespace allowed). Integral
/// literals that fit in 64 bits become Int, everything else numeric becomes
/// Real. Returns nullopt for non-numbers, NaN/Inf spellings and overflow.
std::optional<CellValue> parse_number(std::string_view text);

/// Interprets a literal as written in a statement: numbers become numeric
/// cells, anything else Text.
CellValue cell_from_literal(std::string_view text);

std::string format_real(double value);

}  // namespace tapps
