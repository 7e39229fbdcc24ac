#pragma once

#include "tapps/dataframe.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tapps {

struct Environment;

struct CsvRecord {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based line the record starts on
};

/// Splits text into records. Double-quoted fields may contain the separator,
/// doubled quotes and line breaks; CRLF and LF both end a record. Empty lines
/// produce no record. Throws Error(FormatError) for an unterminated quote.
std::vector<CsvRecord> read_csv_records(std::string_view text, char separator);

struct CsvOptions {
    bool has_header = true;
    char separator = ',';
    std::optional<CellValue> fillin;  // pads short records when set
};

/// Builds a frame from CSV text. Every cell is Text. Labels are the 1-based
/// record numbers; without a header, series are named "1".."k".
/// Throws EmptyFile, RaggedRow, DuplicateSeries or InvalidValue.
DataFrame parse_csv(std::string_view text, const CsvOptions& options, const std::string& frame_name);

/// One record with fields quoted where needed, newline-terminated.
std::string format_csv_record(const std::vector<std::string>& fields, char separator);

/// Header record of series names, then one record per row.
std::string format_csv(const DataFrame& df, char separator);

/// Reads a file resolved against env.cwd. Throws FileNotFound plus the
/// parse_csv errors.
DataFrame load_csv(const std::string& file, bool has_header, const Environment& env,
                   const std::string& frame_name);

/// Throws WriteFailure.
void save_csv(const DataFrame& df, const std::string& file, const Environment& env);

/// Writes text to path, replacing any existing file. Throws WriteFailure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace tapps
