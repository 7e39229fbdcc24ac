#include "tapps/csv.hpp"

#include "tapps/error.hpp"
#include "tapps/preprocessor.hpp"
#include "tapps/session.hpp"

#include <fstream>

namespace tapps {

std::vector<CsvRecord> read_csv_records(std::string_view text, char separator) {
    std::vector<CsvRecord> records;
    CsvRecord current;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;  // anything seen on this record yet
    std::size_t line = 1;
    current.line = 1;

    auto end_field = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
    };
    auto end_record = [&] {
        if (field_started) {
            end_field();
            records.push_back(std::move(current));
        }
        current = CsvRecord{};
        field_started = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') continue;
        if (c == '\n' || c == '\r') {
            end_record();
            ++line;
            current.line = line;
            continue;
        }
        field_started = true;
        if (c == separator) {
            end_field();
        } else if (c == '"' && field.empty()) {
            in_quotes = true;
        } else {
            field.push_back(c);
        }
    }
    if (in_quotes) {
        throw Error(ErrorKind::FormatError,
                    "unterminated quoted field starting on line " + std::to_string(current.line));
    }
    end_record();
    return records;
}

DataFrame parse_csv(std::string_view text, const CsvOptions& options, const std::string& frame_name) {
    auto records = read_csv_records(text, options.separator);
    if (records.empty()) throw Error(ErrorKind::EmptyFile, "no records in CSV input");

    std::vector<std::string> series;
    std::size_t first = 0;
    if (options.has_header) {
        series = records[0].fields;
        first = 1;
    } else {
        for (std::size_t i = 1; i <= records[0].fields.size(); ++i) series.push_back(std::to_string(i));
    }
    DataFrame df(frame_name, series);
    const std::size_t width = series.size();

    for (std::size_t r = first; r < records.size(); ++r) {
        auto& fields = records[r].fields;
        if (fields.size() < width && options.fillin) {
            fields.resize(width, options.fillin->render());
        }
        if (fields.size() != width) {
            throw Error(ErrorKind::RaggedRow, "line " + std::to_string(records[r].line) + " has " +
                                                  std::to_string(fields.size()) + " fields, expected " +
                                                  std::to_string(width));
        }
        Row row;
        row.reserve(width);
        for (auto& f : fields) row.emplace_back(std::move(f));
        df.add_row(std::to_string(r - first + 1), std::move(row));
    }
    return df;
}

namespace {

std::string csv_field(const std::string& text, char separator) {
    bool quote = text.empty();
    for (char c : text) {
        if (c == separator || c == '"' || c == '\n' || c == '\r') {
            quote = true;
            break;
        }
    }
    if (!quote) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string format_csv_record(const std::vector<std::string>& fields, char separator) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(separator);
        out += csv_field(fields[i], separator);
    }
    out.push_back('\n');
    return out;
}

std::string format_csv(const DataFrame& df, char separator) {
    std::string out = format_csv_record(df.series_names(), separator);
    std::vector<std::string> fields;
    for (std::size_t r = 0; r < df.row_count(); ++r) {
        fields.clear();
        for (const auto& cell : df.row(r)) fields.push_back(cell.render());
        out += format_csv_record(fields, separator);
    }
    return out;
}

DataFrame load_csv(const std::string& file, bool has_header, const Environment& env,
                   const std::string& frame_name) {
    auto path = env.resolve(file);
    auto text = read_file(path);
    if (!text) throw Error(ErrorKind::FileNotFound, "cannot read '" + path.string() + "'");
    try {
        return parse_csv(*text, {has_header, env.separator, env.fillin}, frame_name);
    } catch (const Error& e) {
        throw Error(e.kind(), path.filename().string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::WriteFailure, "cannot write '" + path.string() + "'");
    out << text;
    out.close();
    if (!out) throw Error(ErrorKind::WriteFailure, "error writing '" + path.string() + "'");
}

void save_csv(const DataFrame& df, const std::string& file, const Environment& env) {
    write_text_file(env.resolve(file), format_csv(df, env.separator));
}

}  // namespace tapps
