#include "tapps/session_file.hpp"

#include "tapps/csv.hpp"
#include "tapps/error.hpp"
#include "tapps/preprocessor.hpp"

#include <charconv>
#include <cmath>
#include <regex>

namespace fs = std::filesystem;

namespace tapps {

namespace {

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '=': out += "\\="; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::optional<std::string> unescape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '\\') {
            out.push_back(text[i]);
            continue;
        }
        if (++i == text.size()) return std::nullopt;
        switch (text[i]) {
            case '\\': out.push_back('\\'); break;
            case 'n': out.push_back('\n'); break;
            case 'r': out.push_back('\r'); break;
            case '=': out.push_back('='); break;
            default: return std::nullopt;
        }
    }
    return out;
}

std::string encode_cell(const CellValue& cell) {
    switch (cell.type()) {
        case CellType::Text: return "s:" + escape(cell.text());
        case CellType::Int: return "i:" + cell.render();
        case CellType::Real: return "r:" + cell.render();
    }
    return {};
}

std::optional<CellValue> decode_cell(std::string_view field) {
    if (field.size() < 2 || field[1] != ':') return std::nullopt;
    auto body = field.substr(2);
    switch (field[0]) {
        case 's': {
            auto text = unescape(body);
            if (!text) return std::nullopt;
            return CellValue(std::move(*text));
        }
        case 'i': {
            std::int64_t v = 0;
            auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
            if (ec != std::errc() || p != body.data() + body.size()) return std::nullopt;
            return CellValue(v);
        }
        case 'r': {
            double v = 0;
            auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
            if (ec != std::errc() || p != body.data() + body.size() || !std::isfinite(v)) {
                return std::nullopt;
            }
            return CellValue(v);
        }
        default: return std::nullopt;
    }
}

void write_frame(std::string& out, const DataFrame& df) {
    out += "[dataframe " + escape(df.name()) + "]\n";
    std::vector<std::string> fields{"@label"};
    for (const auto& s : df.series_names()) fields.push_back(escape(s));
    out += format_csv_record(fields, ',');
    for (std::size_t r = 0; r < df.row_count(); ++r) {
        fields.assign(1, escape(df.labels()[r]));
        for (const auto& cell : df.row(r)) fields.push_back(encode_cell(cell));
        auto record = format_csv_record(fields, ',');
        // a lone "[end]" label would close the block early
        if (record == "[end]\n") record = "\"[end]\"\n";
        out += record;
    }
    out += "[end]\n";
}

void write_frame_slot(std::string& out, std::string& embedded, const char* key,
                      const std::optional<DataFrame>& frame, const MultiDataFrame& mdf) {
    if (!frame) return;
    const auto* same = mdf.find(frame->name());
    if (same && *same == *frame) {
        out += std::string(key) + "=frame " + escape(frame->name()) + "\n";
        return;
    }
    out += std::string(key) + "=embedded\n";
    write_frame(embedded, *frame);
}

void write_parameters(std::string& out, const std::string& name, const ParameterSet& p,
                      const MultiDataFrame& mdf) {
    out += "[parameters " + escape(name) + "]\n";
    out += "plugin_name=" + escape(p.plugin_name()) + "\n";
    if (p.analysis_name) out += "analysis_name=" + escape(*p.analysis_name) + "\n";
    if (p.analytical_method) out += "analytical_method=" + escape(*p.analytical_method) + "\n";
    if (p.narrative) out += "narrative=" + escape(*p.narrative) + "\n";
    for (const auto& [key, value] : p.options) {
        out += "option." + escape(key) + "=" + escape(value) + "\n";
    }
    // embedded frames follow their slot line directly
    std::string embedded;
    write_frame_slot(out, embedded, "input_frame", p.input_frame, mdf);
    out += embedded;
    embedded.clear();
    write_frame_slot(out, embedded, "results_frame", p.results_frame, mdf);
    out += embedded;
    out += "[end]\n";
}

class Reader {
public:
    explicit Reader(const std::string& text) : lines_(split_lines(text)) {}

    SessionSnapshot read() {
        if (lines_.empty()) fail(1, "empty session file");
        if (lines_[0] != kSessionMagic) {
            static const std::regex tag("TAPPS-SESSION v[0-9]+");
            if (std::regex_match(lines_[0], tag)) {
                throw Error(ErrorKind::VersionMismatch,
                            "unsupported session file version '" + lines_[0].substr(14) +
                                "', expected v1");
            }
            fail(1, "not a session file (missing '" + std::string(kSessionMagic) + "')");
        }
        SessionSnapshot snap;
        bool have_environment = false;
        for (pos_ = 1; pos_ < lines_.size(); ++pos_) {
            const auto& line = lines_[pos_];
            if (line.empty()) continue;
            if (line == "[environment]") {
                if (have_environment) fail("duplicate [environment] section");
                have_environment = true;
                read_environment(snap);
            } else if (auto name = section_name(line, "[dataframe ")) {
                if (snap.mdf.contains(*name)) fail("duplicate data frame '" + *name + "'");
                snap.mdf.attach(*name, read_frame(*name));
            } else if (auto name = section_name(line, "[parameters ")) {
                if (snap.parameters.contains(*name)) fail("duplicate parameter set '" + *name + "'");
                snap.parameters.emplace(*name, read_parameters(snap.mdf));
            } else {
                fail("unexpected line '" + line + "'");
            }
        }
        if (!have_environment) fail(lines_.size(), "missing [environment] section");
        return snap;
    }

private:
    [[noreturn]] void fail(std::size_t line, const std::string& reason) const {
        throw Error(ErrorKind::FormatError, "session file line " + std::to_string(line) + ": " + reason);
    }
    [[noreturn]] void fail(const std::string& reason) const { fail(pos_ + 1, reason); }

    std::optional<std::string> section_name(const std::string& line, std::string_view prefix) const {
        if (!line.starts_with(prefix) || !line.ends_with("]") || line.size() <= prefix.size() + 1) {
            return std::nullopt;
        }
        auto name = unescape(std::string_view(line).substr(prefix.size(), line.size() - prefix.size() - 1));
        if (!name) fail("bad escape in section name");
        return name;
    }

    // Advances to the next line, failing at end of input.
    const std::string& next() {
        if (++pos_ >= lines_.size()) fail(lines_.size(), "unexpected end of file (missing [end])");
        return lines_[pos_];
    }

    std::pair<std::string, std::string> key_value(const std::string& line) const {
        std::size_t i = 0;
        for (; i < line.size(); ++i) {
            if (line[i] == '\\') {
                ++i;
            } else if (line[i] == '=') {
                break;
            }
        }
        if (i >= line.size()) fail("expected key=value");
        auto key = unescape(std::string_view(line).substr(0, i));
        auto value = unescape(std::string_view(line).substr(i + 1));
        if (!key || !value) fail("bad escape sequence");
        return {std::move(*key), std::move(*value)};
    }

    void read_environment(SessionSnapshot& snap) {
        for (const std::string* line = &next(); *line != "[end]"; line = &next()) {
            auto [key, value] = key_value(*line);
            if (key == "cwd") {
                snap.cwd = value;
            } else if (key == "separator") {
                if (value.size() != 1) fail("separator must be one character");
                snap.separator = value[0];
            } else if (key == "fillin") {
                auto cell = decode_cell(value);
                if (!cell) fail("bad fillin value");
                snap.fillin = std::move(*cell);
            } else if (key == "displayast") {
                if (value != "true" && value != "false") fail("displayast must be true or false");
                snap.display_ast = value == "true";
            } else {
                fail("unknown environment key '" + key + "'");
            }
        }
    }

    DataFrame read_frame(const std::string& name) {
        auto header = read_csv_records(next(), ',');
        if (header.size() != 1 || header[0].fields.empty() || header[0].fields[0] != "@label") {
            fail("expected '@label' header record");
        }
        std::vector<std::string> series;
        for (std::size_t i = 1; i < header[0].fields.size(); ++i) {
            auto s = unescape(header[0].fields[i]);
            if (!s) fail("bad escape in series name");
            series.push_back(std::move(*s));
        }
        try {
            DataFrame df(name, series);
            for (const std::string* line = &next(); *line != "[end]"; line = &next()) {
                auto records = read_csv_records(*line, ',');
                if (records.size() != 1 || records[0].fields.size() != series.size() + 1) {
                    fail("row must have a label and " + std::to_string(series.size()) + " cells");
                }
                auto& fields = records[0].fields;
                auto label = unescape(fields[0]);
                if (!label) fail("bad escape in label");
                Row row;
                row.reserve(series.size());
                for (std::size_t i = 1; i < fields.size(); ++i) {
                    auto cell = decode_cell(fields[i]);
                    if (!cell) fail("bad cell '" + fields[i] + "'");
                    row.push_back(std::move(*cell));
                }
                df.add_row(std::move(*label), std::move(row));
            }
            return df;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::FormatError) throw;
            fail(e.what());
        }
    }

    std::optional<DataFrame> read_frame_slot(const std::string& value, const MultiDataFrame& mdf) {
        if (value == "embedded") {
            auto name = section_name(next(), "[dataframe ");
            if (!name) fail("expected an embedded [dataframe ...] block");
            return read_frame(*name);
        }
        if (value.starts_with("frame ")) {
            const auto* df = mdf.find(value.substr(6));
            if (!df) fail("reference to unknown data frame '" + value.substr(6) + "'");
            return *df;
        }
        fail("frame slot must be 'frame <name>' or 'embedded'");
    }

    ParameterSet read_parameters(const MultiDataFrame& mdf) {
        auto [key, plugin] = key_value(next());
        if (key != "plugin_name") fail("parameter set must start with plugin_name");
        ParameterSet p(plugin);
        for (const std::string* line = &next(); *line != "[end]"; line = &next()) {
            auto [k, value] = key_value(*line);
            if (k == "analysis_name") {
                p.analysis_name = value;
            } else if (k == "analytical_method") {
                p.analytical_method = value;
            } else if (k == "narrative") {
                p.narrative = value;
            } else if (k.starts_with("option.")) {
                p.options[k.substr(7)] = value;
            } else if (k == "input_frame") {
                p.input_frame = read_frame_slot(value, mdf);
            } else if (k == "results_frame") {
                p.results_frame = read_frame_slot(value, mdf);
            } else {
                fail("unknown parameter key '" + k + "'");
            }
        }
        return p;
    }

    std::vector<std::string> lines_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string format_session(const Session& session, const Environment& env) {
    std::string out(kSessionMagic);
    out += "\n[environment]\n";
    out += "cwd=" + escape(env.cwd.string()) + "\n";
    out += "separator=" + escape(std::string(1, env.separator)) + "\n";
    if (env.fillin) out += "fillin=" + escape(encode_cell(*env.fillin)) + "\n";
    out += std::string("displayast=") + (env.display_ast ? "true" : "false") + "\n";
    out += "[end]\n";
    for (const auto& df : session.mdf.frames()) write_frame(out, df);
    for (const auto& [name, p] : session.parameters) write_parameters(out, name, p, session.mdf);
    return out;
}

SessionSnapshot parse_session(const std::string& text) { return Reader(text).read(); }

void apply_snapshot(SessionSnapshot snapshot, Session& session, Environment& env) {
    std::error_code ec;
    if (!snapshot.cwd.empty() && fs::is_directory(snapshot.cwd, ec)) env.cwd = snapshot.cwd;
    env.separator = snapshot.separator;
    env.fillin = std::move(snapshot.fillin);
    env.display_ast = snapshot.display_ast;
    session.mdf = std::move(snapshot.mdf);
    session.parameters = std::move(snapshot.parameters);
}

void save_session(const std::string& file, const Session& session, const Environment& env) {
    write_text_file(env.resolve(file), format_session(session, env));
}

void load_session(const std::string& file, Session& session, Environment& env) {
    auto path = env.resolve(file);
    auto text = read_file(path);
    if (!text) throw Error(ErrorKind::FileNotFound, "cannot read '" + path.string() + "'");
    apply_snapshot(parse_session(*text), session, env);
}

}  // namespace tapps
