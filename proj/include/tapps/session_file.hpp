#pragma once

#include "tapps/session.hpp"

#include <map>
#include <string>

namespace tapps {

inline constexpr std::string_view kSessionMagic = "TAPPS-SESSION v1";

/// Session file layout:
///
///   TAPPS-SESSION v1
///   [environment]
///   cwd=/abs/dir
///   separator=,
///   fillin=i:0            (only when set)
///   displayast=false
///   [end]
///   [dataframe NAME]
///   @label,series1,series2
///   1,s:text,r:2.5         (label, then typed cells s:/i:/r:)
///   [end]
///   [parameters NAME]
///   plugin_name=summarize
///   analytical_method=by_series
///   option.KEY=VALUE
///   input_frame=frame NAME  (a value-equal frame in the session)
///   results_frame=embedded  (followed by a [dataframe NAME] block)
///   [end]
///
/// Names, keys and text are escaped so every entry stays on one line.
struct SessionSnapshot {
    std::filesystem::path cwd;
    char separator = ',';
    std::optional<CellValue> fillin;
    bool display_ast = false;
    MultiDataFrame mdf;
    std::map<std::string, ParameterSet> parameters;
};

std::string format_session(const Session& session, const Environment& env);

/// Throws VersionMismatch for another "TAPPS-SESSION" version and
/// FormatError("line N: ...") for anything malformed.
SessionSnapshot parse_session(const std::string& text);

/// Replaces frames and parameter sets and restores the environment settings.
/// The saved cwd is only restored when it still exists.
void apply_snapshot(SessionSnapshot snapshot, Session& session, Environment& env);

/// Throws WriteFailure.
void save_session(const std::string& file, const Session& session, const Environment& env);

/// Parses the whole file before touching the session. Throws FileNotFound plus
/// the parse_session errors.
void load_session(const std::string& file, Session& session, Environment& env);

}  // namespace tapps
