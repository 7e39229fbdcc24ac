#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tapps {

struct SourceLine {
    std::string text;
    std::filesystem::path file;
    int line = 0;  // 1-based within `file`

    bool operator==(const SourceLine&) const = default;
};

/// A script after include expansion: no line starts with "@include".
struct ScriptSource {
    std::filesystem::path path;
    std::vector<SourceLine> lines;

    std::vector<std::string> texts() const;
};

/// Returns a file's content, or nullopt when it cannot be read.
using FileReader = std::function<std::optional<std::string>(const std::filesystem::path&)>;

std::optional<std::string> read_file(const std::filesystem::path& path);

/// Expands `@include <path>` lines recursively, resolving each path against the
/// including file's directory. Throws Error(FileNotFound) or
/// Error(CyclicInclude) naming the include chain.
ScriptSource preprocess(const std::filesystem::path& root, const FileReader& reader = read_file);

std::vector<std::string> split_lines(const std::string& text);

}  // namespace tapps
