#include "tapps/preprocessor.hpp"

#include "tapps/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace tapps {

std::vector<std::string> ScriptSource::texts() const {
    std::vector<std::string> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back(l.text);
    return out;
}

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            if (!current.empty() && current.back() == '\r') current.pop_back();
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        if (current.back() == '\r') current.pop_back();
        lines.push_back(std::move(current));
    }
    return lines;
}

namespace {

constexpr std::string_view kDirective = "@include";

std::optional<std::string> include_target(const std::string& line) {
    auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line.compare(start, kDirective.size(), kDirective) != 0) {
        return std::nullopt;
    }
    std::string rest = line.substr(start + kDirective.size());
    if (!rest.empty() && rest.front() != ' ' && rest.front() != '\t') return std::nullopt;
    auto b = rest.find_first_not_of(" \t");
    auto e = rest.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string{};
    rest = rest.substr(b, e - b + 1);
    // accept "file", <file> and bare file
    if (rest.size() >= 2 && ((rest.front() == '"' && rest.back() == '"') ||
                             (rest.front() == '<' && rest.back() == '>'))) {
        rest = rest.substr(1, rest.size() - 2);
    }
    return rest;
}

fs::path normalized(const fs::path& p) { return fs::weakly_canonical(fs::absolute(p)); }

void expand(const fs::path& file, const FileReader& reader, std::vector<fs::path>& chain,
            std::vector<SourceLine>& out) {
    const auto key = normalized(file);
    if (std::find(chain.begin(), chain.end(), key) != chain.end()) {
        std::string names;
        for (const auto& p : chain) names += p.filename().string() + " -> ";
        names += key.filename().string();
        throw Error(ErrorKind::CyclicInclude, "cyclic @include: " + names);
    }
    auto text = reader(file);
    if (!text) {
        throw Error(ErrorKind::FileNotFound, "cannot read script '" + file.string() + "'");
    }
    chain.push_back(key);
    auto lines = split_lines(*text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (auto target = include_target(lines[i])) {
            if (target->empty()) {
                throw Error(ErrorKind::FileNotFound, file.string() + ":" + std::to_string(i + 1) +
                                                         ": @include without a file name");
            }
            fs::path next = fs::path(*target);
            if (next.is_relative()) next = file.parent_path() / next;
            expand(next, reader, chain, out);
        } else {
            out.push_back(SourceLine{std::move(lines[i]), file, static_cast<int>(i + 1)});
        }
    }
    chain.pop_back();
}

}  // namespace

ScriptSource preprocess(const fs::path& root, const FileReader& reader) {
    ScriptSource source;
    source.path = root;
    std::vector<fs::path> chain;
    expand(root, reader, chain, source.lines);
    return source;
}

}  // namespace tapps
