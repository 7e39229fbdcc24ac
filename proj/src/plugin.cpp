#include "tapps/plugin.hpp"

#include "tapps/error.hpp"
#include "tapps/preprocessor.hpp"

#include <algorithm>
#include <charconv>
#include <regex>

namespace fs = std::filesystem;

namespace tapps {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::optional<long> parse_release(const std::string& text) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
    Manifest m;
    bool have_name = false, have_release = false, have_description = false;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto line = trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;
        if (line == "instructions<<") {
            std::string body;
            bool closed = false;
            for (++i; i < lines.size(); ++i) {
                if (trim(lines[i]) == ">>") {
                    closed = true;
                    break;
                }
                body += lines[i];
                body += '\n';
            }
            if (!closed) {
                throw Error(ErrorKind::FormatError, "manifest: unterminated instructions block");
            }
            m.instructions = std::move(body);
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw Error(ErrorKind::FormatError,
                        "manifest line " + std::to_string(i + 1) + ": expected 'key: value'");
        }
        auto key = trim(line.substr(0, colon));
        auto value = trim(line.substr(colon + 1));
        if (key == "plugin_name") {
            m.plugin_name = value;
            have_name = true;
        } else if (key == "release") {
            auto release = parse_release(value);
            if (!release || *release <= 0) {
                throw Error(ErrorKind::FormatError,
                            "manifest: release must be a positive integer, got '" + value + "'");
            }
            m.release = *release;
            have_release = true;
        } else if (key == "description") {
            m.description = value;
            have_description = true;
        }
    }
    if (!have_name || !have_release || !have_description) {
        throw Error(ErrorKind::FormatError,
                    "manifest: plugin_name, release and description are required");
    }
    return m;
}

bool valid_plugin_folder_name(std::string_view folder) {
    static const std::regex pattern("[a-z]+_[0-9]+");
    return std::regex_match(folder.begin(), folder.end(), pattern);
}

void PluginRegistry::add(const std::string& plugin_name, PluginImplementation implementation) {
    implementations_[plugin_name] = std::move(implementation);
}

const PluginImplementation* PluginRegistry::find(const std::string& plugin_name) const {
    auto it = implementations_.find(plugin_name);
    return it == implementations_.end() ? nullptr : &it->second;
}

DiscoveryResult discover_plugins(const fs::path& plugins_dir, const PluginRegistry& registry) {
    DiscoveryResult result;
    std::vector<fs::path> folders;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(plugins_dir, ec)) {
        if (entry.is_directory()) folders.push_back(entry.path());
    }
    std::sort(folders.begin(), folders.end());

    for (const auto& folder : folders) {
        const std::string folder_name = folder.filename().string();
        auto fail = [&](const std::string& reason) {
            result.failed.push_back({folder_name, reason});
        };
        if (!valid_plugin_folder_name(folder_name)) {
            fail("folder name must be <lowercase name>_<release number>");
            continue;
        }
        auto text = read_file(folder / "manifest");
        if (!text) {
            fail("missing or unreadable manifest");
            continue;
        }
        Manifest manifest;
        try {
            manifest = parse_manifest(*text);
        } catch (const Error& e) {
            fail(e.what());
            continue;
        }
        auto underscore = folder_name.rfind('_');
        if (manifest.plugin_name != folder_name.substr(0, underscore) ||
            parse_release(folder_name.substr(underscore + 1)) != manifest.release) {
            fail("manifest name/release do not match the folder name");
            continue;
        }
        const auto* impl = registry.find(manifest.plugin_name);
        if (!impl) {
            fail("no implementation registered for plugin '" + manifest.plugin_name + "'");
            continue;
        }
        auto existing = result.descriptors.find(manifest.plugin_name);
        if (existing != result.descriptors.end()) {
            // highest release wins
            if (existing->second.manifest.release > manifest.release) {
                fail("superseded by " + existing->second.folder.filename().string());
                continue;
            }
            result.failed.push_back({existing->second.folder.filename().string(),
                                     "superseded by " + folder_name});
        }
        result.descriptors[manifest.plugin_name] =
            PluginDescriptor{manifest, impl->entry, impl->default_parameters, folder};
    }
    for (const auto& [name, descriptor] : result.descriptors) result.loaded.push_back(name);
    std::sort(result.failed.begin(), result.failed.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    return result;
}

}  // namespace tapps
