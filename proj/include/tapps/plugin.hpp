#pragma once

#include "tapps/dataframe.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tapps {

/// Contents of a plugin folder's "manifest" file.
///
///   plugin_name: summarize
///   release: 1
///   description: Descriptive statistics
///   instructions<<
///   ...free text...
///   >>
struct Manifest {
    std::string plugin_name;
    long release = 0;
    std::string description;
    std::string instructions;

    bool operator==(const Manifest&) const = default;
};

/// Throws Error(FormatError) for missing keys or malformed lines.
Manifest parse_manifest(const std::string& text);

/// Folder names must be "<name>_<release>": a lowercase single word, an
/// underscore and an integer.
bool valid_plugin_folder_name(std::string_view folder);

/// The record exchanged between the platform and a plugin.
class ParameterSet {
public:
    ParameterSet() = default;
    explicit ParameterSet(std::string plugin_name) : plugin_name_(std::move(plugin_name)) {}

    const std::string& plugin_name() const noexcept { return plugin_name_; }

    std::optional<std::string> analysis_name;
    std::optional<std::string> analytical_method;
    std::optional<std::string> narrative;
    std::optional<DataFrame> input_frame;
    std::optional<DataFrame> results_frame;
    std::map<std::string, std::string> options;

    bool operator==(const ParameterSet&) const = default;

private:
    std::string plugin_name_;
};

/// A plugin's entry point: it receives the parameter set and must return it
/// with results_frame filled in, touching nothing else.
using PluginEntry = std::function<ParameterSet(ParameterSet)>;

struct PluginImplementation {
    PluginEntry entry;
    ParameterSet default_parameters;
};

/// Compiled-in plugin implementations keyed by plugin_name. Discovery pairs
/// each manifest with one of these.
class PluginRegistry {
public:
    void add(const std::string& plugin_name, PluginImplementation implementation);
    const PluginImplementation* find(const std::string& plugin_name) const;

    /// summarize and template.
    static PluginRegistry builtin();

private:
    std::map<std::string, PluginImplementation> implementations_;
};

struct PluginDescriptor {
    Manifest manifest;
    PluginEntry entry;
    ParameterSet default_parameters;
    std::filesystem::path folder;
};

struct PluginLoadFailure {
    std::string name;
    std::string reason;

    bool operator==(const PluginLoadFailure&) const = default;
};

struct DiscoveryResult {
    std::vector<std::string> loaded;
    std::vector<PluginLoadFailure> failed;
    std::map<std::string, PluginDescriptor> descriptors;
};

/// Scans every sub-folder of plugins_dir. Never throws for a bad plugin: it is
/// recorded in `failed` with a reason. Both lists are sorted by name.
DiscoveryResult discover_plugins(const std::filesystem::path& plugins_dir,
                                 const PluginRegistry& registry);

}  // namespace tapps
