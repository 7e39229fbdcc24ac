#pragma once

#include "tapps/dataframe.hpp"
#include "tapps/plugin.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tapps {

/// Interpreter settings changed by SET statements.
struct Environment {
    std::filesystem::path cwd;
    std::filesystem::path starting_cwd;
    char separator = ',';
    std::optional<CellValue> fillin;
    bool display_ast = false;
    // Runtime only: whether a terminal is attached for the shell escape.
    bool interactive = false;

    /// Fresh environment rooted at an existing directory.
    static Environment at(const std::filesystem::path& directory);

    /// Relative paths resolve against cwd.
    std::filesystem::path resolve(const std::string& file) const;

    bool operator==(const Environment& other) const {
        return cwd == other.cwd && starting_cwd == other.starting_cwd &&
               separator == other.separator && fillin == other.fillin &&
               display_ast == other.display_ast;
    }
};

struct HistoryEntry {
    int index = 0;
    std::string text;

    bool operator==(const HistoryEntry&) const = default;
};

/// Everything a running interpreter holds besides its environment.
struct Session {
    MultiDataFrame mdf;
    std::map<std::string, ParameterSet> parameters;
    std::vector<std::string> plugins_loaded;
    std::vector<PluginLoadFailure> plugins_load_failed;
    std::map<std::string, PluginDescriptor> plugin_registry;
    std::vector<HistoryEntry> history;
    std::vector<HistoryEntry> ast_history;

    bool plugin_loaded(const std::string& name) const { return plugin_registry.contains(name); }

    /// Value comparison; plugin entry points are compared by name only.
    bool operator==(const Session& other) const;
};

struct ExecResult {
    std::string output;
    bool mutated = false;
};

/// Replaces the session's plugin lists and registry with a discovery result.
void install_plugins(Session& session, DiscoveryResult discovery);

/// Copies the plugin's default parameter set under set_name. Throws
/// UnknownPlugin or DuplicateParameterSetName.
ParameterSet& new_parameter_set(Session& session, const std::string& plugin_name,
                                const std::string& set_name);

/// Runs the plugin named in the set. On any failure the stored set is left as
/// it was. Throws UnknownParameterSet, UnknownPlugin, MissingInputFrame or
/// PluginFailure.
ExecResult run_plugin(Session& session, const std::string& set_name);

}  // namespace tapps
