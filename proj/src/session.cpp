#include "tapps/session.hpp"

#include "tapps/error.hpp"

namespace fs = std::filesystem;

namespace tapps {

Environment Environment::at(const fs::path& directory) {
    Environment env;
    env.cwd = fs::weakly_canonical(fs::absolute(directory));
    env.starting_cwd = env.cwd;
    return env;
}

fs::path Environment::resolve(const std::string& file) const {
    fs::path p(file);
    return p.is_absolute() ? p : cwd / p;
}

bool Session::operator==(const Session& other) const {
    if (!(mdf == other.mdf && parameters == other.parameters &&
          plugins_loaded == other.plugins_loaded &&
          plugins_load_failed == other.plugins_load_failed && history == other.history &&
          ast_history == other.ast_history)) {
        return false;
    }
    if (plugin_registry.size() != other.plugin_registry.size()) return false;
    for (const auto& [name, descriptor] : plugin_registry) {
        auto it = other.plugin_registry.find(name);
        if (it == other.plugin_registry.end() || !(it->second.manifest == descriptor.manifest)) {
            return false;
        }
    }
    return true;
}

void install_plugins(Session& session, DiscoveryResult discovery) {
    session.plugins_loaded = std::move(discovery.loaded);
    session.plugins_load_failed = std::move(discovery.failed);
    session.plugin_registry = std::move(discovery.descriptors);
}

ParameterSet& new_parameter_set(Session& session, const std::string& plugin_name,
                                const std::string& set_name) {
    auto it = session.plugin_registry.find(plugin_name);
    if (it == session.plugin_registry.end()) {
        throw Error(ErrorKind::UnknownPlugin, "no loaded plugin named '" + plugin_name + "'");
    }
    if (session.parameters.contains(set_name)) {
        throw Error(ErrorKind::DuplicateParameterSetName,
                    "parameter set '" + set_name + "' already exists");
    }
    return session.parameters.emplace(set_name, it->second.default_parameters).first->second;
}

ExecResult run_plugin(Session& session, const std::string& set_name) {
    auto stored = session.parameters.find(set_name);
    if (stored == session.parameters.end()) {
        throw Error(ErrorKind::UnknownParameterSet, "no parameter set named '" + set_name + "'");
    }
    const auto& plugin_name = stored->second.plugin_name();
    auto plugin = session.plugin_registry.find(plugin_name);
    if (plugin == session.plugin_registry.end()) {
        throw Error(ErrorKind::UnknownPlugin, "plugin '" + plugin_name + "' of parameter set '" +
                                                  set_name + "' is not loaded");
    }
    if (!stored->second.input_frame) {
        throw Error(ErrorKind::MissingInputFrame,
                    "parameter set '" + set_name + "' has no input data frame; use "
                    "'set parameter dataframe in " + set_name + " as <frame>'");
    }

    ParameterSet working = stored->second;
    working.results_frame = DataFrame(set_name + "_results");
    ParameterSet returned;
    try {
        returned = plugin->second.entry(std::move(working));
    } catch (const std::exception& e) {
        throw Error(ErrorKind::PluginFailure, "plugin '" + plugin_name + "' failed: " + e.what());
    }
    if (!returned.results_frame) {
        throw Error(ErrorKind::PluginFailure,
                    "plugin '" + plugin_name + "' returned no results data frame");
    }
    if (returned.plugin_name() != plugin_name) {
        throw Error(ErrorKind::PluginFailure,
                    "plugin '" + plugin_name + "' changed the parameter set's plugin_name");
    }
    stored->second = std::move(returned);
    return {"", true};
}

}  // namespace tapps
