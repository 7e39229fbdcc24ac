#pragma once

#include "tapps/ast.hpp"
#include "tapps/bytecode.hpp"
#include "tapps/session.hpp"

#include <string>
#include <vector>

namespace tapps {

/// Runs one bytecode. Every opcode validates before it mutates, so a thrown
/// Error leaves session and environment exactly as they were.
ExecResult execute(const Bytecode& bytecode, Session& session, Environment& env);

/// Plain form: analysis_name, analytical_method and narrative fill their own
/// fields, any other key goes to options. plugin_name cannot be changed.
ExecResult exec_set_parameter(Session& session, const std::string& key,
                              const std::string& param_name, const std::string& value);

/// Binds a copy of the frame as it is now; later changes to the frame in the
/// session do not reach the parameter set.
ExecResult exec_set_parameter_dataframe(Session& session, const std::string& param_name,
                                        const std::string& frame_name);

/// item is the show operand list, e.g. {"dataframe"} or {"plugin", "summarize"}.
ExecResult exec_show(const Session& session, const Environment& env,
                     const std::vector<std::string>& item);

ExecResult exec_new_dataframe(Session& session, const std::string& new_name,
                              const std::string& param_name, ast::PLocation location);

/// Starts $SHELL (or /bin/sh) in env.cwd and waits for it. Throws SpawnFailure
/// unless env.interactive is set and stdin is a terminal.
ExecResult exec_shell(const Environment& env);

/// "Current Dataframe(s) (n = N):" followed by one header block per frame.
std::string render_dataframe_listing(const MultiDataFrame& mdf);

}  // namespace tapps
