#pragma once

#include "cocontact/config.hpp"

namespace cocontact {

// Exit-code contract: 0 pass, 1 mathematical check failure, 2 operational
// failure (bad config, bad arguments, I/O).
int cmd_check(const RunConfig& rc);
int cmd_derive(const RunConfig& rc);
int cmd_simulate(const RunConfig& rc);
int cmd_verify(const RunConfig& rc);
int cmd_converge(const RunConfig& rc);

/// Loads the config at `config_path`, runs the named command and maps every
/// error onto the exit-code contract.
int dispatch_command(const std::string& cmd, const std::string& config_path);

/// Argv-level entry used by the binary: command name plus config path.
int run_cli(int argc, const char* const* argv);

}  // namespace cocontact
