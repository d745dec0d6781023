#pragma once

#include <string>

namespace eet::log {

enum class Level { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

/// Verbosity from the EETSIM_LOG env var (quiet|warn|info|debug), default
/// warn. Read once per process.
Level level();

void warn(const std::string& message);
void info(const std::string& message);
void debug(const std::string& message);

}  // namespace eet::log
