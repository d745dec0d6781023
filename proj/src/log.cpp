#include "eet/log.hpp"

#include <cstdlib>
#include <iostream>

namespace eet::log {

Level level() {
  static Level cached = [] {
    const char* env = std::getenv("EETSIM_LOG");
    if (env == nullptr) return Level::Warn;
    std::string v(env);
    if (v == "quiet") return Level::Quiet;
    if (v == "info") return Level::Info;
    if (v == "debug") return Level::Debug;
    return Level::Warn;
  }();
  return cached;
}

void warn(const std::string& message) {
  if (level() >= Level::Warn) std::cerr << "warning: " << message << "\n";
}

void info(const std::string& message) {
  if (level() >= Level::Info) std::cerr << "info: " << message << "\n";
}

void debug(const std::string& message) {
  if (level() >= Level::Debug) std::cerr << "debug: " << message << "\n";
}

}  // namespace eet::log
