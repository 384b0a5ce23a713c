#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace fusetrack::log {

// Verbosity from FUSETRACK_LOG: 0 = quiet (default), 1 = info, 2 = debug.
inline int level() {
  static const int lvl = [] {
    const char* env = std::getenv("FUSETRACK_LOG");
    return env ? std::atoi(env) : 0;
  }();
  return lvl;
}

template <typename... Args>
void info(const char* fmt, Args... args) {
  if (level() >= 1) {
    std::fprintf(stderr, "[fusetrack] ");
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
  }
}

template <typename... Args>
void debug(const char* fmt, Args... args) {
  if (level() >= 2) {
    std::fprintf(stderr, "[fusetrack:dbg] ");
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
  }
}

}  // namespace fusetrack::log
