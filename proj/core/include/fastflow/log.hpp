#pragma once

#include <sstream>
#include <string>

namespace fastflow::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// level comes from the FASTFLOW_LOG env var (error|warn|info|debug), default warn
Level threshold();

void write(Level level, const std::string& message);

namespace detail {
inline void append(std::ostringstream&) {}
template <typename T, typename... Rest>
void append(std::ostringstream& os, const T& v, const Rest&... rest) {
    os << v;
    append(os, rest...);
}
}  // namespace detail

template <typename... Args>
void emit(Level level, const Args&... args) {
    if (level > threshold()) return;
    std::ostringstream os;
    detail::append(os, args...);
    write(level, os.str());
}

template <typename... Args> void error(const Args&... a) { emit(Level::error, a...); }
template <typename... Args> void warn(const Args&... a) { emit(Level::warn, a...); }
template <typename... Args> void info(const Args&... a) { emit(Level::info, a...); }
template <typename... Args> void debug(const Args&... a) { emit(Level::debug, a...); }

}  // namespace fastflow::log
