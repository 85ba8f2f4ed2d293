#include "fastflow/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace fastflow::log {

static Level parse_env() {
    const char* env = std::getenv("FASTFLOW_LOG");
    if (!env) return Level::warn;
    if (std::strcmp(env, "error") == 0) return Level::error;
    if (std::strcmp(env, "warn") == 0) return Level::warn;
    if (std::strcmp(env, "info") == 0) return Level::info;
    if (std::strcmp(env, "debug") == 0) return Level::debug;
    return Level::warn;
}

Level threshold() {
    static const Level level = parse_env();
    return level;
}

void write(Level level, const std::string& message) {
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::fprintf(stderr, "[fastflow %s] %s\n", names[static_cast<int>(level)], message.c_str());
}

}  // namespace fastflow::log
