#pragma once

// Spawns the built CLI and captures its streams; POSIX-only, which matches
// the CI environment.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace testsupport {

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "fhdim-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

inline CommandResult run_command(const std::string& command) {
    static int counter = 0;
    const std::string tag = std::to_string(::getpid()) + "_" + std::to_string(counter);
    const auto dir = scratch_dir();
    const auto out_path = dir / ("out" + tag + ".txt");
    const auto err_path = dir / ("err" + tag + ".txt");
    ++counter;

    const std::string full =
        command + " > " + out_path.string() + " 2> " + err_path.string();
    const int status = std::system(full.c_str());

    CommandResult result;
    if (status != -1 && WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return result;
}

/// Path of the CLI binary. FHDIM_CLI in the environment wins; the build
/// bakes in the target location as the default.
inline std::string cli_path() {
    if (const char* env = std::getenv("FHDIM_CLI")) return env;
#ifdef FHDIM_CLI_PATH
    return FHDIM_CLI_PATH;
#else
    return "./fhdim";
#endif
}

/// Fixture directory; FHDIM_FIXTURES overrides the baked-in source location.
inline std::string fixtures_dir() {
    if (const char* env = std::getenv("FHDIM_FIXTURES")) return env;
#ifdef FHDIM_FIXTURES_DIR
    return FHDIM_FIXTURES_DIR;
#else
    return "fixtures";
#endif
}

}  // namespace testsupport
