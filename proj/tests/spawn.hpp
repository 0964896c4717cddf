// Minimal helper for driving the command-line binary from tests: runs a
// command line, captures stdout/stderr into temp files, and reports the
// exit code.
#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace spawn {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Runs `binary` with `args` appended verbatim (caller quotes as needed).
inline RunResult run(const std::string& binary, const std::string& args) {
    static int counter = 0;
    const std::filesystem::path dir = std::filesystem::temp_directory_path();
    const std::string tag =
        std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const std::filesystem::path out_path = dir / ("laban_test_out_" + tag);
    const std::filesystem::path err_path = dir / ("laban_test_err_" + tag);

    const std::string command = "\"" + binary + "\" " + args + " > \"" +
                                out_path.string() + "\" 2> \"" + err_path.string() +
                                "\"";
    const int status = std::system(command.c_str());

    RunResult result;
    if (status != -1 && WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return result;
}

}  // namespace spawn
