#pragma once

// Helper for driving the built CLI binary from tests.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testcli {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    q += "'";
    return q;
}

/// Runs the CLI with the given arguments; captures stdout, sends stderr to
/// /dev/null (tests assert on exit codes and file outputs).
inline CliResult run_cli(const std::string& binary, const std::vector<std::string>& args,
                         bool keep_stderr = false) {
    std::string cmd = shell_quote(binary);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += keep_stderr ? " 2>&1" : " 2>/dev/null";
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline bool file_exists(const std::string& path) {
    std::ifstream in(path);
    return in.good();
}

}  // namespace testcli
