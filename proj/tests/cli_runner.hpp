#pragma once

// Helpers for driving the installed CLI binary as a subprocess. The binary
// path comes from the THC_CLI_PATH compile definition set by CMake.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cli {

struct Result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string binary_path() { return THC_CLI_PATH; }

// Runs `thc <args>` with stdout/stderr captured.
inline Result run(const std::string& args) {
    static int counter = 0;
    const std::string err_file =
        "/tmp/thc_test_stderr_" + std::to_string(counter++) + ".txt";
    const std::string cmd = binary_path() + " " + args + " 2>" + err_file;

    Result result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    std::ifstream err(err_file);
    std::ostringstream err_buf;
    err_buf << err.rdbuf();
    result.err = err_buf.str();
    std::remove(err_file.c_str());
    return result;
}

inline std::string make_temp_dir() {
    char tmpl[] = "/tmp/thc_test_XXXXXX";
    if (!mkdtemp(tmpl)) throw std::runtime_error("mkdtemp failed");
    return tmpl;
}

inline void write_file(const std::string& path,
                       const std::vector<unsigned char>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

inline std::vector<unsigned char> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string s = buf.str();
    return {s.begin(), s.end()};
}

} // namespace cli
