#pragma once

#include <string>
#include <vector>

namespace piexp {

// Full command-line front end; returns the process exit code.
int run_main(int argc, char** argv);

// One job given argv-style arguments (no program name). Output lands in `out`,
// diagnostics in `err`; the return value is the job's exit code. Stdin is only
// consulted for the polynomial when `allow_stdin` is set.
int run_job(const std::vector<std::string>& args, bool allow_stdin, std::string& out,
            std::string& err);

// Shell-like splitting for batch lines: whitespace-separated, single or double
// quotes group words.
std::vector<std::string> split_args(const std::string& line);

}  // namespace piexp
