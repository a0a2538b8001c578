#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace downup::cli {

enum ExitCode { ok = 0, negative = 1, input_error = 2 };

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool interactive = false; // show a prompt in the repl
};

// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, Streams io);

} // namespace downup::cli
