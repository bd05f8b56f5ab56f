#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixdag {

// Command dispatch for the mixdag tool. Exit status: 0 separated / pass,
// 1 connected / violations found, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace mixdag
