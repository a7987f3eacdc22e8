// Command-line front end. Exit codes: 0 affirmative/success, 1 negative
// verdict, 2 usage or input error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covers {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream* stdin_stream = nullptr);

}  // namespace covers
