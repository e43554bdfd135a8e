#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace localsep::cli {

/// Runs one subcommand. Returns 0 on success, 1 on usage or input errors,
/// 2 when an operation is called outside its domain, 3 on internal failures.
int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr);
int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace localsep::cli
