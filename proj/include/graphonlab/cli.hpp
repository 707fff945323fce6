#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace graphonlab {

// Entry point behind the graphonlab binary. Exit codes: 0 success, 1 when a
// check reports a violated verdict (or a packing run fails to certify), 2 on
// usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace graphonlab
