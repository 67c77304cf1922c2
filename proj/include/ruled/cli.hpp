#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ruled {

// Exit codes: 0 success or homotopic, 1 not homotopic or rejected witness, 2 invalid input, 3 undecidable.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ruled
