#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace c2coh {

// args excludes the program name.  Returns 0 ok, 1 check failed, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string emit_chart_csv(int pmin, int pmax, int qmin, int qmax);

}  // namespace c2coh
