#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lucaskit/poly2.hpp"

namespace lucaskit {

/// Runs the command line (args excludes the program name). Returns 0 on
/// success, 1 on a usage error, 2 on a verification failure or finding.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Evaluates a named quantity such as "lucasnomial:6,3", "coxeter:I2,5,2" or
/// "catalan:4". Throws InvalidArgument for unknown names or bad arguments.
Poly2 named_quantity(const std::string& expr);

}  // namespace lucaskit
