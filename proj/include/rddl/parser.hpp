#pragma once

#include <string_view>

#include "rddl/ast.hpp"

namespace rddl {

// Parses RDDL source holding any mix of domain / non-fluents / instance
// blocks. Throws RddlError(Syntax) on the first error; no recovery.
DocumentSet parse(std::string_view source);

// Parses a single expression (test and tooling helper).
Expression parse_expression(std::string_view source);

}  // namespace rddl
