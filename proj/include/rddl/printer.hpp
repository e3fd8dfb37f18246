#pragma once

#include <string>

#include "rddl/ast.hpp"

namespace rddl {

// Canonical RDDL rendering. Expressions are fully parenthesized so that
// parse(to_rddl(x)) is structurally identical to x.
std::string expr_to_string(const Expression& e);
std::string to_rddl(const LiftedModel& m);
std::string to_rddl(const NonFluentsBlock& b);
std::string to_rddl(const InstanceModel& m);
std::string to_rddl(const DocumentSet& doc);

}  // namespace rddl
