#pragma once

#include <vector>

#include "rddl/ast.hpp"

namespace rddl {

// Structural validation of a domain/instance pair. Diagnostics are collected
// exhaustively; an empty error set is the precondition for grounding.
// Diagnostics are data: this never throws on model problems.
std::vector<Diagnostic> validate(const LiftedModel& domain,
                                 const InstanceModel& instance,
                                 const NonFluentsBlock* non_fluents = nullptr);

// Domain-only subset (used by cmd_parse on files without an instance).
std::vector<Diagnostic> validate_domain(const LiftedModel& domain);

}  // namespace rddl
