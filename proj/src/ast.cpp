#include "rddl/ast.hpp"

#include <algorithm>
#include <sstream>

namespace rddl {

const char* fluent_class_name(FluentClass c) {
    switch (c) {
        case FluentClass::NonFluent: return "non-fluent";
        case FluentClass::State: return "state-fluent";
        case FluentClass::Action: return "action-fluent";
        case FluentClass::Derived: return "derived-fluent";
        case FluentClass::Interm: return "interm-fluent";
        case FluentClass::Observ: return "observ-fluent";
    }
    return "?";
}

const char* agg_op_name(AggOp op) {
    switch (op) {
        case AggOp::Sum: return "sum";
        case AggOp::Prod: return "prod";
        case AggOp::Min: return "min";
        case AggOp::Max: return "max";
        case AggOp::Avg: return "avg";
        case AggOp::Forall: return "forall";
        case AggOp::Exists: return "exists";
        case AggOp::Argmax: return "argmax";
        case AggOp::Argmin: return "argmin";
    }
    return "?";
}

const char* dist_family_name(DistFamily f) {
    switch (f) {
        case DistFamily::KronDelta: return "KronDelta";
        case DistFamily::DiracDelta: return "DiracDelta";
        case DistFamily::Bernoulli: return "Bernoulli";
        case DistFamily::Discrete: return "Discrete";
        case DistFamily::Uniform: return "Uniform";
        case DistFamily::Normal: return "Normal";
        case DistFamily::Exponential: return "Exponential";
        case DistFamily::Poisson: return "Poisson";
        case DistFamily::Gamma: return "Gamma";
        case DistFamily::Beta: return "Beta";
        case DistFamily::Binomial: return "Binomial";
        case DistFamily::Student: return "Student";
        case DistFamily::MultivariateNormal: return "MultivariateNormal";
        case DistFamily::Dirichlet: return "Dirichlet";
        case DistFamily::Multinomial: return "Multinomial";
    }
    return "?";
}

bool dist_is_vectorized(DistFamily f) {
    return f == DistFamily::MultivariateNormal || f == DistFamily::Dirichlet ||
           f == DistFamily::Multinomial;
}

std::string Literal::to_string() const {
    switch (tag) {
        case Tag::Bool: return b ? "true" : "false";
        case Tag::Int: return std::to_string(i);
        case Tag::Real: {
            std::ostringstream os;
            os.precision(17);
            os << r;
            if (os.str().find_first_of(".eEn") == std::string::npos)
                return os.str() + ".0";
            return os.str();
        }
        case Tag::EnumName: return "@" + enum_name;
        case Tag::PosInf: return "pos-inf";
        case Tag::NegInf: return "neg-inf";
    }
    return "?";
}

bool expr_equal(const Expression& a, const Expression& b) {
    if (a.kind != b.kind) return false;
    if (a.args.size() != b.args.size()) return false;
    if (a.constant != b.constant) return false;
    if (a.name != b.name || a.primed != b.primed || a.negated != b.negated)
        return false;
    if (a.params != b.params) return false;
    if (a.agg != b.agg || a.family != b.family || a.matrix_fn != b.matrix_fn)
        return false;
    if (a.type_name != b.type_name || a.case_members != b.case_members)
        return false;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!expr_equal(a.args[i], b.args[i])) return false;
    return true;
}

Expression make_constant(Value v, SourceLocation loc) {
    Expression e;
    e.kind = ExprKind::Constant;
    e.constant = v;
    e.loc = loc;
    return e;
}

Expression make_fluent_ref(std::string name, std::vector<Expression> args,
                           bool primed, SourceLocation loc) {
    Expression e;
    e.kind = ExprKind::FluentRef;
    e.name = std::move(name);
    e.args = std::move(args);
    e.primed = primed;
    e.loc = loc;
    return e;
}

Expression make_param_ref(std::string name, SourceLocation loc) {
    Expression e;
    e.kind = ExprKind::ParamRef;
    e.name = std::move(name);
    e.loc = loc;
    return e;
}

Expression make_unary(ExprKind kind, Expression arg, SourceLocation loc) {
    Expression e;
    e.kind = kind;
    e.args.push_back(std::move(arg));
    e.loc = loc;
    return e;
}

Expression make_binary(ExprKind kind, Expression lhs, Expression rhs,
                       SourceLocation loc) {
    Expression e;
    e.kind = kind;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    e.loc = loc;
    return e;
}

std::string Diagnostic::to_string() const {
    std::string out = severity == Severity::Error ? "error" : "warning";
    if (loc.valid()) out += " at " + loc.to_string();
    out += ": " + message;
    return out;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
        return d.severity == Severity::Error;
    });
}

namespace {

bool pvariable_equal(const PVariable& a, const PVariable& b) {
    return a.name == b.name && a.cls == b.cls &&
           a.param_types == b.param_types && a.range == b.range &&
           a.default_value == b.default_value;
}

bool cpf_equal(const Cpf& a, const Cpf& b) {
    return a.target == b.target && a.primed == b.primed &&
           a.params == b.params && expr_equal(a.body, b.body);
}

bool enum_type_equal(const EnumType& a, const EnumType& b) {
    return a.name == b.name && a.members == b.members;
}

template <typename T, typename Eq>
bool all_equal(const std::vector<T>& a, const std::vector<T>& b, Eq eq) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!eq(a[i], b[i])) return false;
    return true;
}

bool objects_equal(const ObjectsDecl& a, const ObjectsDecl& b) {
    return a.type == b.type && a.names == b.names;
}

bool assignment_equal(const Assignment& a, const Assignment& b) {
    return a.fluent == b.fluent && a.args == b.args && a.value == b.value;
}

}  // namespace

bool lifted_equal(const LiftedModel& a, const LiftedModel& b) {
    return a.name == b.name && a.requirements == b.requirements &&
           all_equal(a.enum_types, b.enum_types, enum_type_equal) &&
           a.object_types == b.object_types &&
           all_equal(a.pvariables, b.pvariables, pvariable_equal) &&
           all_equal(a.cpfs, b.cpfs, cpf_equal) &&
           a.has_reward == b.has_reward &&
           (!a.has_reward || expr_equal(a.reward, b.reward)) &&
           all_equal(a.preconditions, b.preconditions, expr_equal) &&
           all_equal(a.invariants, b.invariants, expr_equal) &&
           all_equal(a.termination, b.termination, expr_equal);
}

bool instance_equal(const InstanceModel& a, const InstanceModel& b) {
    return a.name == b.name && a.domain == b.domain &&
           a.non_fluents == b.non_fluents &&
           all_equal(a.objects, b.objects, objects_equal) &&
           all_equal(a.init_state, b.init_state, assignment_equal) &&
           a.max_nondef_pos_inf == b.max_nondef_pos_inf &&
           (a.max_nondef_pos_inf || a.max_nondef_actions == b.max_nondef_actions) &&
           a.horizon == b.horizon && a.discount == b.discount;
}

bool non_fluents_equal(const NonFluentsBlock& a, const NonFluentsBlock& b) {
    return a.name == b.name && a.domain == b.domain &&
           all_equal(a.objects, b.objects, objects_equal) &&
           all_equal(a.assignments, b.assignments, assignment_equal);
}

bool document_equal(const DocumentSet& a, const DocumentSet& b) {
    if (a.domain.has_value() != b.domain.has_value()) return false;
    if (a.domain && !lifted_equal(*a.domain, *b.domain)) return false;
    return all_equal(a.non_fluents, b.non_fluents, non_fluents_equal) &&
           all_equal(a.instances, b.instances, instance_equal);
}

}  // namespace rddl
