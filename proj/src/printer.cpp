#include "rddl/printer.hpp"

#include <cmath>
#include <sstream>

namespace rddl {

namespace {

std::string real_text(double r) {
    if (std::isinf(r)) return r > 0 ? "pos-inf" : "neg-inf";
    std::ostringstream os;
    os.precision(17);
    os << r;
    std::string s = os.str();
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

std::string value_text(const Value& v) {
    switch (v.kind()) {
        case Kind::Bool: return v.as_bool() ? "true" : "false";
        case Kind::Int: return std::to_string(v.as_int());
        case Kind::Real: return real_text(v.as_real());
        case Kind::Enum: return v.to_string();  // only meaningful pre-resolution
    }
    return "?";
}

const char* binary_symbol(ExprKind k) {
    switch (k) {
        case ExprKind::Add: return "+";
        case ExprKind::Sub: return "-";
        case ExprKind::Mul: return "*";
        case ExprKind::Div: return "/";
        case ExprKind::AmbiguousPowAnd: return "^";
        case ExprKind::Lt: return "<";
        case ExprKind::Gt: return ">";
        case ExprKind::Le: return "<=";
        case ExprKind::Ge: return ">=";
        case ExprKind::Eq: return "==";
        case ExprKind::Neq: return "~=";
        case ExprKind::And: return "^";
        case ExprKind::Or: return "|";
        case ExprKind::Implies: return "=>";
        case ExprKind::Iff: return "<=>";
        default: return nullptr;
    }
}

const char* unary_fn_name(ExprKind k) {
    switch (k) {
        case ExprKind::Abs: return "abs";
        case ExprKind::Sqrt: return "sqrt";
        case ExprKind::Exp: return "exp";
        case ExprKind::Ln: return "ln";
        case ExprKind::Sin: return "sin";
        case ExprKind::Cos: return "cos";
        case ExprKind::Tan: return "tan";
        case ExprKind::Sgn: return "sgn";
        case ExprKind::Floor: return "floor";
        case ExprKind::Ceil: return "ceil";
        default: return nullptr;
    }
}

std::string typed_params_text(const std::vector<TypedParam>& params) {
    std::string out = "{";
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) out += ", ";
        out += "?" + params[i].name + " : " + params[i].type_name;
    }
    out += "}";
    return out;
}

}  // namespace

std::string expr_to_string(const Expression& e) {
    if (const char* sym = binary_symbol(e.kind)) {
        return "(" + expr_to_string(e.args[0]) + " " + sym + " " +
               expr_to_string(e.args[1]) + ")";
    }
    if (const char* fn = unary_fn_name(e.kind)) {
        return std::string(fn) + "[" + expr_to_string(e.args[0]) + "]";
    }
    switch (e.kind) {
        case ExprKind::Constant: return value_text(e.constant);
        case ExprKind::EnumLit: return "@" + e.name;
        case ExprKind::ParamRef: return "?" + e.name;
        case ExprKind::FluentRef: {
            std::string out = e.name;
            if (e.primed) out += "'";
            if (!e.args.empty()) {
                out += "(";
                for (size_t i = 0; i < e.args.size(); ++i) {
                    if (i) out += ", ";
                    out += expr_to_string(e.args[i]);
                }
                out += ")";
            }
            return out;
        }
        case ExprKind::Pow:
            return "pow[" + expr_to_string(e.args[0]) + ", " +
                   expr_to_string(e.args[1]) + "]";
        case ExprKind::Min2:
            return "min[" + expr_to_string(e.args[0]) + ", " +
                   expr_to_string(e.args[1]) + "]";
        case ExprKind::Max2:
            return "max[" + expr_to_string(e.args[0]) + ", " +
                   expr_to_string(e.args[1]) + "]";
        case ExprKind::Neg: return "-(" + expr_to_string(e.args[0]) + ")";
        case ExprKind::Not: return "~(" + expr_to_string(e.args[0]) + ")";
        case ExprKind::EnumNext: return "NEXT(" + expr_to_string(e.args[0]) + ")";
        case ExprKind::EnumPrev: return "PREV(" + expr_to_string(e.args[0]) + ")";
        case ExprKind::Aggregate: {
            std::string out = agg_op_name(e.agg);
            out += "_";
            out += typed_params_text(e.params);
            out += " [" + expr_to_string(e.args[0]) + "]";
            return out;
        }
        case ExprKind::MatrixOp: {
            std::string out = e.matrix_fn == MatrixFn::Det ? "det_" : "inverse_";
            out += typed_params_text(e.params);
            out += " [" + expr_to_string(e.args[0]) + "]";
            return out;
        }
        case ExprKind::IfThenElse:
            return "(if (" + expr_to_string(e.args[0]) + ") then " +
                   expr_to_string(e.args[1]) + " else " +
                   expr_to_string(e.args[2]) + ")";
        case ExprKind::ParamCompare:
            return "(" + expr_to_string(e.args[0]) +
                   (e.negated ? " ~= " : " == ") + expr_to_string(e.args[1]) +
                   ")";
        case ExprKind::Distribution: {
            std::string out = dist_family_name(e.family);
            if (dist_is_vectorized(e.family)) {
                out += "[?" + e.params[0].name;
                if (e.params.size() > 1)
                    out += ", ?" + e.params[1].name + " : " +
                           e.params[1].type_name;
                out += "]";
            }
            out += "(";
            if (e.family == DistFamily::Discrete) {
                out += e.type_name;
                for (size_t i = 0; i < e.args.size(); ++i) {
                    out += ", @" + e.case_members[i] + " : " +
                           expr_to_string(e.args[i]);
                }
            } else {
                for (size_t i = 0; i < e.args.size(); ++i) {
                    if (i) out += ", ";
                    out += expr_to_string(e.args[i]);
                }
            }
            out += ")";
            return out;
        }
        default: break;
    }
    return "<?>";
}

namespace {

std::string literal_text(const Literal& lit) { return lit.to_string(); }

void print_assignments(std::ostringstream& os, const char* section,
                       const std::vector<Assignment>& assigns) {
    os << "    " << section << " {\n";
    for (const auto& a : assigns) {
        os << "        " << a.fluent;
        if (!a.args.empty()) {
            os << "(";
            for (size_t i = 0; i < a.args.size(); ++i) {
                if (i) os << ", ";
                os << a.args[i];
            }
            os << ")";
        }
        os << " = " << literal_text(a.value) << ";\n";
    }
    os << "    };\n";
}

void print_objects(std::ostringstream& os,
                   const std::vector<ObjectsDecl>& objects) {
    if (objects.empty()) return;
    os << "    objects {\n";
    for (const auto& od : objects) {
        os << "        " << od.type << " : {";
        for (size_t i = 0; i < od.names.size(); ++i) {
            if (i) os << ", ";
            os << od.names[i];
        }
        os << "};\n";
    }
    os << "    };\n";
}

void print_conditions(std::ostringstream& os, const char* name,
                      const std::vector<Expression>& conds) {
    if (conds.empty()) return;
    os << "    " << name << " {\n";
    for (const auto& c : conds) os << "        " << expr_to_string(c) << ";\n";
    os << "    };\n";
}

}  // namespace

std::string to_rddl(const LiftedModel& m) {
    std::ostringstream os;
    os << "domain " << m.name << " {\n";
    if (!m.requirements.empty()) {
        os << "    requirements = {";
        for (size_t i = 0; i < m.requirements.size(); ++i) {
            if (i) os << ", ";
            os << m.requirements[i];
        }
        os << "};\n";
    }
    if (!m.enum_types.empty() || !m.object_types.empty()) {
        os << "    types {\n";
        for (const auto& t : m.object_types)
            os << "        " << t << " : object;\n";
        for (const auto& e : m.enum_types) {
            os << "        " << e.name << " : {";
            for (size_t i = 0; i < e.members.size(); ++i) {
                if (i) os << ", ";
                os << "@" << e.members[i];
            }
            os << "};\n";
        }
        os << "    };\n";
    }
    if (!m.pvariables.empty()) {
        os << "    pvariables {\n";
        for (const auto& pv : m.pvariables) {
            os << "        " << pv.name;
            if (!pv.param_types.empty()) {
                os << "(";
                for (size_t i = 0; i < pv.param_types.size(); ++i) {
                    if (i) os << ", ";
                    os << pv.param_types[i];
                }
                os << ")";
            }
            os << " : { " << fluent_class_name(pv.cls) << ", ";
            switch (pv.range.tag) {
                case RangeSpec::Tag::Bool: os << "bool"; break;
                case RangeSpec::Tag::Int: os << "int"; break;
                case RangeSpec::Tag::Real: os << "real"; break;
                case RangeSpec::Tag::Named: os << pv.range.name; break;
            }
            if (pv.default_value)
                os << ", default = " << literal_text(*pv.default_value);
            os << " };\n";
        }
        os << "    };\n";
    }
    if (!m.cpfs.empty()) {
        os << "    cpfs {\n";
        for (const auto& cpf : m.cpfs) {
            os << "        " << cpf.target;
            if (cpf.primed) os << "'";
            if (!cpf.params.empty()) {
                os << "(";
                for (size_t i = 0; i < cpf.params.size(); ++i) {
                    if (i) os << ", ";
                    os << "?" << cpf.params[i].name;
                }
                os << ")";
            }
            os << " = " << expr_to_string(cpf.body) << ";\n";
        }
        os << "    };\n";
    }
    if (m.has_reward) os << "    reward = " << expr_to_string(m.reward) << ";\n";
    print_conditions(os, "state-invariants", m.invariants);
    print_conditions(os, "action-preconditions", m.preconditions);
    print_conditions(os, "termination", m.termination);
    os << "}\n";
    return os.str();
}

std::string to_rddl(const NonFluentsBlock& b) {
    std::ostringstream os;
    os << "non-fluents " << b.name << " {\n";
    if (!b.domain.empty()) os << "    domain = " << b.domain << ";\n";
    print_objects(os, b.objects);
    if (!b.assignments.empty())
        print_assignments(os, "non-fluents", b.assignments);
    os << "}\n";
    return os.str();
}

std::string to_rddl(const InstanceModel& m) {
    std::ostringstream os;
    os << "instance " << m.name << " {\n";
    if (!m.domain.empty()) os << "    domain = " << m.domain << ";\n";
    if (!m.non_fluents.empty())
        os << "    non-fluents = " << m.non_fluents << ";\n";
    print_objects(os, m.objects);
    if (!m.init_state.empty()) print_assignments(os, "init-state", m.init_state);
    if (m.max_nondef_pos_inf)
        os << "    max-nondef-actions = pos-inf;\n";
    else
        os << "    max-nondef-actions = " << m.max_nondef_actions << ";\n";
    os << "    horizon = " << m.horizon << ";\n";
    os << "    discount = " << real_text(m.discount) << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_rddl(const DocumentSet& doc) {
    std::string out;
    if (doc.domain) out += to_rddl(*doc.domain) + "\n";
    for (const auto& b : doc.non_fluents) out += to_rddl(b) + "\n";
    for (const auto& i : doc.instances) out += to_rddl(i) + "\n";
    return out;
}

}  // namespace rddl
