#include "rddl/value.hpp"

#include <cmath>
#include <sstream>

namespace rddl {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Bool: return "bool";
        case Kind::Int: return "int";
        case Kind::Real: return "real";
        case Kind::Enum: return "enum";
    }
    return "?";
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Lexical: return "lexical error";
        case ErrorCode::Syntax: return "syntax error";
        case ErrorCode::Validation: return "validation error";
        case ErrorCode::Grounding: return "grounding error";
        case ErrorCode::Cycle: return "cyclic dependency";
        case ErrorCode::Evaluation: return "evaluation error";
        case ErrorCode::Sampling: return "sampling error";
        case ErrorCode::Relaxation: return "relaxation error";
        case ErrorCode::EnvUsage: return "environment error";
        case ErrorCode::Config: return "configuration error";
        case ErrorCode::Io: return "i/o error";
    }
    return "error";
}

std::string RddlError::format(ErrorCode code, const std::string& message,
                              SourceLocation loc) {
    std::string out = error_code_name(code);
    if (loc.valid()) out += " at " + loc.to_string();
    out += ": ";
    out += message;
    return out;
}

Value Value::real(double r) {
    if (!std::isfinite(r)) {
        throw RddlError(ErrorCode::Evaluation,
                        "non-finite real value produced");
    }
    return Value(r);
}

double Value::to_double() const {
    switch (kind()) {
        case Kind::Bool: return as_bool() ? 1.0 : 0.0;
        case Kind::Int: return static_cast<double>(as_int());
        case Kind::Real: return as_real();
        case Kind::Enum:
            throw RddlError(ErrorCode::Evaluation,
                            "enum value used in a numeric context");
    }
    return 0.0;
}

std::string Value::to_string() const {
    switch (kind()) {
        case Kind::Bool: return as_bool() ? "true" : "false";
        case Kind::Int: return std::to_string(as_int());
        case Kind::Real: {
            std::ostringstream os;
            os.precision(17);
            os << as_real();
            return os.str();
        }
        case Kind::Enum:
            return "@<" + std::to_string(as_enum().type) + ":" +
                   std::to_string(as_enum().member) + ">";
    }
    return "?";
}

int TypeTable::add_enum(EnumType et) {
    enums_.push_back(std::move(et));
    return static_cast<int>(enums_.size()) - 1;
}

int TypeTable::add_object_type(std::string name) {
    objects_.push_back(ObjectType{std::move(name), {}});
    return static_cast<int>(objects_.size()) - 1;
}

int TypeTable::enum_id(const std::string& name) const {
    for (size_t i = 0; i < enums_.size(); ++i)
        if (enums_[i].name == name) return static_cast<int>(i);
    return -1;
}

int TypeTable::object_type_id(const std::string& name) const {
    for (size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i].name == name) return static_cast<int>(i);
    return -1;
}

EnumRef TypeTable::resolve_member(const std::string& member) const {
    EnumRef ref;
    for (size_t t = 0; t < enums_.size(); ++t) {
        int m = enums_[t].find_member(member);
        if (m >= 0) {
            if (ref.type >= 0) return EnumRef{-2, -1};  // ambiguous
            ref = EnumRef{static_cast<int32_t>(t), m};
        }
    }
    return ref;
}

std::string TypeTable::value_to_string(const Value& v) const {
    if (v.is_enum()) {
        EnumRef e = v.as_enum();
        if (e.type >= 0 && e.type < static_cast<int32_t>(enums_.size()) &&
            e.member >= 0 &&
            e.member < static_cast<int32_t>(enums_[e.type].members.size())) {
            return "@" + enums_[e.type].members[e.member];
        }
    }
    return v.to_string();
}

}  // namespace rddl
