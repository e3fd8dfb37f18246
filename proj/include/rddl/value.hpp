#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "rddl/error.hpp"

namespace rddl {

enum class Kind : uint8_t { Bool, Int, Real, Enum };

const char* kind_name(Kind k);

// Reference to a member of an enumerated type, by table id and member index.
struct EnumRef {
    int32_t type = -1;
    int32_t member = -1;

    bool operator==(const EnumRef&) const = default;
};

// Tagged runtime value. Reals and ints are kept finite: the factory
// functions reject NaN/inf so no simulation state can hold them.
class Value {
public:
    Value() : v_(false) {}

    static Value boolean(bool b) { return Value(b); }
    static Value integer(int64_t i) { return Value(i); }
    static Value real(double r);
    // Bypasses the finiteness check; used for bounds (+-inf markers).
    static Value real_unchecked(double r) { return Value(r); }
    static Value enumerated(int32_t type, int32_t member) {
        return Value(EnumRef{type, member});
    }

    Kind kind() const { return static_cast<Kind>(v_.index()); }
    bool is_bool() const { return kind() == Kind::Bool; }
    bool is_int() const { return kind() == Kind::Int; }
    bool is_real() const { return kind() == Kind::Real; }
    bool is_enum() const { return kind() == Kind::Enum; }
    bool is_numeric() const { return is_int() || is_real(); }

    bool as_bool() const { return std::get<bool>(v_); }
    int64_t as_int() const { return std::get<int64_t>(v_); }
    double as_real() const { return std::get<double>(v_); }
    EnumRef as_enum() const { return std::get<EnumRef>(v_); }

    // Numeric view with promotion (bool -> 0/1, int -> double).
    double to_double() const;

    bool operator==(const Value&) const = default;

    std::string to_string() const;  // enums print as @<member-index>

private:
    explicit Value(bool b) : v_(b) {}
    explicit Value(int64_t i) : v_(i) {}
    explicit Value(double r) : v_(r) {}
    explicit Value(EnumRef e) : v_(e) {}

    std::variant<bool, int64_t, double, EnumRef> v_;
};

// Static type of an expression or fluent range.
struct Type {
    Kind kind = Kind::Bool;
    int32_t enum_type = -1;  // valid when kind == Enum

    bool operator==(const Type&) const = default;

    static Type boolean() { return {Kind::Bool, -1}; }
    static Type integer() { return {Kind::Int, -1}; }
    static Type real() { return {Kind::Real, -1}; }
    static Type enumerated(int32_t id) { return {Kind::Enum, id}; }
};

struct EnumType {
    std::string name;
    std::vector<std::string> members;

    int find_member(const std::string& m) const {
        for (size_t i = 0; i < members.size(); ++i)
            if (members[i] == m) return static_cast<int>(i);
        return -1;
    }
};

struct ObjectType {
    std::string name;
    std::vector<std::string> objects;  // filled from the instance, declaration order
};

// Enumerated and object types of a model. Enum ids are stable between the
// lifted and grounded forms; object lists are populated while grounding.
class TypeTable {
public:
    int add_enum(EnumType et);
    int add_object_type(std::string name);

    int enum_id(const std::string& name) const;
    int object_type_id(const std::string& name) const;
    bool has_type(const std::string& name) const {
        return enum_id(name) >= 0 || object_type_id(name) >= 0;
    }

    const EnumType& enum_at(int id) const { return enums_.at(id); }
    ObjectType& object_at(int id) { return objects_.at(id); }
    const ObjectType& object_at(int id) const { return objects_.at(id); }
    size_t enum_count() const { return enums_.size(); }
    size_t object_type_count() const { return objects_.size(); }

    // Member name lookup across all enums; -1 type if absent, -2 if ambiguous.
    EnumRef resolve_member(const std::string& member) const;

    std::string value_to_string(const Value& v) const;

private:
    std::vector<EnumType> enums_;
    std::vector<ObjectType> objects_;
};

}  // namespace rddl
