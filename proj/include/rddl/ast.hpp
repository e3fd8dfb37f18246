#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rddl/value.hpp"

namespace rddl {

enum class FluentClass : uint8_t {
    NonFluent,
    State,
    Action,
    Derived,
    Interm,
    Observ,
};
constexpr int kFluentClassCount = 6;
const char* fluent_class_name(FluentClass c);

enum class ExprKind : uint8_t {
    Constant,
    EnumLit,    // unresolved @member (resolved to Constant while grounding)
    FluentRef,  // name + argument expressions; primed flag for next-state refs
    ParamRef,   // ?p
    // binary arithmetic
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    AmbiguousPowAnd,  // '^' before type disambiguation
    Min2,
    Max2,
    // unary
    Neg,
    Abs,
    Sqrt,
    Exp,
    Ln,
    Sin,
    Cos,
    Tan,
    Sgn,
    Floor,
    Ceil,
    Not,
    EnumNext,
    EnumPrev,
    // relational
    Lt,
    Gt,
    Le,
    Ge,
    Eq,
    Neq,
    // boolean connectives
    And,
    Or,
    Implies,
    Iff,
    // structured
    Aggregate,
    IfThenElse,
    ParamCompare,  // ?p == ?q / ?p ~= ?q (also ?p vs object/enum literal)
    Distribution,
    MatrixOp,
};

enum class AggOp : uint8_t {
    Sum,
    Prod,
    Min,
    Max,
    Avg,
    Forall,
    Exists,
    Argmax,
    Argmin,
};
const char* agg_op_name(AggOp op);

enum class DistFamily : uint8_t {
    KronDelta,
    DiracDelta,
    Bernoulli,
    Discrete,
    Uniform,
    Normal,
    Exponential,
    Poisson,
    Gamma,
    Beta,
    Binomial,
    Student,
    MultivariateNormal,
    Dirichlet,
    Multinomial,
};
const char* dist_family_name(DistFamily f);
bool dist_is_vectorized(DistFamily f);

enum class MatrixFn : uint8_t { Det, Inverse };

struct TypedParam {
    std::string name;       // includes no '?'
    std::string type_name;  // enum or object type
    SourceLocation loc{};

    bool operator==(const TypedParam& o) const {
        return name == o.name && type_name == o.type_name;
    }
};

// Source-level literal; enum members stay by-name until types are resolved.
struct Literal {
    enum class Tag : uint8_t { Bool, Int, Real, EnumName, PosInf, NegInf };
    Tag tag = Tag::Bool;
    bool b = false;
    int64_t i = 0;
    double r = 0.0;
    std::string enum_name;
    SourceLocation loc{};

    static Literal boolean(bool v) { Literal l; l.tag = Tag::Bool; l.b = v; return l; }
    static Literal integer(int64_t v) { Literal l; l.tag = Tag::Int; l.i = v; return l; }
    static Literal real(double v) { Literal l; l.tag = Tag::Real; l.r = v; return l; }
    static Literal member(std::string name) {
        Literal l; l.tag = Tag::EnumName; l.enum_name = std::move(name); return l;
    }

    bool operator==(const Literal& o) const {
        return tag == o.tag && b == o.b && i == o.i && r == o.r &&
               enum_name == o.enum_name;
    }
    std::string to_string() const;
};

// One expression tree node. A single struct covers every node kind; the
// grounder fills the resolution fields (fluent_slot and friends) so the
// engine never re-parses names.
struct Expression {
    ExprKind kind = ExprKind::Constant;
    SourceLocation loc{};
    std::vector<Expression> args;

    Value constant{};            // Constant
    std::string name;            // FluentRef / ParamRef / EnumLit; vectorized
                                 // distributions keep their share-key here
    bool primed = false;         // FluentRef to a next-state fluent
    bool negated = false;        // ParamCompare: ~= instead of ==
    std::vector<TypedParam> params;  // Aggregate / MatrixOp / vectorized dist
    AggOp agg = AggOp::Sum;
    DistFamily family = DistFamily::KronDelta;
    MatrixFn matrix_fn = MatrixFn::Det;
    std::string type_name;                  // Discrete: enum type name
    std::vector<std::string> case_members;  // Discrete: case labels

    // --- grounded resolution (not part of structural equality) ---
    int fluent_slot = -1;           // index into the grounded class table
    FluentClass fluent_class = FluentClass::NonFluent;
    std::vector<int> dyn_dims;      // dynamic ref: enum cardinality per argument
    std::vector<int> dyn_table;     // dynamic ref: flattened member tuple -> slot
    int vec_component = -1;         // vectorized dist / inverse: row index
    int vec_component2 = -1;        // inverse: column index
    int vec_dim = 0;                // vector length / matrix dimension
    Type static_type{};             // inferred while grounding

    bool is_leaf() const { return args.empty(); }
};

// Structural equality: kinds, payloads and children; ignores locations and
// grounded annotations.
bool expr_equal(const Expression& a, const Expression& b);

Expression make_constant(Value v, SourceLocation loc = {});
Expression make_fluent_ref(std::string name, std::vector<Expression> args = {},
                           bool primed = false, SourceLocation loc = {});
Expression make_param_ref(std::string name, SourceLocation loc = {});
Expression make_unary(ExprKind kind, Expression arg, SourceLocation loc = {});
Expression make_binary(ExprKind kind, Expression lhs, Expression rhs,
                       SourceLocation loc = {});

struct RangeSpec {
    enum class Tag : uint8_t { Bool, Int, Real, Named };
    Tag tag = Tag::Bool;
    std::string name;  // enum or object type when Named
    SourceLocation loc{};

    bool operator==(const RangeSpec& o) const {
        return tag == o.tag && name == o.name;
    }
};

struct PVariable {
    std::string name;
    FluentClass cls = FluentClass::State;
    std::vector<std::string> param_types;
    RangeSpec range;
    std::optional<Literal> default_value;
    bool had_level_annotation = false;
    SourceLocation loc{};
};

struct Cpf {
    std::string target;
    bool primed = false;
    std::vector<TypedParam> params;
    Expression body;
    SourceLocation loc{};
};

struct LiftedModel {
    std::string name;
    std::vector<std::string> requirements;
    std::vector<EnumType> enum_types;
    std::vector<std::string> object_types;
    std::vector<PVariable> pvariables;
    std::vector<Cpf> cpfs;
    bool has_reward = false;
    Expression reward;
    std::vector<Expression> preconditions;
    std::vector<Expression> invariants;
    std::vector<Expression> termination;
    SourceLocation loc{};

    const PVariable* find_pvariable(const std::string& n) const {
        for (const auto& pv : pvariables)
            if (pv.name == n) return &pv;
        return nullptr;
    }
    int find_enum(const std::string& n) const {
        for (size_t i = 0; i < enum_types.size(); ++i)
            if (enum_types[i].name == n) return static_cast<int>(i);
        return -1;
    }
    bool is_object_type(const std::string& n) const {
        for (const auto& t : object_types)
            if (t == n) return true;
        return false;
    }
};

struct ObjectsDecl {
    std::string type;
    std::vector<std::string> names;
    SourceLocation loc{};
};

struct Assignment {
    std::string fluent;
    std::vector<std::string> args;
    Literal value;
    SourceLocation loc{};
};

struct NonFluentsBlock {
    std::string name;
    std::string domain;
    std::vector<ObjectsDecl> objects;
    std::vector<Assignment> assignments;
    SourceLocation loc{};
};

struct InstanceModel {
    std::string name;
    std::string domain;
    std::string non_fluents;  // referenced block name; may be empty
    std::vector<ObjectsDecl> objects;
    std::vector<Assignment> init_state;
    bool max_nondef_pos_inf = true;  // unbounded unless the instance caps it
    int64_t max_nondef_actions = 0;
    int64_t horizon = 0;
    double discount = 1.0;
    SourceLocation loc{};
};

enum class Severity : uint8_t { Warning, Error };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string message;
    SourceLocation loc{};

    std::string to_string() const;
};

bool has_errors(const std::vector<Diagnostic>& diags);

struct DocumentSet {
    std::optional<LiftedModel> domain;
    std::vector<NonFluentsBlock> non_fluents;
    std::vector<InstanceModel> instances;
    std::vector<Diagnostic> warnings;  // parse-time warnings (e.g. level annotations)
};

bool lifted_equal(const LiftedModel& a, const LiftedModel& b);
bool instance_equal(const InstanceModel& a, const InstanceModel& b);
bool non_fluents_equal(const NonFluentsBlock& a, const NonFluentsBlock& b);
bool document_equal(const DocumentSet& a, const DocumentSet& b);

}  // namespace rddl
