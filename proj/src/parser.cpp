#include "rddl/parser.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

#include "rddl/lexer.hpp"

namespace rddl {

namespace {

const std::unordered_map<std::string_view, AggOp>& agg_map() {
    static const std::unordered_map<std::string_view, AggOp> m = {
        {"sum_", AggOp::Sum},       {"prod_", AggOp::Prod},
        {"min_", AggOp::Min},       {"max_", AggOp::Max},
        {"avg_", AggOp::Avg},       {"forall_", AggOp::Forall},
        {"exists_", AggOp::Exists}, {"argmax_", AggOp::Argmax},
        {"argmin_", AggOp::Argmin},
    };
    return m;
}

const std::unordered_map<std::string_view, ExprKind>& unary_fn_map() {
    static const std::unordered_map<std::string_view, ExprKind> m = {
        {"abs", ExprKind::Abs},     {"sqrt", ExprKind::Sqrt},
        {"exp", ExprKind::Exp},     {"ln", ExprKind::Ln},
        {"sin", ExprKind::Sin},     {"cos", ExprKind::Cos},
        {"tan", ExprKind::Tan},     {"sgn", ExprKind::Sgn},
        {"floor", ExprKind::Floor}, {"ceil", ExprKind::Ceil},
    };
    return m;
}

const std::unordered_map<std::string_view, DistFamily>& dist_map() {
    static const std::unordered_map<std::string_view, DistFamily> m = {
        {"KronDelta", DistFamily::KronDelta},
        {"DiracDelta", DistFamily::DiracDelta},
        {"Bernoulli", DistFamily::Bernoulli},
        {"Discrete", DistFamily::Discrete},
        {"Uniform", DistFamily::Uniform},
        {"Normal", DistFamily::Normal},
        {"Exponential", DistFamily::Exponential},
        {"Poisson", DistFamily::Poisson},
        {"Gamma", DistFamily::Gamma},
        {"Beta", DistFamily::Beta},
        {"Binomial", DistFamily::Binomial},
        {"Student", DistFamily::Student},
        {"MultivariateNormal", DistFamily::MultivariateNormal},
        {"Dirichlet", DistFamily::Dirichlet},
        {"Multinomial", DistFamily::Multinomial},
    };
    return m;
}

int scalar_dist_arity(DistFamily f) {
    switch (f) {
        case DistFamily::KronDelta:
        case DistFamily::DiracDelta:
        case DistFamily::Bernoulli:
        case DistFamily::Exponential:
        case DistFamily::Poisson:
        case DistFamily::Student:
            return 1;
        case DistFamily::Uniform:
        case DistFamily::Normal:
        case DistFamily::Gamma:
        case DistFamily::Beta:
        case DistFamily::Binomial:
            return 2;
        default:
            return -1;
    }
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    DocumentSet parse_document() {
        DocumentSet doc;
        while (cur().kind != TokenKind::EndOfInput) {
            if (accept_punct(";")) continue;
            if (cur().is_keyword("domain")) {
                if (doc.domain) {
                    fail("a file may hold at most one domain block");
                }
                doc.domain = parse_domain(doc);
            } else if (cur().is_keyword("non-fluents")) {
                doc.non_fluents.push_back(parse_non_fluents());
            } else if (cur().is_keyword("instance")) {
                doc.instances.push_back(parse_instance());
            } else {
                fail("expected 'domain', 'non-fluents' or 'instance'");
            }
        }
        return doc;
    }

    Expression parse_bare_expression() {
        Expression e = parse_expr();
        expect_kind(TokenKind::EndOfInput, "end of input");
        return e;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(size_t off = 1) const {
        size_t p = pos_ + off;
        return toks_[p < toks_.size() ? p : toks_.size() - 1];
    }
    void advance() {
        if (pos_ + 1 < toks_.size()) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw RddlError(ErrorCode::Syntax, msg + ", found " + cur().description(),
                        cur().loc);
    }

    void expect_punct(std::string_view p) {
        if (!cur().is_punct(p)) fail("expected '" + std::string(p) + "'");
        advance();
    }
    void expect_keyword(std::string_view k) {
        if (!cur().is_keyword(k)) fail("expected '" + std::string(k) + "'");
        advance();
    }
    void expect_kind(TokenKind k, const std::string& what) {
        if (cur().kind != k) fail("expected " + what);
        advance();
    }
    std::string expect_identifier(const std::string& what) {
        if (cur().kind != TokenKind::Identifier || cur().primed)
            fail("expected " + what);
        std::string name = cur().lexeme;
        advance();
        return name;
    }
    bool accept_punct(std::string_view p) {
        if (cur().is_punct(p)) {
            advance();
            return true;
        }
        return false;
    }

    // ---- blocks ----

    LiftedModel parse_domain(DocumentSet& doc) {
        LiftedModel m;
        m.loc = cur().loc;
        expect_keyword("domain");
        m.name = expect_identifier("domain name");
        expect_punct("{");
        while (!cur().is_punct("}")) {
            if (cur().is_keyword("requirements")) {
                parse_requirements(m);
            } else if (cur().is_keyword("types")) {
                parse_types(m);
            } else if (cur().is_keyword("pvariables")) {
                parse_pvariables(m, doc);
            } else if (cur().is_keyword("cpfs")) {
                parse_cpfs(m);
            } else if (cur().is_keyword("reward")) {
                advance();
                expect_punct("=");
                m.reward = parse_expr();
                m.has_reward = true;
                expect_punct(";");
            } else if (cur().is_keyword("state-invariants")) {
                advance();
                parse_condition_list(m.invariants);
            } else if (cur().is_keyword("action-preconditions")) {
                advance();
                parse_condition_list(m.preconditions);
            } else if (cur().is_keyword("termination")) {
                advance();
                parse_condition_list(m.termination);
            } else if (cur().is_keyword("state-action-constraints")) {
                throw RddlError(
                    ErrorCode::Syntax,
                    "state-action-constraints blocks are deprecated; use "
                    "state-invariants and action-preconditions instead",
                    cur().loc);
            } else {
                fail("expected a domain section");
            }
        }
        expect_punct("}");
        accept_punct(";");
        return m;
    }

    void parse_requirements(LiftedModel& m) {
        expect_keyword("requirements");
        accept_punct("=");
        expect_punct("{");
        while (!cur().is_punct("}")) {
            m.requirements.push_back(expect_identifier("requirement name"));
            if (!accept_punct(",")) break;
        }
        expect_punct("}");
        expect_punct(";");
    }

    void parse_types(LiftedModel& m) {
        expect_keyword("types");
        expect_punct("{");
        while (!cur().is_punct("}")) {
            std::string name = expect_identifier("type name");
            expect_punct(":");
            if (cur().is_keyword("object")) {
                advance();
                m.object_types.push_back(name);
            } else if (cur().is_punct("{")) {
                advance();
                EnumType et;
                et.name = name;
                while (!cur().is_punct("}")) {
                    if (cur().kind != TokenKind::EnumLiteral)
                        fail("expected enum member '@name'");
                    et.members.push_back(cur().lexeme);
                    advance();
                    if (!accept_punct(",")) break;
                }
                expect_punct("}");
                m.enum_types.push_back(std::move(et));
            } else {
                fail("expected 'object' or an enum member list");
            }
            expect_punct(";");
        }
        expect_punct("}");
        expect_punct(";");
    }

    void parse_pvariables(LiftedModel& m, DocumentSet& doc) {
        expect_keyword("pvariables");
        expect_punct("{");
        while (!cur().is_punct("}")) {
            PVariable pv;
            pv.loc = cur().loc;
            pv.name = expect_identifier("fluent name");
            if (accept_punct("(")) {
                while (!cur().is_punct(")")) {
                    pv.param_types.push_back(expect_identifier("parameter type"));
                    if (!accept_punct(",")) break;
                }
                expect_punct(")");
            }
            expect_punct(":");
            expect_punct("{");
            pv.cls = parse_fluent_class();
            expect_punct(",");
            pv.range = parse_range();
            while (accept_punct(",")) {
                if (cur().is_keyword("default")) {
                    advance();
                    expect_punct("=");
                    pv.default_value = parse_literal();
                } else if (cur().is_keyword("level")) {
                    SourceLocation loc = cur().loc;
                    advance();
                    expect_punct("=");
                    if (cur().kind != TokenKind::IntLit)
                        fail("expected an integer level");
                    advance();
                    pv.had_level_annotation = true;
                    doc.warnings.push_back(
                        {Severity::Warning,
                         "explicit fluent level annotations are ignored; "
                         "evaluation order is derived from the CPF dependencies",
                         loc});
                } else {
                    fail("expected 'default' or 'level'");
                }
            }
            expect_punct("}");
            expect_punct(";");
            m.pvariables.push_back(std::move(pv));
        }
        expect_punct("}");
        expect_punct(";");
    }

    FluentClass parse_fluent_class() {
        static const std::unordered_map<std::string_view, FluentClass> classes = {
            {"non-fluent", FluentClass::NonFluent},
            {"state-fluent", FluentClass::State},
            {"action-fluent", FluentClass::Action},
            {"interm-fluent", FluentClass::Interm},
            {"derived-fluent", FluentClass::Derived},
            {"observ-fluent", FluentClass::Observ},
        };
        if (cur().kind == TokenKind::Keyword) {
            auto it = classes.find(cur().lexeme);
            if (it != classes.end()) {
                advance();
                return it->second;
            }
        }
        fail("expected a fluent class");
    }

    RangeSpec parse_range() {
        RangeSpec r;
        r.loc = cur().loc;
        if (cur().is_keyword("bool")) {
            r.tag = RangeSpec::Tag::Bool;
            advance();
        } else if (cur().is_keyword("int")) {
            r.tag = RangeSpec::Tag::Int;
            advance();
        } else if (cur().is_keyword("real")) {
            r.tag = RangeSpec::Tag::Real;
            advance();
        } else {
            r.tag = RangeSpec::Tag::Named;
            r.name = expect_identifier("a range type");
        }
        return r;
    }

    Literal parse_literal() {
        Literal lit;
        lit.loc = cur().loc;
        bool negative = false;
        if (cur().is_punct("-")) {
            negative = true;
            advance();
        }
        if (cur().kind == TokenKind::IntLit) {
            lit = Literal::integer(negative ? -cur().int_value : cur().int_value);
        } else if (cur().kind == TokenKind::RealLit) {
            lit = Literal::real(negative ? -cur().real_value : cur().real_value);
        } else if (negative) {
            fail("expected a number after '-'");
        } else if (cur().is_keyword("true")) {
            lit = Literal::boolean(true);
        } else if (cur().is_keyword("false")) {
            lit = Literal::boolean(false);
        } else if (cur().is_keyword("pos-inf")) {
            lit.tag = Literal::Tag::PosInf;
        } else if (cur().is_keyword("neg-inf")) {
            lit.tag = Literal::Tag::NegInf;
        } else if (cur().kind == TokenKind::EnumLiteral) {
            lit = Literal::member(cur().lexeme);
        } else if (cur().kind == TokenKind::Identifier && !cur().primed) {
            // object literal for object-valued fluents
            lit = Literal::member(cur().lexeme);
        } else {
            fail("expected a literal value");
        }
        lit.loc = cur().loc;
        advance();
        return lit;
    }

    void parse_cpfs(LiftedModel& m) {
        expect_keyword("cpfs");
        expect_punct("{");
        while (!cur().is_punct("}")) {
            Cpf cpf;
            cpf.loc = cur().loc;
            if (cur().kind != TokenKind::Identifier) fail("expected a CPF target");
            cpf.target = cur().lexeme;
            cpf.primed = cur().primed;
            advance();
            if (accept_punct("(")) {
                while (!cur().is_punct(")")) {
                    if (cur().kind != TokenKind::Parameter)
                        fail("expected a parameter '?name'");
                    cpf.params.push_back({cur().lexeme, "", cur().loc});
                    advance();
                    if (!accept_punct(",")) break;
                }
                expect_punct(")");
            }
            expect_punct("=");
            cpf.body = parse_expr();
            expect_punct(";");
            m.cpfs.push_back(std::move(cpf));
        }
        expect_punct("}");
        expect_punct(";");
    }

    void parse_condition_list(std::vector<Expression>& out) {
        expect_punct("{");
        while (!cur().is_punct("}")) {
            out.push_back(parse_expr());
            expect_punct(";");
        }
        expect_punct("}");
        expect_punct(";");
    }

    NonFluentsBlock parse_non_fluents() {
        NonFluentsBlock b;
        b.loc = cur().loc;
        expect_keyword("non-fluents");
        b.name = expect_identifier("non-fluents block name");
        expect_punct("{");
        while (!cur().is_punct("}")) {
            if (cur().is_keyword("domain")) {
                advance();
                expect_punct("=");
                b.domain = expect_identifier("domain name");
                expect_punct(";");
            } else if (cur().is_keyword("objects")) {
                parse_objects(b.objects);
            } else if (cur().is_keyword("non-fluents")) {
                advance();
                parse_assignments(b.assignments);
            } else {
                fail("expected 'domain', 'objects' or 'non-fluents'");
            }
        }
        expect_punct("}");
        accept_punct(";");
        return b;
    }

    InstanceModel parse_instance() {
        InstanceModel inst;
        inst.loc = cur().loc;
        expect_keyword("instance");
        inst.name = expect_identifier("instance name");
        expect_punct("{");
        while (!cur().is_punct("}")) {
            if (cur().is_keyword("domain")) {
                advance();
                expect_punct("=");
                inst.domain = expect_identifier("domain name");
                expect_punct(";");
            } else if (cur().is_keyword("non-fluents")) {
                advance();
                expect_punct("=");
                inst.non_fluents = expect_identifier("non-fluents block name");
                expect_punct(";");
            } else if (cur().is_keyword("objects")) {
                parse_objects(inst.objects);
            } else if (cur().is_keyword("init-state")) {
                advance();
                parse_assignments(inst.init_state);
            } else if (cur().is_keyword("max-nondef-actions")) {
                advance();
                expect_punct("=");
                if (cur().is_keyword("pos-inf")) {
                    inst.max_nondef_pos_inf = true;
                    advance();
                } else if (cur().kind == TokenKind::IntLit) {
                    inst.max_nondef_pos_inf = false;
                    inst.max_nondef_actions = cur().int_value;
                    advance();
                } else {
                    fail("expected an integer or 'pos-inf'");
                }
                expect_punct(";");
            } else if (cur().is_keyword("horizon")) {
                advance();
                expect_punct("=");
                if (cur().kind != TokenKind::IntLit)
                    fail("expected an integer horizon");
                inst.horizon = cur().int_value;
                advance();
                expect_punct(";");
            } else if (cur().is_keyword("discount")) {
                advance();
                expect_punct("=");
                Literal lit = parse_literal();
                if (lit.tag == Literal::Tag::Real)
                    inst.discount = lit.r;
                else if (lit.tag == Literal::Tag::Int)
                    inst.discount = static_cast<double>(lit.i);
                else
                    fail("expected a numeric discount");
                expect_punct(";");
            } else {
                fail("expected an instance section");
            }
        }
        expect_punct("}");
        accept_punct(";");
        return inst;
    }

    void parse_objects(std::vector<ObjectsDecl>& out) {
        expect_keyword("objects");
        expect_punct("{");
        while (!cur().is_punct("}")) {
            ObjectsDecl od;
            od.loc = cur().loc;
            od.type = expect_identifier("object type name");
            expect_punct(":");
            expect_punct("{");
            while (!cur().is_punct("}")) {
                od.names.push_back(expect_identifier("object name"));
                if (!accept_punct(",")) break;
            }
            expect_punct("}");
            expect_punct(";");
            out.push_back(std::move(od));
        }
        expect_punct("}");
        expect_punct(";");
    }

    void parse_assignments(std::vector<Assignment>& out) {
        expect_punct("{");
        while (!cur().is_punct("}")) {
            Assignment a;
            a.loc = cur().loc;
            bool negated = false;
            if (accept_punct("~")) negated = true;
            a.fluent = expect_identifier("fluent name");
            if (accept_punct("(")) {
                while (!cur().is_punct(")")) {
                    a.args.push_back(expect_identifier("object name"));
                    if (!accept_punct(",")) break;
                }
                expect_punct(")");
            }
            if (negated) {
                a.value = Literal::boolean(false);
            } else if (accept_punct("=")) {
                a.value = parse_literal();
            } else {
                a.value = Literal::boolean(true);  // bare boolean shorthand
            }
            expect_punct(";");
            out.push_back(std::move(a));
        }
        expect_punct("}");
        expect_punct(";");
    }

    // ---- expressions ----

    Expression parse_expr() { return parse_iff(); }

    Expression parse_iff() {
        Expression lhs = parse_implies();
        while (cur().is_punct("<=>")) {
            SourceLocation loc = cur().loc;
            advance();
            lhs = make_binary(ExprKind::Iff, std::move(lhs), parse_implies(), loc);
        }
        return lhs;
    }

    Expression parse_implies() {
        Expression lhs = parse_or();
        if (cur().is_punct("=>")) {
            SourceLocation loc = cur().loc;
            advance();
            return make_binary(ExprKind::Implies, std::move(lhs), parse_implies(),
                               loc);  // right-associative
        }
        return lhs;
    }

    Expression parse_or() {
        Expression lhs = parse_and();
        while (cur().is_punct("|")) {
            SourceLocation loc = cur().loc;
            advance();
            lhs = make_binary(ExprKind::Or, std::move(lhs), parse_and(), loc);
        }
        return lhs;
    }

    Expression parse_and() {
        Expression lhs = parse_relational();
        while (cur().is_punct("^")) {
            SourceLocation loc = cur().loc;
            advance();
            lhs = make_binary(ExprKind::AmbiguousPowAnd, std::move(lhs),
                              parse_relational(), loc);
        }
        return lhs;
    }

    Expression parse_relational() {
        Expression lhs = parse_additive();
        while (true) {
            ExprKind kind;
            if (cur().is_punct("<")) kind = ExprKind::Lt;
            else if (cur().is_punct(">")) kind = ExprKind::Gt;
            else if (cur().is_punct("<=")) kind = ExprKind::Le;
            else if (cur().is_punct(">=")) kind = ExprKind::Ge;
            else if (cur().is_punct("==")) kind = ExprKind::Eq;
            else if (cur().is_punct("~=")) kind = ExprKind::Neq;
            else break;
            SourceLocation loc = cur().loc;
            advance();
            Expression rhs = parse_additive();
            if ((kind == ExprKind::Eq || kind == ExprKind::Neq) &&
                (lhs.kind == ExprKind::ParamRef || rhs.kind == ExprKind::ParamRef)) {
                Expression cmp;
                cmp.kind = ExprKind::ParamCompare;
                cmp.negated = kind == ExprKind::Neq;
                cmp.loc = loc;
                cmp.args.push_back(std::move(lhs));
                cmp.args.push_back(std::move(rhs));
                lhs = std::move(cmp);
            } else {
                lhs = make_binary(kind, std::move(lhs), std::move(rhs), loc);
            }
        }
        return lhs;
    }

    Expression parse_additive() {
        Expression lhs = parse_multiplicative();
        while (cur().is_punct("+") || cur().is_punct("-")) {
            ExprKind kind = cur().is_punct("+") ? ExprKind::Add : ExprKind::Sub;
            SourceLocation loc = cur().loc;
            advance();
            lhs = make_binary(kind, std::move(lhs), parse_multiplicative(), loc);
        }
        return lhs;
    }

    Expression parse_multiplicative() {
        Expression lhs = parse_unary();
        while (cur().is_punct("*") || cur().is_punct("/")) {
            ExprKind kind = cur().is_punct("*") ? ExprKind::Mul : ExprKind::Div;
            SourceLocation loc = cur().loc;
            advance();
            lhs = make_binary(kind, std::move(lhs), parse_unary(), loc);
        }
        return lhs;
    }

    Expression parse_unary() {
        if (cur().is_punct("~")) {
            SourceLocation loc = cur().loc;
            advance();
            return make_unary(ExprKind::Not, parse_unary(), loc);
        }
        if (cur().is_punct("-")) {
            SourceLocation loc = cur().loc;
            advance();
            Expression inner = parse_unary();
            if (inner.kind == ExprKind::Constant && inner.constant.is_int())
                return make_constant(Value::integer(-inner.constant.as_int()), loc);
            if (inner.kind == ExprKind::Constant && inner.constant.is_real())
                return make_constant(
                    Value::real_unchecked(-inner.constant.as_real()), loc);
            return make_unary(ExprKind::Neg, std::move(inner), loc);
        }
        return parse_primary();
    }

    Expression parse_primary() {
        const Token& t = cur();
        SourceLocation loc = t.loc;

        if (t.is_punct("(")) {
            advance();
            Expression e = parse_expr();
            expect_punct(")");
            return e;
        }
        if (t.kind == TokenKind::IntLit) {
            advance();
            return make_constant(Value::integer(t.int_value), loc);
        }
        if (t.kind == TokenKind::RealLit) {
            advance();
            return make_constant(Value::real(t.real_value), loc);
        }
        if (t.is_keyword("true") || t.is_keyword("false")) {
            bool v = t.is_keyword("true");
            advance();
            return make_constant(Value::boolean(v), loc);
        }
        if (t.is_keyword("pos-inf") || t.is_keyword("neg-inf")) {
            double v = t.is_keyword("pos-inf")
                           ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
            advance();
            return make_constant(Value::real_unchecked(v), loc);
        }
        if (t.kind == TokenKind::EnumLiteral) {
            Expression e;
            e.kind = ExprKind::EnumLit;
            e.name = t.lexeme;
            e.loc = loc;
            advance();
            return e;
        }
        if (t.kind == TokenKind::Parameter) {
            advance();
            return make_param_ref(t.lexeme, loc);
        }
        if (t.is_keyword("if")) {
            advance();
            expect_punct("(");
            Expression cond = parse_expr();
            expect_punct(")");
            expect_keyword("then");
            Expression then_branch = parse_expr();
            expect_keyword("else");
            Expression else_branch = parse_expr();
            Expression e;
            e.kind = ExprKind::IfThenElse;
            e.loc = loc;
            e.args.push_back(std::move(cond));
            e.args.push_back(std::move(then_branch));
            e.args.push_back(std::move(else_branch));
            return e;
        }
        if (t.is_keyword("NEXT") || t.is_keyword("PREV")) {
            ExprKind kind =
                t.is_keyword("NEXT") ? ExprKind::EnumNext : ExprKind::EnumPrev;
            advance();
            expect_punct("(");
            Expression arg = parse_expr();
            expect_punct(")");
            return make_unary(kind, std::move(arg), loc);
        }
        if (t.kind == TokenKind::Keyword && dist_map().count(t.lexeme)) {
            return parse_distribution();
        }
        if (t.kind == TokenKind::Identifier && !t.primed) {
            auto agg_it = agg_map().find(t.lexeme);
            if (agg_it != agg_map().end() && peek().is_punct("{")) {
                return parse_aggregation(agg_it->second);
            }
            if ((t.lexeme == "det_" || t.lexeme == "inverse_") &&
                peek().is_punct("{")) {
                return parse_matrix_op(t.lexeme == "det_" ? MatrixFn::Det
                                                          : MatrixFn::Inverse);
            }
            if (peek().is_punct("[")) {
                auto fn = unary_fn_map().find(t.lexeme);
                if (fn != unary_fn_map().end()) {
                    advance();
                    expect_punct("[");
                    Expression arg = parse_expr();
                    expect_punct("]");
                    return make_unary(fn->second, std::move(arg), loc);
                }
                if (t.lexeme == "pow" || t.lexeme == "min" || t.lexeme == "max") {
                    ExprKind kind = t.lexeme == "pow" ? ExprKind::Pow
                                    : t.lexeme == "min" ? ExprKind::Min2
                                                        : ExprKind::Max2;
                    advance();
                    expect_punct("[");
                    Expression a = parse_expr();
                    expect_punct(",");
                    Expression b = parse_expr();
                    expect_punct("]");
                    return make_binary(kind, std::move(a), std::move(b), loc);
                }
            }
        }
        if (t.kind == TokenKind::Identifier) {
            std::string name = t.lexeme;
            bool primed = t.primed;
            advance();
            std::vector<Expression> args;
            if (accept_punct("(")) {
                while (!cur().is_punct(")")) {
                    args.push_back(parse_expr());
                    if (!accept_punct(",")) break;
                }
                expect_punct(")");
            }
            return make_fluent_ref(std::move(name), std::move(args), primed, loc);
        }
        fail("expected an expression");
    }

    std::vector<TypedParam> parse_typed_params() {
        std::vector<TypedParam> params;
        expect_punct("{");
        while (!cur().is_punct("}")) {
            TypedParam p;
            p.loc = cur().loc;
            if (cur().kind != TokenKind::Parameter)
                fail("expected a parameter '?name'");
            p.name = cur().lexeme;
            advance();
            expect_punct(":");
            p.type_name = expect_identifier("a type name");
            params.push_back(std::move(p));
            if (!accept_punct(",")) break;
        }
        expect_punct("}");
        if (params.empty()) fail("expected at least one typed parameter");
        return params;
    }

    Expression parse_aggregation(AggOp op) {
        Expression e;
        e.kind = ExprKind::Aggregate;
        e.agg = op;
        e.loc = cur().loc;
        advance();  // the 'xxx_' identifier
        e.params = parse_typed_params();
        expect_punct("[");
        e.args.push_back(parse_expr());
        expect_punct("]");
        return e;
    }

    Expression parse_matrix_op(MatrixFn fn) {
        Expression e;
        e.kind = ExprKind::MatrixOp;
        e.matrix_fn = fn;
        e.loc = cur().loc;
        advance();
        e.params = parse_typed_params();
        if (e.params.size() != 2)
            throw RddlError(ErrorCode::Syntax,
                            "matrix operations take exactly two typed parameters "
                            "(row and column)",
                            e.loc);
        expect_punct("[");
        e.args.push_back(parse_expr());
        expect_punct("]");
        return e;
    }

    Expression parse_distribution() {
        Expression e;
        e.kind = ExprKind::Distribution;
        e.family = dist_map().at(cur().lexeme);
        e.loc = cur().loc;
        advance();

        if (dist_is_vectorized(e.family)) {
            expect_punct("[");
            if (cur().kind != TokenKind::Parameter)
                fail("expected the sampled component parameter '?name'");
            e.params.push_back({cur().lexeme, "", cur().loc});
            advance();
            if (accept_punct(",")) {
                TypedParam helper;
                if (cur().kind != TokenKind::Parameter)
                    fail("expected a helper parameter '?name'");
                helper.name = cur().lexeme;
                helper.loc = cur().loc;
                advance();
                expect_punct(":");
                helper.type_name = expect_identifier("a type name");
                e.params.push_back(std::move(helper));
            }
            expect_punct("]");
            if (e.family == DistFamily::MultivariateNormal && e.params.size() != 2)
                throw RddlError(ErrorCode::Syntax,
                                "MultivariateNormal needs a helper column "
                                "parameter: MultivariateNormal[?i, ?j : type](...)",
                                e.loc);
            if (e.family != DistFamily::MultivariateNormal && e.params.size() != 1)
                fail("this distribution takes a single component parameter");
            expect_punct("(");
            while (!cur().is_punct(")")) {
                e.args.push_back(parse_expr());
                if (!accept_punct(",")) break;
            }
            expect_punct(")");
            size_t want = e.family == DistFamily::Dirichlet ? 1 : 2;
            if (e.args.size() != want)
                throw RddlError(ErrorCode::Syntax,
                                std::string(dist_family_name(e.family)) +
                                    " takes " + std::to_string(want) +
                                    " argument(s)",
                                e.loc);
            return e;
        }

        if (e.family == DistFamily::Discrete) {
            expect_punct("(");
            e.type_name = expect_identifier("an enum type name");
            while (accept_punct(",")) {
                if (cur().kind != TokenKind::EnumLiteral)
                    fail("expected a case label '@member'");
                e.case_members.push_back(cur().lexeme);
                advance();
                expect_punct(":");
                e.args.push_back(parse_expr());
            }
            expect_punct(")");
            if (e.args.empty())
                throw RddlError(ErrorCode::Syntax,
                                "Discrete needs at least one case", e.loc);
            return e;
        }

        expect_punct("(");
        while (!cur().is_punct(")")) {
            e.args.push_back(parse_expr());
            if (!accept_punct(",")) break;
        }
        expect_punct(")");
        int arity = scalar_dist_arity(e.family);
        if (static_cast<int>(e.args.size()) != arity)
            throw RddlError(ErrorCode::Syntax,
                            std::string(dist_family_name(e.family)) + " takes " +
                                std::to_string(arity) + " argument(s)",
                            e.loc);
        return e;
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

DocumentSet parse(std::string_view source) {
    Parser p(tokenize(source));
    return p.parse_document();
}

Expression parse_expression(std::string_view source) {
    Parser p(tokenize(source));
    return p.parse_bare_expression();
}

}  // namespace rddl
