#include "rddl/validate.hpp"

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace rddl {

namespace {

class Checker {
public:
    Checker(const LiftedModel& domain) : domain_(domain) {}

    std::vector<Diagnostic> diags;

    void error(const std::string& msg, SourceLocation loc) {
        diags.push_back({Severity::Error, msg, loc});
    }
    void warn(const std::string& msg, SourceLocation loc) {
        diags.push_back({Severity::Warning, msg, loc});
    }

    void check_domain() {
        check_types();
        check_pvariables();
        check_cpfs();
        if (!domain_.has_reward)
            error("domain '" + domain_.name + "' has no reward definition",
                  domain_.loc);
        else
            check_expr(domain_.reward, {}, false);
        for (const auto& e : domain_.preconditions) check_expr(e, {}, false);
        for (const auto& e : domain_.invariants) check_expr(e, {}, false);
        for (const auto& e : domain_.termination) check_expr(e, {}, false);
    }

    void preload_objects(const InstanceModel& inst, const NonFluentsBlock* nf) {
        collect_objects(inst.objects);
        if (nf) collect_objects(nf->objects);
    }

    void check_instance(const InstanceModel& inst, const NonFluentsBlock* nf) {
        if (!inst.domain.empty() && inst.domain != domain_.name)
            error("instance references domain '" + inst.domain +
                      "' but the domain block is named '" + domain_.name + "'",
                  inst.loc);
        if (nf && !nf->domain.empty() && nf->domain != domain_.name)
            error("non-fluents block references domain '" + nf->domain +
                      "' but the domain block is named '" + domain_.name + "'",
                  nf->loc);

        if (nf)
            for (const auto& a : nf->assignments)
                check_assignment(a, FluentClass::NonFluent,
                                 "non-fluents assignment");
        for (const auto& a : inst.init_state)
            check_assignment(a, FluentClass::State, "init-state entry");

        if (inst.horizon < 1)
            error("horizon must be a positive integer", inst.loc);
        if (!(inst.discount > 0.0 && inst.discount <= 1.0))
            error("discount must lie in (0, 1]", inst.loc);
        if (!inst.max_nondef_pos_inf && inst.max_nondef_actions < 1)
            error("max-nondef-actions must be positive or pos-inf", inst.loc);
    }

private:
    void check_types() {
        std::set<std::string> names;
        std::map<std::string, std::string> member_owner;
        for (const auto& t : domain_.object_types) {
            if (!names.insert(t).second)
                error("type '" + t + "' declared twice", domain_.loc);
        }
        for (const auto& e : domain_.enum_types) {
            if (!names.insert(e.name).second)
                error("type '" + e.name + "' declared twice", domain_.loc);
            std::set<std::string> members;
            for (const auto& m : e.members) {
                if (!members.insert(m).second)
                    error("enum type '" + e.name + "' repeats member '@" + m +
                              "'",
                          domain_.loc);
                auto [it, fresh] = member_owner.emplace(m, e.name);
                if (!fresh)
                    error("enum member '@" + m + "' appears in both '" +
                              it->second + "' and '" + e.name +
                              "'; members must be unambiguous",
                          domain_.loc);
            }
        }
    }

    bool type_declared(const std::string& name) const {
        return domain_.find_enum(name) >= 0 || domain_.is_object_type(name);
    }

    void check_pvariables() {
        std::set<std::string> seen;
        for (const auto& pv : domain_.pvariables) {
            if (!seen.insert(pv.name).second)
                error("fluent '" + pv.name + "' declared twice", pv.loc);
            for (const auto& pt : pv.param_types)
                if (!type_declared(pt))
                    error("fluent '" + pv.name + "' uses undeclared parameter "
                          "type '" + pt + "'",
                          pv.loc);
            if (pv.range.tag == RangeSpec::Tag::Named &&
                !type_declared(pv.range.name))
                error("fluent '" + pv.name + "' has undeclared range type '" +
                          pv.range.name + "'",
                      pv.loc);

            bool needs_default = pv.cls == FluentClass::NonFluent ||
                                 pv.cls == FluentClass::State ||
                                 pv.cls == FluentClass::Action;
            if (needs_default && !pv.default_value)
                error("fluent '" + pv.name + "' (" +
                          fluent_class_name(pv.cls) +
                          ") requires a default value",
                      pv.loc);
            if (!needs_default && pv.default_value)
                error(std::string(fluent_class_name(pv.cls)) + " '" + pv.name +
                          "' must not carry a default value",
                      pv.loc);
            if (pv.default_value)
                check_literal_range(*pv.default_value, pv.range,
                                    "default value of '" + pv.name + "'");
        }
    }

    void check_literal_range(const Literal& lit, const RangeSpec& range,
                             const std::string& what) {
        auto mismatch = [&](const char* expected) {
            error("type mismatch: " + what + " must be " + expected,
                  lit.loc.valid() ? lit.loc : range.loc);
        };
        switch (range.tag) {
            case RangeSpec::Tag::Bool:
                if (lit.tag != Literal::Tag::Bool) mismatch("bool");
                break;
            case RangeSpec::Tag::Int:
                if (lit.tag != Literal::Tag::Int) mismatch("int");
                break;
            case RangeSpec::Tag::Real:
                if (lit.tag != Literal::Tag::Real && lit.tag != Literal::Tag::Int)
                    mismatch("real");
                break;
            case RangeSpec::Tag::Named: {
                if (lit.tag != Literal::Tag::EnumName) {
                    mismatch(("a member of '" + range.name + "'").c_str());
                    break;
                }
                int eid = domain_.find_enum(range.name);
                if (eid >= 0 &&
                    domain_.enum_types[eid].find_member(lit.enum_name) < 0)
                    error("'" + lit.to_string() + "' is not a member of enum '" +
                              range.name + "'",
                          lit.loc);
                // object-typed ranges are checked against instance objects
                // while grounding
                break;
            }
        }
    }

    void check_cpfs() {
        std::map<std::string, int> cpf_count;
        for (const auto& cpf : domain_.cpfs) {
            const PVariable* pv = domain_.find_pvariable(cpf.target);
            if (!pv) {
                error("CPF defines undeclared fluent '" + cpf.target + "'",
                      cpf.loc);
                continue;
            }
            ++cpf_count[cpf.target];
            switch (pv->cls) {
                case FluentClass::State:
                    if (!cpf.primed)
                        error("CPF for state fluent '" + cpf.target +
                                  "' must use the primed form '" + cpf.target +
                                  "''",
                              cpf.loc);
                    break;
                case FluentClass::Interm:
                case FluentClass::Derived:
                case FluentClass::Observ:
                    if (cpf.primed)
                        error("CPF target '" + cpf.target +
                                  "' is not a state fluent and cannot be primed",
                              cpf.loc);
                    break;
                default:
                    error("CPF target must be an interm, derived, observ or "
                          "state fluent; '" +
                              cpf.target + "' is a " +
                              fluent_class_name(pv->cls),
                          cpf.loc);
                    continue;
            }
            if (cpf.params.size() != pv->param_types.size()) {
                error("CPF for '" + cpf.target + "' has " +
                          std::to_string(cpf.params.size()) +
                          " parameter(s) but the declaration has " +
                          std::to_string(pv->param_types.size()),
                      cpf.loc);
                continue;
            }
            std::unordered_map<std::string, std::string> env;
            bool dup = false;
            for (size_t i = 0; i < cpf.params.size(); ++i) {
                if (!env.emplace(cpf.params[i].name, pv->param_types[i]).second) {
                    error("CPF for '" + cpf.target +
                              "' repeats parameter '?" + cpf.params[i].name + "'",
                          cpf.loc);
                    dup = true;
                }
            }
            if (dup) continue;
            check_expr(cpf.body, env, true);
        }
        for (const auto& pv : domain_.pvariables) {
            bool needs_cpf = pv.cls == FluentClass::State ||
                             pv.cls == FluentClass::Interm ||
                             pv.cls == FluentClass::Derived ||
                             pv.cls == FluentClass::Observ;
            if (!needs_cpf) continue;
            int n = cpf_count.count(pv.name) ? cpf_count[pv.name] : 0;
            if (n == 0)
                error(std::string(fluent_class_name(pv.cls)) + " '" + pv.name +
                          "' has no CPF",
                      pv.loc);
            else if (n > 1)
                error("fluent '" + pv.name + "' has " + std::to_string(n) +
                          " CPFs; exactly one is required",
                      pv.loc);
        }
    }

    using ParamEnv = std::unordered_map<std::string, std::string>;

    void check_expr(const Expression& e, const ParamEnv& env, bool at_cpf_root) {
        switch (e.kind) {
            case ExprKind::FluentRef: {
                const PVariable* pv = domain_.find_pvariable(e.name);
                if (!pv) {
                    error("reference to undeclared fluent '" + e.name + "'",
                          e.loc);
                    return;
                }
                if (e.primed && pv->cls != FluentClass::State)
                    error("primed reference '" + e.name +
                              "'' targets a non-state fluent",
                          e.loc);
                if (e.args.size() != pv->param_types.size())
                    error("fluent '" + e.name + "' expects " +
                              std::to_string(pv->param_types.size()) +
                              " argument(s), got " +
                              std::to_string(e.args.size()),
                          e.loc);
                for (size_t i = 0; i < e.args.size(); ++i)
                    check_fluent_arg(e.args[i],
                                     i < pv->param_types.size()
                                         ? pv->param_types[i]
                                         : std::string(),
                                     env);
                return;
            }
            case ExprKind::ParamRef:
                if (!env.count(e.name))
                    error("unbound parameter '?" + e.name + "'", e.loc);
                return;
            case ExprKind::EnumLit: {
                bool found = false, ambiguous = false;
                for (const auto& et : domain_.enum_types) {
                    if (et.find_member(e.name) >= 0) {
                        if (found) ambiguous = true;
                        found = true;
                    }
                }
                if (!found)
                    error("unknown enum member '@" + e.name + "'", e.loc);
                else if (ambiguous)
                    error("ambiguous enum member '@" + e.name + "'", e.loc);
                return;
            }
            case ExprKind::Aggregate:
            case ExprKind::MatrixOp: {
                ParamEnv inner = env;
                for (const auto& p : e.params) {
                    if (!type_declared(p.type_name))
                        error("aggregation parameter '?" + p.name +
                                  "' has undeclared type '" + p.type_name + "'",
                              p.loc.valid() ? p.loc : e.loc);
                    inner[p.name] = p.type_name;
                }
                if (e.kind == ExprKind::MatrixOp &&
                    e.matrix_fn == MatrixFn::Inverse && !at_cpf_root)
                    error("matrix inverse must form the whole right-hand side "
                          "of a CPF",
                          e.loc);
                check_expr(e.args[0], inner, false);
                return;
            }
            case ExprKind::ParamCompare: {
                for (const auto& side : e.args) {
                    if (side.kind == ExprKind::ParamRef)
                        check_expr(side, env, false);
                    // other side may be an object name or enum literal;
                    // resolved while grounding
                    else if (side.kind == ExprKind::EnumLit)
                        check_expr(side, env, false);
                }
                return;
            }
            case ExprKind::Distribution: {
                if (dist_is_vectorized(e.family)) {
                    if (!at_cpf_root)
                        error(std::string(dist_family_name(e.family)) +
                                  " must form the whole right-hand side of a "
                                  "CPF",
                              e.loc);
                    if (!e.params.empty() && !env.count(e.params[0].name))
                        error("component parameter '?" + e.params[0].name +
                                  "' must be a parameter of the CPF target",
                              e.loc);
                    ParamEnv inner = env;
                    if (e.params.size() > 1) {
                        if (!type_declared(e.params[1].type_name))
                            error("helper parameter type '" +
                                      e.params[1].type_name + "' undeclared",
                                  e.loc);
                        inner[e.params[1].name] = e.params[1].type_name;
                    }
                    for (const auto& a : e.args) check_expr(a, inner, false);
                    return;
                }
                if (e.family == DistFamily::Discrete) {
                    int eid = domain_.find_enum(e.type_name);
                    if (eid < 0) {
                        error("Discrete over undeclared enum type '" +
                                  e.type_name + "'",
                              e.loc);
                    } else {
                        std::set<std::string> seen;
                        for (const auto& m : e.case_members) {
                            if (domain_.enum_types[eid].find_member(m) < 0)
                                error("'@" + m + "' is not a member of enum '" +
                                          e.type_name + "'",
                                      e.loc);
                            if (!seen.insert(m).second)
                                error("Discrete repeats case '@" + m + "'",
                                      e.loc);
                        }
                    }
                }
                for (const auto& a : e.args) check_expr(a, env, false);
                return;
            }
            default:
                for (const auto& a : e.args) check_expr(a, env, false);
                return;
        }
    }

    // A fluent-ref argument may be a bound parameter, an enum literal, an
    // object name (parsed as a 0-ary fluent ref) or, for nested indexing, a
    // categorical expression; the deep type check happens while grounding.
    void check_fluent_arg(const Expression& arg, const std::string& param_type,
                          const ParamEnv& env) {
        if (arg.kind == ExprKind::ParamRef) {
            auto it = env.find(arg.name);
            if (it == env.end()) {
                error("unbound parameter '?" + arg.name + "'", arg.loc);
            } else if (!param_type.empty() && it->second != param_type) {
                error("parameter '?" + arg.name + "' has type '" + it->second +
                          "' but the fluent expects '" + param_type + "'",
                      arg.loc);
            }
            return;
        }
        if (arg.kind == ExprKind::FluentRef && arg.args.empty() &&
            !domain_.find_pvariable(arg.name)) {
            if (objects_known_ && !object_names_.count(arg.name))
                error("'" + arg.name +
                          "' is neither a declared fluent nor an instance "
                          "object",
                      arg.loc);
            return;  // object literal
        }
        check_expr(arg, env, false);
    }

    void collect_objects(const std::vector<ObjectsDecl>& decls) {
        objects_known_ = true;
        for (const auto& od : decls) {
            int eid = domain_.find_enum(od.type);
            if (eid >= 0) {
                error("objects cannot be declared for enum type '" + od.type +
                          "'",
                      od.loc);
                continue;
            }
            if (!domain_.is_object_type(od.type)) {
                error("objects declared for undeclared type '" + od.type + "'",
                      od.loc);
                continue;
            }
            for (const auto& name : od.names) {
                if (!object_names_.insert(name).second)
                    error("object '" + name + "' declared twice", od.loc);
                objects_by_type_[od.type].push_back(name);
            }
        }
    }

    void check_assignment(const Assignment& a, FluentClass expected,
                          const char* what) {
        const PVariable* pv = domain_.find_pvariable(a.fluent);
        if (!pv) {
            error(std::string(what) + " targets undeclared fluent '" +
                      a.fluent + "'",
                  a.loc);
            return;
        }
        if (pv->cls != expected) {
            error(std::string(what) + " targets '" + a.fluent + "' which is a " +
                      fluent_class_name(pv->cls) + ", not a " +
                      fluent_class_name(expected),
                  a.loc);
            return;
        }
        if (a.args.size() != pv->param_types.size()) {
            error(std::string(what) + " for '" + a.fluent + "' has " +
                      std::to_string(a.args.size()) +
                      " argument(s) but the fluent takes " +
                      std::to_string(pv->param_types.size()),
                  a.loc);
            return;
        }
        for (size_t i = 0; i < a.args.size(); ++i) {
            const std::string& type = pv->param_types[i];
            if (domain_.find_enum(type) >= 0) {
                if (domain_.enum_types[domain_.find_enum(type)].find_member(
                        a.args[i]) < 0)
                    error("'" + a.args[i] + "' is not a member of enum '" +
                              type + "'",
                          a.loc);
            } else {
                auto it = objects_by_type_.find(type);
                bool ok = it != objects_by_type_.end() &&
                          std::find(it->second.begin(), it->second.end(),
                                    a.args[i]) != it->second.end();
                if (!ok)
                    error("'" + a.args[i] + "' is not a declared object of "
                          "type '" + type + "'",
                          a.loc);
            }
        }
        check_literal_range(a.value, pv->range, std::string(what) + " for '" +
                                                    a.fluent + "'");
    }

    const LiftedModel& domain_;
    bool objects_known_ = false;
    std::unordered_set<std::string> object_names_;
    std::unordered_map<std::string, std::vector<std::string>> objects_by_type_;
};

}  // namespace

std::vector<Diagnostic> validate(const LiftedModel& domain,
                                 const InstanceModel& instance,
                                 const NonFluentsBlock* non_fluents) {
    Checker c(domain);
    c.check_domain();
    c.check_instance(instance, non_fluents);
    return std::move(c.diags);
}

std::vector<Diagnostic> validate_domain(const LiftedModel& domain) {
    Checker c(domain);
    c.check_domain();
    return std::move(c.diags);
}

}  // namespace rddl
