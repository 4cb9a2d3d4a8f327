#include "qseries/expr.hpp"
#include "qseries/appell.hpp"
#include "qseries/catalog.hpp"
#include "qseries/errors.hpp"
#include "qseries/hecke.hpp"
#include "qseries/theta.hpp"

namespace qseries {

namespace {

std::shared_ptr<ExprNode> node(ExprKind k)
{
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    return n;
}

const QMonomial* as_mono(const Expr& e) { return e->kind == ExprKind::Mono ? &e->mono : nullptr; }

Expr binary(ExprKind k, Expr a, Expr b)
{
    auto n = node(k);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

} // namespace

Expr mk_mono(const QMonomial& m)
{
    auto n = node(ExprKind::Mono);
    n->mono = m;
    return n;
}

Expr mk_add(Expr a, Expr b)
{
    const QMonomial *x = as_mono(a), *y = as_mono(b);
    if (x && y) {
        if (x->is_zero()) return b;
        if (y->is_zero()) return a;
        if (x->expo == y->expo) return mk_mono(QMonomial(x->coeff + y->coeff, x->expo));
    }
    return binary(ExprKind::Add, std::move(a), std::move(b));
}

Expr mk_sub(Expr a, Expr b)
{
    const QMonomial *x = as_mono(a), *y = as_mono(b);
    if (x && y && (x->is_zero() || y->is_zero() || x->expo == y->expo)) return mk_add(a, mk_neg(b));
    return binary(ExprKind::Sub, std::move(a), std::move(b));
}

Expr mk_mul(Expr a, Expr b)
{
    const QMonomial *x = as_mono(a), *y = as_mono(b);
    if (x && y) return mk_mono(*x * *y);
    return binary(ExprKind::Mul, std::move(a), std::move(b));
}

Expr mk_div(Expr a, Expr b)
{
    const QMonomial *x = as_mono(a), *y = as_mono(b);
    if (x && y && !y->is_zero()) return mk_mono(*x / *y);
    return binary(ExprKind::Div, std::move(a), std::move(b));
}

Expr mk_neg(Expr a)
{
    if (const QMonomial* x = as_mono(a)) return mk_mono(-*x);
    auto n = node(ExprKind::Neg);
    n->lhs = std::move(a);
    return n;
}

Expr mk_pow(Expr a, long k)
{
    if (const QMonomial* x = as_mono(a)) {
        if (!(x->is_zero() && k < 0)) return mk_mono(x->pow(k));
    }
    auto n = node(ExprKind::Pow);
    n->lhs = std::move(a);
    n->power = k;
    return n;
}

Expr mk_call(std::string name, std::vector<long> params, std::vector<std::vector<QMonomial>> groups)
{
    auto n = node(ExprKind::Call);
    n->name = std::move(name);
    n->params = std::move(params);
    n->groups = std::move(groups);
    return n;
}

Expr mk_catalog(std::string name, std::optional<QMonomial> subst, std::optional<long> repr)
{
    auto n = node(ExprKind::Catalog);
    n->name = std::move(name);
    n->subst = std::move(subst);
    n->repr = repr;
    return n;
}

// ---------------------------------------------------------------- printing

namespace {

// precedence of a printed form: 1 sum, 2 product, 3 negation, 4 power, 5 atom
struct Printed {
    std::string s;
    int prec;
};

std::string rat_str(const BigRat& r) { return r.get_str(); }

Printed print_mono(const QMonomial& m)
{
    const CycRat& c = m.coeff;
    if (m.is_zero()) return {"0", 5};
    std::string qs;
    int qprec = 5;
    if (m.expo != 0) {
        if (m.expo == 1) {
            qs = "q";
        } else if (is_integer(m.expo)) {
            qs = "q^" + rat_str(m.expo);
            qprec = 4;
        } else {
            qs = "q^(" + rat_str(m.expo) + ")";
            qprec = 4;
        }
    }
    if (c.is_rational()) {
        BigRat r = c.rational();
        if (qs.empty()) {
            std::string s = rat_str(r);
            if (!is_integer(r)) return {s, 2};
            return {s, r < 0 ? 3 : 5};
        }
        if (r == 1) return {qs, qprec};
        if (r == -1) return {"-" + qs, 3};
        return {rat_str(r) + "*" + qs, 2};
    }
    std::string cs = "(" + c.to_string() + ")";
    if (qs.empty()) return {cs, 5};
    return {cs + "*" + qs, 2};
}

std::string paren(const Printed& p, int need) { return p.prec >= need ? p.s : "(" + p.s + ")"; }

std::string mono_arg(const QMonomial& m) { return print_mono(m).s; }

Printed print(const Expr& e)
{
    switch (e->kind) {
    case ExprKind::Mono:
        return print_mono(e->mono);
    case ExprKind::Add:
        return {paren(print(e->lhs), 1) + " + " + paren(print(e->rhs), 2), 1};
    case ExprKind::Sub:
        return {paren(print(e->lhs), 1) + " - " + paren(print(e->rhs), 2), 1};
    case ExprKind::Mul:
        return {paren(print(e->lhs), 2) + "*" + paren(print(e->rhs), 3), 2};
    case ExprKind::Div:
        return {paren(print(e->lhs), 2) + "/" + paren(print(e->rhs), 3), 2};
    case ExprKind::Neg:
        return {"-" + paren(print(e->lhs), 4), 3};
    case ExprKind::Pow:
        return {paren(print(e->lhs), 5) + "^" + std::to_string(e->power), 4};
    case ExprKind::Call: {
        std::string s = e->name;
        bool poch = e->name == "poch";
        if (!poch && !e->params.empty()) {
            s += "[";
            for (size_t i = 0; i < e->params.size(); ++i) s += (i ? "," : "") + std::to_string(e->params[i]);
            s += "]";
        }
        if (!e->groups.empty()) {
            s += "(";
            for (size_t g = 0; g < e->groups.size(); ++g) {
                if (g) s += "; ";
                for (size_t i = 0; i < e->groups[g].size(); ++i) s += (i ? ", " : "") + mono_arg(e->groups[g][i]);
            }
            if (poch) s += "; " + (e->params[0] < 0 ? std::string("inf") : std::to_string(e->params[0]));
            s += ")";
        }
        return {s, 5};
    }
    case ExprKind::Catalog: {
        std::string s = "catalog(\"" + e->name + "\"";
        if (e->subst) s += ", " + mono_arg(*e->subst);
        s += ")";
        if (e->repr) s += ".repr[" + std::to_string(*e->repr) + "]";
        return {s, 5};
    }
    }
    return {"?", 5};
}

} // namespace

std::string to_string(const Expr& e) { return print(e).s; }

std::string to_string(const IdentityRecord& r)
{
    std::string s = "identity " + r.name;
    if (r.order) s += " order " + std::to_string(*r.order);
    if (!r.tags.empty()) {
        s += " tags(";
        bool first = true;
        for (auto& t : r.tags) {
            s += (first ? "" : ", ") + t;
            first = false;
        }
        s += ")";
    }
    return s + " { lhs = " + to_string(r.lhs) + "; rhs = " + to_string(r.rhs) + "; }";
}

// ---------------------------------------------------------------- evaluation

namespace {

[[noreturn]] void rethrow_in(const std::string& ctx)
{
    std::string pre = "in " + ctx + ": ";
    try {
        throw;
    } catch (const GenericityError& e) {
        throw GenericityError(pre + e.what());
    } catch (const DivisionByZero& e) {
        throw DivisionByZero(pre + e.what());
    } catch (const OrderExceeded& e) {
        throw OrderExceeded(pre + e.what());
    } catch (const UnsupportedArgument& e) {
        throw UnsupportedArgument(pre + e.what());
    } catch (const UnsupportedSubstitution& e) {
        throw UnsupportedSubstitution(pre + e.what());
    } catch (const UnknownCatalogName& e) {
        throw UnknownCatalogName(pre + e.what());
    } catch (const Error& e) {
        throw Error(pre + e.what());
    }
}

bool has_context(const char* what) { return std::string(what).rfind("in ", 0) == 0; }

// errors raised while expanding `inner` get the call text prepended once
Lazy with_context(Lazy inner, std::string ctx)
{
    return Lazy::leaf(
        [inner, ctx](const BigRat& n) {
            try {
                return inner.eval(n);
            } catch (const Error& e) {
                if (has_context(e.what())) throw;
                rethrow_in(ctx);
            }
        },
        ctx);
}

HeckeParams hecke(const ExprNode& n)
{
    return HeckeParams{n.params[0], n.params[1], n.params[2], n.groups[0][0], n.groups[0][1], n.groups[1][0]};
}

Lazy eval_call(const ExprNode& n)
{
    const std::string& f = n.name;
    auto arg = [&](size_t g, size_t i) -> const QMonomial& { return n.groups[g][i]; };
    if (f == "j") return lj(n.groups[0], arg(1, 0));
    if (f == "J") return lJ(n.params[0], n.params[1]);
    if (f == "JB") return lJbar(n.params[0], n.params[1]);
    if (f == "Jm") return lJm(n.params[0]);
    if (f == "m") return m_lazy(arg(0, 0), arg(0, 1), arg(0, 2));
    if (f == "g") return g_lazy(arg(0, 0), arg(1, 0));
    if (f == "h") return h_lazy(arg(0, 0), arg(1, 0));
    if (f == "k") return k_lazy(arg(0, 0), arg(1, 0));
    if (f == "poch") {
        if (n.params[0] < 0) return lpoch(arg(0, 0), arg(1, 0));
        return Lazy::exact(poch_fin(arg(0, 0), arg(1, 0), n.params[0]));
    }
    if (f == "f") return f_lazy(hecke(n));
    if (f == "gabc") return g_abc(hecke(n), arg(2, 0), arg(2, 1));
    if (f == "habc") return h_abc(hecke(n), arg(2, 0), arg(2, 1));
    if (f == "thetanp") return theta_np(n.params[0], n.params[1], arg(0, 0), arg(0, 1), arg(1, 0));
    if (f == "thetaabc") return theta_abc(hecke(n));
    if (f == "bigtheta") return big_theta(n.params[0], n.params[1], arg(0, 0), arg(0, 1), arg(1, 0));
    if (f == "strfn") return string_function_lazy(n.params[0], n.params[1], n.params[2]);
    throw UnsupportedArgument("unknown function " + f);
}

} // namespace

Lazy eval_lazy(const Expr& e)
{
    switch (e->kind) {
    case ExprKind::Mono:
        return e->mono.is_zero() ? Lazy() : Lazy::monomial(e->mono);
    case ExprKind::Add:
        return eval_lazy(e->lhs) + eval_lazy(e->rhs);
    case ExprKind::Sub:
        return eval_lazy(e->lhs) - eval_lazy(e->rhs);
    case ExprKind::Mul:
        return eval_lazy(e->lhs) * eval_lazy(e->rhs);
    case ExprKind::Div:
        return eval_lazy(e->lhs) / eval_lazy(e->rhs);
    case ExprKind::Neg:
        return -eval_lazy(e->lhs);
    case ExprKind::Pow:
        return eval_lazy(e->lhs).pow(e->power);
    case ExprKind::Call:
    case ExprKind::Catalog: {
        std::string ctx = to_string(e);
        try {
            Lazy l = e->kind == ExprKind::Call ? eval_call(*e) : catalog_lazy(e->name, e->repr);
            if (e->kind == ExprKind::Catalog && e->subst) l = l.compose(*e->subst);
            return with_context(std::move(l), ctx);
        } catch (const Error& err) {
            if (has_context(err.what())) throw;
            rethrow_in(ctx);
        }
    }
    }
    throw Error("bad expression node");
}

QSeries eval_expr(const Expr& e, const BigRat& order) { return eval_lazy(e).eval(order); }

} // namespace qseries
