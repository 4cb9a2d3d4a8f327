#pragma once

#include "qseries/lazy.hpp"
#include "qseries/qseries.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qseries {

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

enum class ExprKind { Mono, Add, Sub, Mul, Div, Neg, Pow, Call, Catalog };

struct ExprNode {
    ExprKind kind;
    QMonomial mono;                 // Mono
    Expr lhs, rhs;                  // binary ops; Neg and Pow use lhs
    long power = 0;                 // Pow
    std::string name;               // Call: function name; Catalog: entry name
    std::vector<long> params;       // Call: bracket parameters, poch length (-1 = inf)
    std::vector<std::vector<QMonomial>> groups; // Call: ';'-separated argument groups
    std::optional<QMonomial> subst; // Catalog: q -> subst
    std::optional<long> repr;       // Catalog: representation index
};

// smart constructors; monomial operands are folded
Expr mk_mono(const QMonomial& m);
Expr mk_add(Expr a, Expr b);
Expr mk_sub(Expr a, Expr b);
Expr mk_mul(Expr a, Expr b);
Expr mk_div(Expr a, Expr b);
Expr mk_neg(Expr a);
Expr mk_pow(Expr a, long k);
Expr mk_call(std::string name, std::vector<long> params, std::vector<std::vector<QMonomial>> groups);
Expr mk_catalog(std::string name, std::optional<QMonomial> subst, std::optional<long> repr);

struct IdentityRecord {
    std::string name;
    std::optional<long> order;
    Expr lhs, rhs;
    std::set<std::string> tags;
};

// throws ParseError with line:col
std::vector<IdentityRecord> parse_identities(const std::string& text);
Expr parse_expr(const std::string& text);

std::string to_string(const Expr& e);
std::string to_string(const IdentityRecord& r);

// build the lazy series; errors carry the failing sub-expression
Lazy eval_lazy(const Expr& e);
QSeries eval_expr(const Expr& e, const BigRat& order);

} // namespace qseries
