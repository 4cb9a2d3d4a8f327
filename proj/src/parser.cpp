#include "qseries/errors.hpp"
#include "qseries/expr.hpp"

#include <cctype>
#include <map>

namespace qseries {

namespace {

enum class Tok { Ident, Int, String, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& s)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto adv = [&](size_t k) {
        for (size_t t = 0; t < k && i < s.size(); ++t, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            adv(1);
            continue;
        }
        if (c == '#' || (c == '/' && i + 1 < s.size() && s[i + 1] == '/')) {
            while (i < s.size() && s[i] != '\n') adv(1);
            continue;
        }
        int l0 = line, c0 = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), l0, c0});
            adv(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Int, s.substr(i, j - i), l0, c0});
            adv(j - i);
        } else if (c == '"') {
            size_t j = i + 1;
            while (j < s.size() && s[j] != '"' && s[j] != '\n') ++j;
            if (j >= s.size() || s[j] != '"') throw ParseError("unterminated string", l0, c0);
            out.push_back({Tok::String, s.substr(i + 1, j - i - 1), l0, c0});
            adv(j + 1 - i);
        } else if (std::string("{}()[],;=+-*/^.").find(c) != std::string::npos) {
            out.push_back({Tok::Punct, std::string(1, c), l0, c0});
            adv(1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", l0, c0);
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// bracket parameter count, and the sizes of the ';'-separated argument groups
// (0 = one or more); "poch" additionally takes a trailing length
struct Signature {
    int params;
    std::vector<int> groups;
};

const std::map<std::string, Signature>& signatures()
{
    static const std::map<std::string, Signature> t = {
        {"j", {0, {0, 1}}},          {"J", {2, {}}},
        {"JB", {2, {}}},             {"Jm", {1, {}}},
        {"m", {0, {3}}},             {"g", {0, {1, 1}}},
        {"h", {0, {1, 1}}},          {"k", {0, {1, 1}}},
        {"poch", {0, {1, 1}}},       {"f", {3, {2, 1}}},
        {"gabc", {3, {2, 1, 2}}},    {"habc", {3, {2, 1, 2}}},
        {"thetanp", {2, {2, 1}}},    {"thetaabc", {3, {2, 1}}},
        {"bigtheta", {2, {2, 1}}},   {"strfn", {3, {}}},
    };
    return t;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    std::vector<IdentityRecord> identities()
    {
        std::vector<IdentityRecord> out;
        while (peek().kind != Tok::End) out.push_back(identity());
        return out;
    }

    Expr whole_expr()
    {
        Expr e = additive();
        if (peek().kind != Tok::End) fail("trailing input '" + peek().text + "'");
        return e;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& peek(size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().col); }

    bool is_punct(const char* p, size_t k = 0) const { return peek(k).kind == Tok::Punct && peek(k).text == p; }
    bool is_ident(const char* p) const { return peek().kind == Tok::Ident && peek().text == p; }

    bool accept(const char* p)
    {
        if (!is_punct(p)) return false;
        next();
        return true;
    }

    void expect(const char* p)
    {
        if (!accept(p)) fail(std::string("expected '") + p + "'" + (peek().kind == Tok::End ? " at end of input" : " before '" + peek().text + "'"));
    }

    std::string ident()
    {
        if (peek().kind != Tok::Ident) fail("expected identifier");
        return next().text;
    }

    long integer()
    {
        if (peek().kind != Tok::Int) fail("expected integer");
        const Token& t = next();
        if (t.text.size() > 15) throw ParseError("integer too large", t.line, t.col);
        return std::stol(t.text);
    }

    long signed_integer()
    {
        bool neg = accept("-");
        long v = integer();
        return neg ? -v : v;
    }

    IdentityRecord identity()
    {
        if (!is_ident("identity")) fail("expected 'identity'");
        next();
        IdentityRecord r;
        r.name = ident();
        while (accept(".")) r.name += "." + (peek().kind == Tok::Int ? next().text : ident());
        for (;;) {
            if (is_ident("order")) {
                next();
                r.order = integer();
            } else if (is_ident("tags")) {
                next();
                expect("(");
                if (!is_punct(")")) {
                    do r.tags.insert(ident());
                    while (accept(","));
                }
                expect(")");
            } else {
                break;
            }
        }
        expect("{");
        for (const char* side : {"lhs", "rhs"}) {
            if (!is_ident(side)) fail(std::string("expected '") + side + "'");
            next();
            expect("=");
            (side[0] == 'l' ? r.lhs : r.rhs) = additive();
            expect(";");
        }
        expect("}");
        return r;
    }

    Expr additive()
    {
        Expr e = multiplicative();
        for (;;) {
            if (accept("+"))
                e = mk_add(e, multiplicative());
            else if (accept("-"))
                e = mk_sub(e, multiplicative());
            else
                return e;
        }
    }

    Expr multiplicative()
    {
        Expr e = unary();
        for (;;) {
            if (accept("*")) {
                e = mk_mul(e, unary());
            } else if (is_punct("/")) {
                int l = peek().line, c = peek().col;
                next();
                Expr d = unary();
                if (d->kind == ExprKind::Mono && d->mono.is_zero()) throw ParseError("division by zero literal", l, c);
                e = mk_div(e, d);
            } else {
                return e;
            }
        }
    }

    Expr unary()
    {
        if (accept("-")) return mk_neg(unary());
        return power();
    }

    Expr power()
    {
        Expr base = postfix();
        if (!is_punct("^")) return base;
        int l = peek().line, c = peek().col;
        next();
        BigRat ex;
        if (accept("(")) {
            long num = signed_integer();
            long den = 1;
            if (accept("/")) den = integer();
            expect(")");
            if (den == 0) throw ParseError("zero denominator in exponent", l, c);
            ex = make_rat(num, den);
        } else {
            ex = signed_integer();
        }
        if (is_integer(ex)) {
            if (base->kind == ExprKind::Mono && base->mono.is_zero() && ex < 0)
                throw ParseError("negative power of zero", l, c);
            return mk_pow(base, ex.get_num().get_si());
        }
        if (base->kind != ExprKind::Mono || base->mono.is_zero())
            throw ParseError("fractional exponent needs a monomial base", l, c);
        try {
            return mk_mono(base->mono.pow(ex));
        } catch (const Error& e) {
            throw ParseError(e.what(), l, c);
        }
    }

    Expr postfix()
    {
        Expr e = primary();
        if (e->kind == ExprKind::Catalog && is_punct(".")) {
            next();
            if (!is_ident("repr")) fail("expected 'repr'");
            next();
            expect("[");
            long i = integer();
            expect("]");
            e = mk_catalog(e->name, e->subst, i);
        }
        return e;
    }

    Expr primary()
    {
        const Token& t = peek();
        if (t.kind == Tok::Int) return mk_mono(QMonomial::constant(CycRat(BigRat(integer()))));
        if (accept("(")) {
            Expr e = additive();
            expect(")");
            return e;
        }
        if (t.kind != Tok::Ident) fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
        std::string name = next().text;
        if (name == "q") return mk_mono(QMonomial::q());
        if (name == "i") return mk_mono(QMonomial::constant(zeta(1, 4)));
        if (name == "omega") return mk_mono(QMonomial::constant(zeta(1, 3)));
        if (name == "zeta") {
            expect("(");
            long k = signed_integer();
            expect(",");
            long n = integer();
            expect(")");
            if (n <= 0) throw ParseError("zeta order must be positive", t.line, t.col);
            return mk_mono(QMonomial::constant(zeta(k, n)));
        }
        if (name == "catalog") {
            expect("(");
            if (peek().kind != Tok::String) fail("expected catalog name string");
            std::string cname = next().text;
            std::optional<QMonomial> subst;
            if (accept(",")) subst = monomial_arg();
            expect(")");
            return mk_catalog(cname, subst, std::nullopt);
        }
        auto it = signatures().find(name);
        if (it == signatures().end()) throw ParseError("unknown name '" + name + "'", t.line, t.col);
        return call(name, it->second, t);
    }

    QMonomial monomial_arg()
    {
        const Token& t = peek();
        Expr e = additive();
        if (e->kind != ExprKind::Mono) throw ParseError("argument must be a monomial", t.line, t.col);
        return e->mono;
    }

    Expr call(const std::string& name, const Signature& sig, const Token& at)
    {
        auto arity = [&](const std::string& what) {
            throw ParseError("wrong number of " + what + " for '" + name + "'", at.line, at.col);
        };
        std::vector<long> params;
        if (sig.params > 0) {
            if (!is_punct("[")) arity("bracket parameters");
            next();
            do params.push_back(signed_integer());
            while (accept(","));
            expect("]");
            if (static_cast<int>(params.size()) != sig.params) arity("bracket parameters");
        }
        std::vector<std::vector<QMonomial>> groups;
        if (sig.groups.empty()) return mk_call(name, params, groups);
        if (!is_punct("(")) arity("arguments");
        next();
        bool poch = name == "poch";
        for (size_t g = 0;; ++g) {
            if (poch && g == 2) {
                if (is_ident("inf")) {
                    next();
                    params.push_back(-1);
                } else {
                    long n = integer();
                    params.push_back(n);
                }
                break;
            }
            std::vector<QMonomial> grp;
            do grp.push_back(monomial_arg());
            while (accept(","));
            groups.push_back(std::move(grp));
            if (!accept(";")) break;
        }
        if (!is_punct(")")) arity("arguments");
        next();
        if (groups.size() != sig.groups.size() || (poch && params.size() != 1)) arity("arguments");
        for (size_t g = 0; g < groups.size(); ++g)
            if (sig.groups[g] != 0 && static_cast<int>(groups[g].size()) != sig.groups[g]) arity("arguments");
        return mk_call(name, params, groups);
    }
};

} // namespace

std::vector<IdentityRecord> parse_identities(const std::string& text) { return Parser(text).identities(); }

Expr parse_expr(const std::string& text) { return Parser(text).whole_expr(); }

} // namespace qseries
