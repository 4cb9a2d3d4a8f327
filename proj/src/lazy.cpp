#include "qseries/lazy.hpp"
#include "qseries/errors.hpp"

#include <mutex>

namespace qseries {

struct Lazy::Node {
    virtual ~Node() = default;
    virtual QSeries compute(const BigRat& n) = 0;

    QSeries eval(const BigRat& n)
    {
        std::lock_guard<std::recursive_mutex> lock(mu);
        if (!have || !best.order_at_least(n)) {
            best = compute(n);
            have = true;
            if (!best.order_at_least(n))
                throw Error("internal: evaluation fell short of the requested order");
        }
        if (best.is_exact()) return best;
        return best.truncated(n);
    }

    std::recursive_mutex mu;
    bool have = false;
    QSeries best;
};

namespace {

using NodePtr = std::shared_ptr<Lazy::Node>;

struct ConstNode : Lazy::Node {
    explicit ConstNode(QSeries s) : s(std::move(s)) {}
    QSeries compute(const BigRat&) override { return s; }
    QSeries s;
};

struct LeafNode : Lazy::Node {
    LeafNode(Lazy::Fn f, std::string l) : fn(std::move(f)), label(std::move(l)) {}
    QSeries compute(const BigRat& n) override
    {
        QSeries r = fn(n);
        if (!r.order_at_least(n))
            throw Error("internal: " + label + " returned a series short of order " + n.get_str());
        return r;
    }
    Lazy::Fn fn;
    std::string label;
};

struct AddNode : Lazy::Node {
    AddNode(Lazy a, Lazy b, bool sub) : a(std::move(a)), b(std::move(b)), sub(sub) {}
    QSeries compute(const BigRat& n) override
    {
        QSeries x = a.eval(n), y = b.eval(n);
        return sub ? x - y : x + y;
    }
    Lazy a, b;
    bool sub;
};

struct NegNode : Lazy::Node {
    explicit NegNode(Lazy a) : a(std::move(a)) {}
    QSeries compute(const BigRat& n) override { return -a.eval(n); }
    Lazy a;
};

struct MulNode : Lazy::Node {
    MulNode(Lazy a, Lazy b) : a(std::move(a)), b(std::move(b)) {}
    QSeries compute(const BigRat& n) override
    {
        BigRat na = n, nb = n;
        for (int iter = 0; iter < 16; ++iter) {
            QSeries x = a.eval(na);
            if (x.is_exact_zero()) return x;
            QSeries y = b.eval(nb);
            if (y.is_exact_zero()) return y;
            QSeries r = series_mul(x, y);
            if (r.order_at_least(n)) return r;
            BigRat va = x.valuation_or_order(), vb = y.valuation_or_order();
            BigRat na2 = n - vb, nb2 = n - va;
            if (na2 <= na && nb2 <= nb) {
                BigRat deficit = n - *r.order();
                na2 = na + deficit;
                nb2 = nb + deficit;
            }
            if (na2 > na) na = na2;
            if (nb2 > nb) nb = nb2;
        }
        throw Error("internal: product failed to reach the requested order");
    }
    Lazy a, b;
};

struct DivNode : Lazy::Node {
    DivNode(Lazy a, Lazy b) : a(std::move(a)), b(std::move(b)) {}
    QSeries compute(const BigRat& n) override
    {
        BigRat nb = n;
        QSeries y = b.eval(nb);
        for (int tries = 0; y.known_zero(); ++tries) {
            if (y.is_exact() || tries == 3)
                throw DivisionByZero("divisor vanishes to order " +
                                     (y.is_exact() ? std::string("infinity") : y.order()->get_str()));
            BigRat bump = nb < 0 ? BigRat(-nb) : nb;
            nb = nb + bump + 16;
            y = b.eval(nb);
        }
        BigRat vb = *y.valuation();
        BigRat na = n + vb;
        for (int iter = 0; iter < 16; ++iter) {
            QSeries x = a.eval(na);
            if (x.is_exact_zero()) return x;
            BigRat va = x.valuation_or_order();
            BigRat need_b = n + 2 * vb - va;
            if (need_b > nb) {
                nb = need_b;
                y = b.eval(nb);
            }
            QSeries r = series_div(x, y, n);
            if (r.order_at_least(n)) return r;
            BigRat deficit = n - *r.order();
            na += deficit;
            nb += deficit;
            y = b.eval(nb);
        }
        throw Error("internal: quotient failed to reach the requested order");
    }
    Lazy a, b;
};

struct ComposeNode : Lazy::Node {
    ComposeNode(Lazy a, QMonomial base) : a(std::move(a)), base(std::move(base)) {}
    QSeries compute(const BigRat& n) override { return compose_monomial(a.eval(n / base.expo), base); }
    Lazy a;
    QMonomial base;
};

} // namespace

Lazy::Lazy() : node_(std::make_shared<ConstNode>(QSeries())) {}

Lazy Lazy::constant(const CycRat& c) { return Lazy(std::make_shared<ConstNode>(QSeries::constant(c))); }

Lazy Lazy::monomial(const QMonomial& m) { return Lazy(std::make_shared<ConstNode>(QSeries::monomial(m))); }

Lazy Lazy::exact(const QSeries& s)
{
    if (!s.is_exact()) throw Error("Lazy::exact needs an exact series");
    return Lazy(std::make_shared<ConstNode>(s));
}

Lazy Lazy::leaf(Fn fn, std::string label) { return Lazy(std::make_shared<LeafNode>(std::move(fn), std::move(label))); }

QSeries Lazy::eval(const BigRat& order) const { return node_->eval(order); }

Lazy operator+(const Lazy& a, const Lazy& b) { return Lazy(std::make_shared<AddNode>(a, b, false)); }
Lazy operator-(const Lazy& a, const Lazy& b) { return Lazy(std::make_shared<AddNode>(a, b, true)); }
Lazy operator*(const Lazy& a, const Lazy& b) { return Lazy(std::make_shared<MulNode>(a, b)); }
Lazy operator/(const Lazy& a, const Lazy& b) { return Lazy(std::make_shared<DivNode>(a, b)); }
Lazy Lazy::operator-() const { return Lazy(std::make_shared<NegNode>(*this)); }

Lazy Lazy::pow(long k) const
{
    if (k == 0) return constant(CycRat(1));
    if (k < 0) return constant(CycRat(1)) / pow(-k);
    Lazy result, base = *this;
    bool first = true;
    while (k) {
        if (k & 1) {
            result = first ? base : result * base;
            first = false;
        }
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Lazy Lazy::compose(const QMonomial& base) const
{
    if (base.expo <= 0) throw UnsupportedSubstitution("substitution base must have positive exponent");
    return Lazy(std::make_shared<ComposeNode>(*this, base));
}

Lazy operator*(const QMonomial& m, const Lazy& a) { return Lazy::monomial(m) * a; }
Lazy operator*(const CycRat& c, const Lazy& a) { return Lazy::constant(c) * a; }

} // namespace qseries
