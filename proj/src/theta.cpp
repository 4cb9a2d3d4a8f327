#include "qseries/theta.hpp"
#include "qseries/errors.hpp"

#include "dense_product.hpp"

namespace qseries {

using detail::Binomial;

namespace {

long scale_for(std::initializer_list<BigRat> rs)
{
    long D = 1;
    for (auto& r : rs) D = lcm_long(D, to_long(r.get_den()));
    return D;
}

void check_base(const QMonomial& base)
{
    if (base.expo <= 0) throw UnsupportedArgument("base must have positive exponent, got " + base.to_string());
}

} // namespace

QSeries poch_inf(const QMonomial& x, const QMonomial& base, const BigRat& order)
{
    check_base(base);
    if (x.is_zero()) return QSeries::constant(CycRat(1));
    if (x.expo < 0) throw UnsupportedArgument("poch_inf needs a non-negative exponent, got " + x.to_string());
    long D = scale_for({x.expo, base.expo, order});
    QSeries::Key K = order_to_key(order, D);
    std::vector<Binomial> fs;
    CycRat c = x.coeff;
    BigRat e = x.expo;
    // factors with exponent >= order are 1 + O(q^order)
    while (e < order) {
        fs.push_back({c, to_long(e * D)});
        c = c * base.coeff;
        e += base.expo;
    }
    return detail::binomial_product(fs, D, K);
}

QSeries poch_fin(const QMonomial& x, const QMonomial& base, long n)
{
    if (n < 0) throw UnsupportedArgument("poch_fin with negative length");
    if (x.is_zero()) return QSeries::constant(CycRat(1));
    long D = scale_for({x.expo, base.expo});
    std::vector<Binomial> fs;
    QMonomial w = x;
    for (long i = 0; i < n; ++i) {
        fs.push_back({w.coeff, to_long(w.expo * D)});
        w = w * base;
    }
    return detail::binomial_product(fs, D, std::nullopt);
}

ThetaNormal theta_normalize(const QMonomial& x, const QMonomial& base)
{
    check_base(base);
    if (x.is_zero()) throw UnsupportedArgument("theta function at x = 0");
    long n = to_long(floor_rat(-x.expo / base.expo)) + 1;
    // j(x) = (-1)^n q^binom(n,2) x^n j(q^n x)
    QMonomial xs = base.pow(n) * x;
    QMonomial f = base.pow(n * (n - 1) / 2) * x.pow(n);
    if (n % 2) f = -f;
    return {f, xs, n};
}

bool theta_vanishes(const QMonomial& x, const QMonomial& base)
{
    ThetaNormal t = theta_normalize(x, base);
    return t.x == base;
}

QSeries jtheta(const QMonomial& x, const QMonomial& base, const BigRat& order)
{
    ThetaNormal t = theta_normalize(x, base);
    if (t.x == base) return QSeries();
    // j(x') to order - expo(factor)
    BigRat n = order - t.factor.expo;
    QMonomial other = base / t.x;
    QSeries p = poch_inf(t.x, base, n);
    p = series_mul(p, poch_inf(other, base, n));
    p = series_mul(p, poch_inf(base, base, n));
    return p.times(t.factor).truncated(order);
}

QSeries jtheta_sum_oracle(const QMonomial& x, const QMonomial& base, const BigRat& order)
{
    check_base(base);
    if (x.is_zero()) throw UnsupportedArgument("theta function at x = 0");
    // E(n) = e_b n(n-1)/2 + n e_x, convex in n
    auto E = [&](long n) -> BigRat { return base.expo * BigRat(n * (n - 1) / 2) + x.expo * n; };
    long v = to_long(floor_rat(BigRat(1, 2) - x.expo / base.expo));
    std::vector<QSeries::Term> terms;
    long D = scale_for({x.expo, base.expo, order});
    auto add = [&](long n) {
        CycRat c = base.coeff.pow(n * (n - 1) / 2) * x.coeff.pow(n);
        if (n % 2) c = -c;
        terms.push_back({to_long(E(n) * D), c});
    };
    for (long n = v; n <= v + 1 || E(n) < order; ++n)
        if (E(n) < order) add(n);
    for (long n = v - 1; E(n) < order; --n) add(n);
    return QSeries::from_terms(D, order_to_key(order, D), std::move(terms));
}

QSeries J_std(JKind kind, long a, long m, const BigRat& order)
{
    if (m < 1) throw UnsupportedArgument("J_std needs m >= 1");
    switch (kind) {
    case JKind::J:
        return jtheta(QMonomial::q(a), QMonomial::q(m), order);
    case JKind::Jbar:
        return jtheta(QMonomial(CycRat(-1), a), QMonomial::q(m), order);
    case JKind::Jm:
        return poch_inf(QMonomial::q(m), QMonomial::q(m), order);
    }
    return QSeries();
}

Lazy lmono(const QMonomial& m) { return Lazy::monomial(m); }

Lazy lpoch(const QMonomial& x, const QMonomial& base)
{
    return Lazy::leaf([x, base](const BigRat& n) { return poch_inf(x, base, n); },
                      "poch(" + x.to_string() + ";" + base.to_string() + ")");
}

Lazy lj(const QMonomial& x, const QMonomial& base)
{
    if (theta_vanishes(x, base)) return Lazy();
    return Lazy::leaf([x, base](const BigRat& n) { return jtheta(x, base, n); },
                      "j(" + x.to_string() + ";" + base.to_string() + ")");
}

Lazy lj(const std::vector<QMonomial>& xs, const QMonomial& base)
{
    if (xs.empty()) return Lazy::constant(1);
    Lazy r = lj(xs[0], base);
    for (size_t i = 1; i < xs.size(); ++i) r = r * lj(xs[i], base);
    return r;
}

Lazy lj_den(const QMonomial& x, const QMonomial& base)
{
    if (theta_vanishes(x, base))
        throw GenericityError("theta denominator j(" + x.to_string() + ";" + base.to_string() + ") vanishes");
    return lj(x, base);
}

Lazy lJ(long a, long m, const QMonomial& base) { return lj(base.pow(a), base.pow(m)); }
Lazy lJbar(long a, long m, const QMonomial& base) { return lj(-base.pow(a), base.pow(m)); }
Lazy lJm(long m, const QMonomial& base) { return lpoch(base.pow(m), base.pow(m)); }

} // namespace qseries
