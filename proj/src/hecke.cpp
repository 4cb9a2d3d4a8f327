#include "qseries/hecke.hpp"
#include "qseries/appell.hpp"
#include "qseries/errors.hpp"
#include "qseries/theta.hpp"

#include <numeric>

namespace qseries {

namespace {

long binom2l(long r) { return r * (r - 1) / 2; }

QMonomial mono_const(const CycRat& c) { return QMonomial::constant(c); }

// powers of a fixed coefficient, cheap when it is a root of unity
class CoeffPow {
public:
    explicit CoeffPow(const CycRat& c) : c_(c)
    {
        if (c.is_one()) {
            period_ = 1;
        } else if (auto r = c.as_root_of_unity()) {
            period_ = r->second;
            for (long k = 0; k < period_; ++k) cache_.push_back(c.pow(k));
        }
    }
    CycRat operator()(long e) const
    {
        if (period_ == 1) return CycRat(1);
        if (period_ > 0) return cache_[((e % period_) + period_) % period_];
        return c_.pow(e);
    }
    bool trivial() const { return period_ == 1; }

private:
    CycRat c_;
    long period_ = 0;
    std::vector<CycRat> cache_;
};

// Sum_{i,j>=0} (-1)^{i+j} X^i Y^j base^{a binom(i,2) + b i j + c binom(j,2)} below `order`
QSeries quadrant(long a, long b, long c, const QMonomial& X, const QMonomial& Y, const QMonomial& base,
                 const BigRat& order)
{
    long D = lcm_long(lcm_long(to_long(base.expo.get_den()), to_long(X.expo.get_den())),
                      lcm_long(to_long(Y.expo.get_den()), to_long(order.get_den())));
    long eb = to_long(base.expo * D), ex = to_long(X.expo * D), ey = to_long(Y.expo * D);
    long K = to_long(ceil_rat(order * D));
    auto P = [&](long i) { return eb * a * binom2l(i) + ex * i; };
    auto Q = [&](long j) { return eb * c * binom2l(j) + ey * j; };
    long qmin = Q(0);
    for (long j = 1; Q(j) < Q(j - 1) || j == 1; ++j) qmin = std::min(qmin, Q(j));

    CoeffPow cb(base.coeff);
    CycRat cx = -X.coeff, cy = -Y.coeff;
    std::vector<CycRat> ypow{CycRat(1)};
    std::vector<QSeries::Term> terms;
    CycRat row(1);
    for (long i = 0;; ++i) {
        long lb = P(i) + qmin;
        if (lb >= K) {
            if (P(i + 1) >= P(i)) break;
        } else {
            for (long j = 0;; ++j) {
                long e = P(i) + Q(j) + eb * b * i * j;
                long e1 = P(i) + Q(j + 1) + eb * b * i * (j + 1);
                if (e < K) {
                    while ((long)ypow.size() <= j) ypow.push_back(ypow.back() * cy);
                    CycRat t = row * ypow[j];
                    if (!cb.trivial()) t = t * cb(a * binom2l(i) + b * i * j + c * binom2l(j));
                    terms.push_back({e, std::move(t)});
                } else if (e1 >= e) {
                    break;
                }
            }
        }
        row = row * cx;
    }
    return QSeries::from_terms(D, K, std::move(terms));
}

// (-m)^k
QMonomial negpow(const QMonomial& m, long k) { return (-m).pow(k); }

void require_nonvanishing(const QMonomial& x, const QMonomial& base)
{
    if (theta_vanishes(x, base))
        throw GenericityError("j(" + x.to_string() + ";" + base.to_string() + ") vanishes in a denominator");
}

// m(x,base,z) is undefined when z or xz is an integral power of base
void require_m_defined(const QMonomial& x, const QMonomial& base, const QMonomial& z)
{
    if (theta_vanishes(z, base) || theta_vanishes(x * z, base))
        throw GenericityError("m(" + x.to_string() + "," + base.to_string() + "," + z.to_string() + ") has a pole");
}

} // namespace

QSeries f_eval(const HeckeParams& p, const BigRat& order)
{
    if (p.a <= 0 || p.b <= 0 || p.c <= 0) throw UnsupportedArgument("f_{a,b,c} needs positive a, b, c");
    if (p.x.is_zero() || p.y.is_zero()) throw UnsupportedArgument("f_{a,b,c} at x = 0 or y = 0");
    if (p.base.expo <= 0) throw UnsupportedArgument("base must have positive exponent");
    const QMonomial& q = p.base;
    QSeries s1 = quadrant(p.a, p.b, p.c, p.x, p.y, q, order);
    // r, s < 0 through r -> -1-r, s -> -1-s
    QMonomial pre = -(q.pow(p.a + p.b + p.c) / (p.x * p.y));
    QMonomial X = q.pow(2 * p.a + p.b) / p.x, Y = q.pow(2 * p.c + p.b) / p.y;
    QSeries s2 = quadrant(p.a, p.b, p.c, X, Y, q, order - pre.expo).times(pre);
    return (s1 + s2).truncated(order);
}

Lazy f_lazy(const HeckeParams& p)
{
    return Lazy::leaf([p](const BigRat& n) { return f_eval(p, n); }, "f");
}

Lazy g_abc(const HeckeParams& p, const QMonomial& z1, const QMonomial& z0)
{
    const long a = p.a, b = p.b, c = p.c;
    if (b * b <= a * c) throw UnsupportedArgument("g_{a,b,c} needs b^2 > ac");
    const QMonomial& q = p.base;
    const QMonomial &x = p.x, &y = p.y;
    long disc = b * b - a * c;
    Lazy s;
    for (long t = 0; t < a; ++t) {
        QMonomial jx = q.pow(b * t) * x;
        QMonomial arg = -(q.pow(a * binom2l(b + 1) - c * binom2l(a + 1) - t * disc) * negpow(y, a) / negpow(x, b));
        require_m_defined(arg, q.pow(a * disc), z0);
        if (theta_vanishes(jx, q.pow(a))) continue;
        s = s + negpow(y, t) * q.pow(c * binom2l(t)) * (lj(jx, q.pow(a)) * m_lazy(arg, q.pow(a * disc), z0));
    }
    for (long t = 0; t < c; ++t) {
        QMonomial jy = q.pow(b * t) * y;
        QMonomial arg = -(q.pow(c * binom2l(b + 1) - a * binom2l(c + 1) - t * disc) * negpow(x, c) / negpow(y, b));
        require_m_defined(arg, q.pow(c * disc), z1);
        if (theta_vanishes(jy, q.pow(c))) continue;
        s = s + negpow(x, t) * q.pow(a * binom2l(t)) * (lj(jy, q.pow(c)) * m_lazy(arg, q.pow(c * disc), z1));
    }
    return s;
}

Lazy h_abc(const HeckeParams& p, const QMonomial& z1, const QMonomial& z0)
{
    const long a = p.a, b = p.b, c = p.c;
    if (b % a || b % c) throw UnsupportedArgument("h_{a,b,c} needs a | b and c | b");
    if (a * c >= b * b) throw UnsupportedArgument("h_{a,b,c} needs ac < b^2");
    const QMonomial& q = p.base;
    const QMonomial &x = p.x, &y = p.y;
    long ba = b / a, bc = b / c;
    Lazy s;
    QMonomial arg1 = -(q.pow(a * binom2l(ba + 1) - c) * (-y) * negpow(x, -ba));
    QMonomial arg0 = -(q.pow(c * binom2l(bc + 1) - a) * (-x) * negpow(y, -bc));
    require_m_defined(arg1, q.pow(b * b / a - c), z1);
    require_m_defined(arg0, q.pow(b * b / c - a), z0);
    if (!theta_vanishes(x, q.pow(a))) s = s + lj(x, q.pow(a)) * m_lazy(arg1, q.pow(b * b / a - c), z1);
    if (!theta_vanishes(y, q.pow(c))) s = s + lj(y, q.pow(c)) * m_lazy(arg0, q.pow(b * b / c - a), z0);
    return s;
}

Lazy theta_np(long n, long p, const QMonomial& x, const QMonomial& y, const QMonomial& q)
{
    if (n <= 0 || p <= 0 || std::gcd(n, p) != 1) throw UnsupportedArgument("theta_{n,p} needs gcd(n,p) = 1");
    BigRat delta = n % 2 ? BigRat(0) : make_rat(1, 2);
    BigRat h = make_rat(n - 1, 2), h1 = make_rat(n + 1, 2);
    long big = p * p * (2 * n + p);
    QMonomial qbig = q.pow(big);
    Lazy s;
    for (long rs = 0; rs < p; ++rs) {
        for (long ss = 0; ss < p; ++ss) {
            BigRat r = rs + delta, sv = ss + delta;
            long al = to_long(BigRat(r - h)), be = to_long(BigRat(sv + h1));
            QMonomial n1 = -(q.pow(n * p * to_long(BigRat(sv - r))) * x.pow(n) / y.pow(n));
            QMonomial n2 = q.pow(to_long(BigRat(p * (2 * n + p) * (r + sv) + p * (n + p)))) * x.pow(p) * y.pow(p);
            QMonomial d1 = q.pow(BigRat(p * (2 * n + p) * r + make_rat(p * (n + p), 2))) * negpow(y, n + p) /
                           negpow(x, n);
            QMonomial d2 = q.pow(BigRat(p * (2 * n + p) * sv + make_rat(p * (n + p), 2))) * negpow(x, n + p) /
                           negpow(y, n);
            require_nonvanishing(d1, qbig);
            require_nonvanishing(d2, qbig);
            if (theta_vanishes(n1, q.pow(n * p * p)) || theta_vanishes(n2, qbig)) continue;
            QMonomial pre = q.pow(n * binom2l(al) + (n + p) * al * be + n * binom2l(be)) * negpow(x, al) *
                            negpow(y, be);
            Lazy num = lJm(big, q).pow(3) * lj(n1, q.pow(n * p * p)) * lj(n2, qbig);
            s = s + pre * (num / (lj_den(d1, qbig) * lj_den(d2, qbig)));
        }
    }
    return s;
}

Lazy theta_abc(const HeckeParams& prm)
{
    const long a = prm.a, b = prm.b, c = prm.c;
    if (b % a || b % c || a * c >= b * b) throw UnsupportedArgument("theta_{a,b,c} needs a | b, c | b, ac < b^2");
    const QMonomial& q = prm.base;
    const QMonomial &x = prm.x, &y = prm.y;
    const long ba = b / a, bc = b / c;
    const long u = b * b / a - c, v = b * b / c - a;
    if ((b * b) % (a * c)) throw UnsupportedArgument("theta_{a,b,c}: b^2/(ac) must be integral");
    const long w = b * (b * b / (a * c) - 1);
    // b^3(b-a)/(2a^2c)
    BigRat shift = make_rat(b * b * b * (b - a), 2 * a * a * c);
    QMonomial qw = q.pow(w);
    QMonomial qmid = q.pow((b * b / a) * (b * b / (a * c) - 1));
    Lazy s;
    for (long d = 0; d < bc; ++d) {
        for (long e = 0; e < ba; ++e) {
            for (long f = 0; f < ba; ++f) {
                QMonomial j1 = q.pow(u * (d + 1) + b * f) * y;
                QMonomial j2 = q.pow(BigRat(w * (e + f + 1) - u * (d + 1) + shift)) * negpow(x, ba) / y;
                QMonomial j3 = q.pow(v * (e + 1) + u * (d + 1) - c * binom2l(bc) - a * binom2l(ba)) *
                               negpow(x, 1 - ba) * negpow(y, 1 - bc);
                QMonomial d1 = q.pow(v * (e + 1) - c * binom2l(bc)) * (-x) * negpow(y, -bc);
                QMonomial d2 = q.pow(u * (d + 1) - a * binom2l(ba)) * negpow(x, -ba) * (-y);
                require_nonvanishing(d1, qw);
                require_nonvanishing(d2, qw);
                if (theta_vanishes(j1, q.pow(b * b / a)) || theta_vanishes(j2, qmid) || theta_vanishes(j3, qw))
                    continue;
                QMonomial pre = q.pow(u * binom2l(d + 1) + v * binom2l(e + f + 1) + a * binom2l(f)) * negpow(x, f);
                Lazy num = lj(j1, q.pow(b * b / a)) * lj(j2, qmid) * lJm(w, q).pow(3) * lj(j3, qw);
                s = s + pre * (num / (lj_den(d1, qw) * lj_den(d2, qw)));
            }
        }
    }
    return s;
}

Lazy big_theta(long n, long p, const QMonomial& x, const QMonomial& y, const QMonomial& q)
{
    if (n <= 0) throw UnsupportedArgument("Theta_{n,p} needs n >= 1");
    auto J = [&](long m) { return lJm(m, q); };
    auto Jam = [&](long a, long m) { return lj(q.pow(a), q.pow(m)); };
    QMonomial yx = y / x;
    switch (p) {
    case 1:
        return Lazy();
    case 2: {
        if (n % 2 == 0) throw UnsupportedArgument("Theta_{n,2} needs n odd");
        long m4 = 4 * (n + 1);
        Lazy num = y.pow((n + 1) / 2) * (Jam(2 * n, 4 * n) * Jam(4 * (n + 1), 8 * (n + 1)) *
                                         lj({yx, q.pow(n + 2) * x * y}, q.pow(m4)) *
                                         lj(q.pow(2 * n) / (x.pow(2) * y.pow(2)), q.pow(8 * (n + 1))));
        Lazy den = q.pow(make_rat(n * n - 3, 2)) * x.pow((n - 3) / 2) *
                   (lj_den(yx.pow(n), q.pow(4 * n * (n + 1))) * lj_den(-(q.pow(n + 2) * x.pow(2)), q.pow(m4)) *
                    lj_den(-(q.pow(n + 2) * y.pow(2)), q.pow(m4)));
        return num / den;
    }
    case 3: {
        if (n % 3 == 0) throw UnsupportedArgument("Theta_{n,3} needs (n,3) = 1");
        long m3 = 3 * (2 * n + 3);
        QMonomial qm3 = q.pow(m3);
        QMonomial pre = q.pow(n * binom2l(n + 1)) * (-x) * negpow(y, n);
        Lazy num = J(3 * n) * J(m3) * lj(yx, qm3) *
                   lj({q.pow(n * n + n) * x, q.pow(n * n + n) * y}, q.pow(2 * n + 3));
        Lazy den = J(2 * n + 3).pow(2) * lj_den(yx.pow(n), q.pow(3 * n * (2 * n + 3))) *
                   lj_den(q.pow(3 * n * n + 3 * n) * x.pow(3), qm3) * lj_den(q.pow(3 * n * n + 3 * n) * y.pow(3), qm3);
        long e1 = 3 * n * n + 5 * n + 3, e2 = 3 * n * n + 7 * n + 6;
        Lazy brace = lj({q.pow(e1) * x.pow(2) * y, q.pow(e1) * x * y.pow(2)}, qm3) -
                     q.pow(2 * n * n + 2 * n) * x * y *
                         lj({q.pow(e2) * x.pow(2) * y, q.pow(e2) * x * y.pow(2)}, qm3);
        return pre * (num / den * brace);
    }
    case 4: {
        if (n % 2 == 0) throw UnsupportedArgument("Theta_{n,4} needs n odd");
        const long M = 2 * n + 4;
        QMonomial q4 = q.pow(4 * M), q2 = q.pow(2 * M), q8 = q.pow(8 * M);
        QMonomial xy2 = x.pow(2) * y.pow(2);
        QMonomial pre = q.pow(-(n * n + n - 3)) * x.pow(-(n - 3) / 2) * y.pow((n + 1) / 2);
        Lazy front = pre * (lj(yx, q4) / (lj_den(yx.pow(n), q.pow(4 * n * M)) *
                                          lj_den(-(q.pow(2 * n + 8) * x.pow(4)), q4) *
                                          lj_den(-(q.pow(2 * n + 8) * y.pow(4)), q4)));
        Lazy S1 = lj({q.pow(6 * n + 16) * xy2, -(q.pow(2 * M) * yx)}, q4) * lj(q.pow(n + 4) * x * y, q2) /
                  (J(2 * M).pow(3) * J(8 * M)) *
                  (lj({-(q.pow(2 * n + 8) * xy2), q.pow(2 * M) * yx.pow(2)}, q4) * J(4 * M).pow(2) +
                   q.pow(n + 4) * x.pow(2) *
                       (lj(-(q.pow(6 * n + 16) * xy2), q4) * lj({q.pow(2 * M) * yx, -yx}, q4).pow(2) / J(4 * M)));
        Lazy S2 = lj({q.pow(2 * n + 8) * xy2, -yx}, q4) * lj(q.pow(3 * n + 8) * x * y, q2) / J(2 * M).pow(2) *
                  (q.pow(n + 1) * (lj({-(q.pow(2 * n + 8) * xy2), q.pow(2 * M) * yx.pow(2)}, q4) * J(8 * M)) /
                       (y * J(4 * M)) +
                   q * x * (lj(-(q.pow(6 * n + 16) * xy2), q4) * lj(q.pow(4 * M) * yx.pow(2), q8).pow(2) / J(8 * M)));
        return front * (Jam(4 * n, 16 * n) * S1 - q * (Jam(8 * n, 16 * n) * S2));
    }
    default:
        throw UnsupportedArgument("Theta_{n,p} only for p in 1..4");
    }
}

Lazy master_rhs(long n, long p, const QMonomial& x, const QMonomial& y, const QMonomial& q)
{
    QMonomial m1 = mono_const(CycRat(-1));
    HeckeParams hp{n, n + p, n, x, y, q};
    return g_abc(hp, m1, m1) + theta_np(n, p, x, y, q) / lj_den(m1, q.pow(n * p * (2 * n + p)));
}

Lazy divisible_rhs(const HeckeParams& p)
{
    QMonomial m1 = mono_const(CycRat(-1));
    const long a = p.a, b = p.b, c = p.c;
    Lazy den = lj_den(m1, p.base.pow(b * b / a - c)) * lj_den(m1, p.base.pow(b * b / c - a));
    return h_abc(p, m1, m1) - theta_abc(p) / den;
}

Lazy subtheorem_rhs(long n, long p, const QMonomial& x, const QMonomial& y, const QMonomial& q)
{
    HeckeParams hp{n, n + p, n, x, y, q};
    QMonomial z = y.pow(n) / x.pow(n);
    return g_abc(hp, z, z.inverse()) - big_theta(n, p, x, y, q);
}

Lazy string_function_lazy(long N, long m, long l)
{
    if (N < 1 || l < 0 || l > N || ((m - l) % 2 + 2) % 2)
        throw UnsupportedArgument("string function needs N >= 1, 0 <= l <= N, m = l mod 2");
    HeckeParams hp{1, 1 + N, 1, QMonomial::q(1 + (m + l) / 2), QMonomial::q(1 - (m - l) / 2), QMonomial::q()};
    return f_lazy(hp) / lJm(1).pow(3);
}

QSeries string_function(long N, long m, long l, const BigRat& order)
{
    return string_function_lazy(N, m, l).eval(order);
}

} // namespace qseries
