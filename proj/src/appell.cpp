#include "qseries/appell.hpp"
#include "qseries/errors.hpp"
#include "qseries/hypersum.hpp"
#include "qseries/theta.hpp"

namespace qseries {

namespace {

QMonomial signed_pow(const QMonomial& m, long r)
{
    // (-m)^r
    QMonomial p = m.pow(r);
    return r % 2 ? -p : p;
}

long binom2l(long r) { return r * (r - 1) / 2; }

} // namespace

QSeries lerch_sum(const LerchSum& s, const BigRat& order)
{
    if (s.base.expo <= 0) throw UnsupportedArgument("base must have positive exponent");
    if (s.A <= 0) throw UnsupportedArgument("Lerch sum needs a positive quadratic coefficient");
    const BigRat& eb = s.base.expo;
    auto num_expo = [&](long r) -> BigRat { return eb * BigRat(s.A * binom2l(r) + s.B * r) + s.zf.expo * r; };
    auto w_expo = [&](long r) -> BigRat { return eb * BigRat(s.step * r) + s.w0.expo; };
    // lower bound for the valuation of term r; convex in r
    auto L = [&](long r) -> BigRat {
        BigRat ew = w_expo(r);
        return ew < 0 ? num_expo(r) - ew : num_expo(r);
    };
    long D = lcm_long(lcm_long(to_long(eb.get_den()), to_long(s.zf.expo.get_den())),
                      lcm_long(to_long(s.w0.expo.get_den()), to_long(order.get_den())));
    std::vector<QSeries::Term> terms;
    auto push = [&](const BigRat& e, const CycRat& c) { terms.push_back({to_long(e * D), c}); };
    auto add = [&](long r) {
        QMonomial num = s.base.pow(s.A * binom2l(r) + s.B * r) * s.zf.pow(r);
        if (s.alternating && r % 2) num = -num;
        QMonomial w = s.base.pow(s.step * r) * s.w0;
        if (w.is_one()) throw GenericityError("pole: Lerch term r = " + std::to_string(r) + " has 1/(1-1)");
        if (w.expo > 0) {
            CycRat c = num.coeff;
            for (BigRat e = num.expo; e < order; e += w.expo) {
                push(e, c);
                c = c * w.coeff;
            }
        } else if (w.expo == 0) {
            if (num.expo < order) push(num.expo, num.coeff * (CycRat(1) - w.coeff).inverse());
        } else {
            QMonomial wi = w.inverse();
            CycRat c = -(num.coeff * wi.coeff);
            for (BigRat e = num.expo + wi.expo; e < order; e += wi.expo) {
                push(e, c);
                c = c * wi.coeff;
            }
        }
    };
    for (long r = 0;; ++r) {
        BigRat l = L(r);
        if (l < order) add(r);
        else if (L(r + 1) >= l) break;
    }
    for (long r = -1;; --r) {
        BigRat l = L(r);
        if (l < order) add(r);
        else if (L(r - 1) >= l) break;
    }
    return QSeries::from_terms(D, order_to_key(order, D), std::move(terms));
}

Lazy m_lazy(const QMonomial& x, const QMonomial& base, const QMonomial& z)
{
    if (theta_vanishes(z, base))
        throw DivisionByZero("m(" + x.to_string() + "," + base.to_string() + "," + z.to_string() +
                             "): j(z;q) vanishes");
    LerchSum s{base, 1, 0, true, z, x * z / base, 1};
    Lazy sum = Lazy::leaf([s](const BigRat& n) { return lerch_sum(s, n); }, "lerch");
    return sum / lj(z, base);
}

QSeries m_eval(const QMonomial& x, const QMonomial& base, const QMonomial& z, const BigRat& order)
{
    return m_lazy(x, base, z).eval(order);
}

Lazy changing_z_lazy(const QMonomial& x, const QMonomial& base, const QMonomial& z0, const QMonomial& z1)
{
    if (theta_vanishes(z1 / z0, base) || theta_vanishes(x * z0 * z1, base)) return Lazy();
    Lazy num = z0 * (lJm(1, base).pow(3) * lj(z1 / z0, base) * lj(x * z0 * z1, base));
    Lazy den = lj_den(z0, base) * lj_den(z1, base) * lj_den(x * z0, base) * lj_den(x * z1, base);
    return num / den;
}

QSeries changing_z_delta(const QMonomial& x, const QMonomial& base, const QMonomial& z0, const QMonomial& z1,
                         const BigRat& order)
{
    return changing_z_lazy(x, base, z0, z1).eval(order);
}

QSeries g_eval(const QMonomial& x, const QMonomial& base, const BigRat& order)
{
    if (x.is_zero()) throw UnsupportedArgument("g at x = 0");
    QMonomial xi = x.inverse();
    auto step = [&](long n) -> HyperStep {
        if (n == 0) return {QMonomial(), {}, {x}};
        return {base.pow(2 * n - 1), {}, {base.pow(n) * x, base.pow(n) * xi}};
    };
    BigRat inner = order + x.expo;
    QSeries s = hyper_sum(step, inner) - QSeries::constant(CycRat(1));
    return s.times(xi).truncated(order);
}

QSeries h_eval(const QMonomial& x, const QMonomial& base, const BigRat& order)
{
    return h_lazy(x, base).eval(order);
}

QSeries k_eval(const QMonomial& x, const QMonomial& base, const BigRat& order)
{
    return k_lazy(x, base).eval(order);
}

Lazy g_lazy(const QMonomial& x, const QMonomial& base)
{
    return Lazy::leaf([x, base](const BigRat& n) { return g_eval(x, base, n); }, "g");
}

Lazy h_lazy(const QMonomial& x, const QMonomial& base)
{
    LerchSum s{base, 2, 2, true, QMonomial(), x, 1};
    Lazy sum = Lazy::leaf([s](const BigRat& n) { return lerch_sum(s, n); }, "h-sum");
    return sum / lj(base, base.pow(2));
}

Lazy k_lazy(const QMonomial& x, const QMonomial& base)
{
    LerchSum s{base, 4, 3, false, QMonomial(), x.pow(2), 2};
    Lazy sum = Lazy::leaf([s](const BigRat& n) { return lerch_sum(s, n); }, "k-sum");
    return sum / (x * lj(-base, base.pow(4)));
}

Lazy msplit_rhs(long n, const QMonomial& x, const QMonomial& q, const QMonomial& z, const QMonomial& zp)
{
    QMonomial mx = -x;
    QMonomial qn = q.pow(n), qnn = q.pow(n * n);
    Lazy first;
    for (long r = 0; r < n; ++r) {
        QMonomial pre = q.pow(-(r * (r + 1) / 2)) * mx.pow(r);
        first = first + pre * m_lazy(-(q.pow(binom2l(n) - n * r) * mx.pow(n)), qnn, zp);
    }
    Lazy sum;
    for (long r = 0; r < n; ++r) {
        QMonomial pre = q.pow(binom2l(r)) * signed_pow(x * z, r);
        Lazy t = lj(-(q.pow(binom2l(n) + r) * mx.pow(n) * z * zp), qn) * lj(q.pow(n * r) * z.pow(n) / zp, qnn);
        Lazy d = lj_den(-(q.pow(binom2l(n)) * mx.pow(n) * zp), qn) * lj_den(q.pow(r) * z, qn);
        sum = sum + pre * (t / d);
    }
    Lazy front = zp * lJm(n, q).pow(3) / (lj_den(x * z, q) * lj_den(zp, qnn));
    return first + front * sum;
}

Lazy msplit2_rhs(const QMonomial& x, const QMonomial& q, const QMonomial& z)
{
    QMonomial z4 = z.pow(4);
    Lazy a = m_lazy(-(q * x.pow(2)), q.pow(4), z4);
    Lazy b = (x / q) * m_lazy(-(x.pow(2) / q), q.pow(4), z4);
    Lazy num = lJm(2, q) * lJm(4, q) * lj(-(x * z.pow(2)), q) * lj(-(x * z.pow(3)), q);
    Lazy den = x * (lj_den(x * z, q) * lj_den(z4, q.pow(4)) * lj_den(-(q * x.pow(2) * z4), q.pow(2)));
    return a - b - num / den;
}

Lazy msplit3_rhs(const QMonomial& x, const QMonomial& q)
{
    QMonomial m1 = QMonomial::constant(CycRat(-1));
    QMonomial q9 = q.pow(9), x3 = x.pow(3);
    Lazy s = m_lazy(q.pow(3) * x3, q9, m1) - (x / q) * m_lazy(x3, q9, m1) +
             (x.pow(2) / q.pow(3)) * m_lazy(x3 / q.pow(3), q9, m1);
    Lazy num = x * (lJm(1, q) * lJm(3, q).pow(2) * lJm(6, q) * lJm(9, q) * lj(q * x.pow(2), q.pow(2)));
    Lazy den = QMonomial(CycRat(2), 0) * q *
               (lJm(2, q).pow(2) * lJm(18, q).pow(2) * lj_den(-x3, q.pow(3)));
    return s + num / den;
}

Lazy rootsof1_lhs(long n, long k, const QMonomial& x, const QMonomial& q, const QMonomial& z)
{
    Lazy s;
    for (long t = 0; t < n; ++t)
        s = s + zeta(-k * t, n) * m_lazy(QMonomial(zeta(t, n), 0) * x, q, z);
    return s;
}

Lazy rootsof1_rhs(long n, long k, const QMonomial& x, const QMonomial& q, const QMonomial& z, const QMonomial& zp)
{
    QMonomial mx = -x, mz = -z;
    QMonomial qnn = q.pow(n * n);
    QMonomial nn = QMonomial::constant(CycRat(n));
    Lazy first = nn * q.pow(-(k * (k + 1) / 2)) * mx.pow(k) *
                 m_lazy(-(q.pow(binom2l(n) - n * k) * mx.pow(n)), qnn, zp);
    Lazy sum;
    for (long t = 0; t < n; ++t) {
        QMonomial pre = q.pow(t * (t + 1) / 2 + k * t) * mz.pow(t);
        Lazy num = lj(-(q.pow(n * (n + 1) / 2 + n * k + n * t) * mz.pow(n) / zp), qnn) *
                   lj(q.pow(n * t) * x.pow(n) * z.pow(n) * zp, qnn);
        Lazy den = lj_den(-(q.pow(binom2l(n) - n * k) * mx.pow(n) * zp), qnn) *
                   lj_den(q.pow(n * t) * x.pow(n) * z.pow(n), qnn);
        sum = sum + pre * (num / den);
    }
    Lazy front = nn * x.pow(k) * z.pow(k + 1) * lJm(n * n, q).pow(3) / (lj_den(z, q) * lj_den(zp, qnn));
    return first - front * sum;
}

} // namespace qseries
