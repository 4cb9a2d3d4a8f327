#include "test_support.hpp"

#include "qseries/appell.hpp"

using namespace qtest;

namespace {

Lazy one() { return Lazy::constant(CycRat(1)); }

QSeries mono_series(const QMonomial& m) { return QSeries::monomial(m); }

// 1/(1 - w) through series division, independent of the Lerch expansion
QSeries recip_one_minus(const QMonomial& w, const BigRat& order)
{
    QSeries d = QSeries::constant(CycRat(1)) - mono_series(w);
    return series_div(QSeries::constant(CycRat(1)), d, order);
}

// Sum_{|n|<=R} c_n q^{a_n} / (1 - w_n) with all pieces supplied by the caller
QSeries bilateral(long R, const std::function<QMonomial(long)>& num, const std::function<QMonomial(long)>& w,
                  const BigRat& order)
{
    QSeries s = QSeries::zero(order);
    for (long n = -R; n <= R; ++n) {
        QMonomial a = num(n);
        QMonomial b = w(n);
        // shift the division so the divisor has valuation 0 or is rewritten
        QSeries t = b.expo < 0 ? (mono_series(-(a / b)) * recip_one_minus(b.inverse(), order - a.expo + b.expo))
                               : (mono_series(a) * recip_one_minus(b, order - a.expo));
        s = s + t.truncated(order);
    }
    return s;
}

// Eulerian sums by direct products of finite Pochhammer symbols
QSeries A_second(const BigRat& N)
{
    QSeries s = QSeries::zero(N);
    for (long n = 0; n < N; ++n) {
        QSeries t = mono_series(q(n + 1)) * poch_fin(mq(2), q(2), n);
        s = s + series_div(t, poch_fin(q(), q(2), n + 1), N);
    }
    return s;
}

QSeries psi_third(const BigRat& N)
{
    QSeries s = QSeries::zero(N);
    for (long n = 1; n * n < N; ++n) s = s + series_div(mono_series(q(n * n)), poch_fin(q(), q(2), n), N);
    return s;
}

} // namespace

TEST_CASE("lerch_sum term range")
{
    // plain bilateral sum (-1)^r q^{r(r-1)/2} z^r /(1 - q^{r-1} x z) vs a brute-force oracle
    QMonomial x = q(R(1, 3)), z = QMonomial(zeta(1, 3), R(1, 2));
    LerchSum s{q(), 1, 0, true, z, x * z / q(), 1};
    BigRat N = 40;
    auto num = [&](long r) { return (r % 2 ? -QMonomial() : QMonomial()) * q(r * (r - 1) / 2) * z.pow(r); };
    auto w = [&](long r) { return q(r - 1) * x * z; };
    CHECK_SERIES_EQ(lerch_sum(s, N), bilateral(30, num, w, N), N);
    LerchSum pole{q(), 1, 0, true, z, q(2), 1};
    CHECK_THROWS_AS(lerch_sum(pole, N), GenericityError);
}

TEST_CASE("m evaluations")
{
    BigRat N = 200;
    CHECK_SERIES_EQ(m_eval(q(), q(2), QMonomial::constant(CycRat(-1)), N), QSeries::constant(CycRat(R(1, 2))), N);
    CHECK_SERIES_EQ(m_eval(QMonomial::constant(CycRat(-1)), q(2), q(), N), QSeries::zero(N), N);
    CHECK_SERIES_EQ(m_eval(q(), q(4), q(2), BigRat(120)), -A_second(120), BigRat(120));
    CHECK_THROWS_AS(m_eval(q(), q(), q(3), 10), DivisionByZero);
    // x z = q: the r = 0 term has a pole
    CHECK_THROWS_AS(m_eval(q(R(3, 2)), q(), q(R(-1, 2)), 10), GenericityError);
}

TEST_CASE("m functional equations")
{
    std::mt19937 rng(11);
    BigRat N = 60;
    for_generic(rng, 8, [&](std::mt19937& g) {
        QMonomial base = rand_unit_mono(g, 1, 3);
        base.coeff = CycRat(1);
        QMonomial x = rand_mono(g), z = rand_mono(g);
        Lazy m = m_lazy(x, base, z);
        CHECK_SERIES_EQ(m, m_lazy(x, base, base * z), N);
        CHECK_SERIES_EQ(m, x.inverse() * m_lazy(x.inverse(), base, z.inverse()), N);
        CHECK_SERIES_EQ(m_lazy(base * x, base, z), one() - x * m, N);
        CHECK_SERIES_EQ(m, one() - (x / base) * m_lazy(x / base, base, z), N);
        CHECK_SERIES_EQ(m, lmono(x.inverse()) - x.inverse() * m_lazy(base * x, base, z), N);
        CHECK_SERIES_EQ(m, m_lazy(x, base, (x * z).inverse()), N);
    });
}

TEST_CASE("changing z")
{
    std::mt19937 rng(5);
    BigRat N = 80;
    QMonomial x = q(R(1, 2)), z0 = QMonomial(zeta(1, 4), 1);
    CHECK(changing_z_delta(x, q(), z0, z0, N).known_zero());
    CHECK(changing_z_delta(x, q(), z0, q() * z0, N).known_zero());
    for_generic(rng, 10, [&](std::mt19937& g) {
        QMonomial x = rand_mono(g), z0 = rand_mono(g), z1 = rand_mono(g);
        Lazy lhs = m_lazy(x, q(), z1) - m_lazy(x, q(), z0);
        CHECK_SERIES_EQ(lhs, changing_z_lazy(x, q(), z0, z1), N);
    });
}

TEST_CASE("m-splitting")
{
    std::mt19937 rng(7);
    BigRat N = 60;
    for_generic(rng, 4, [&](std::mt19937& g) {
        QMonomial x = rand_unit_mono(g), z = rand_unit_mono(g);
        CHECK_SERIES_EQ(m_lazy(x, q(), z), msplit2_rhs(x, q(), z), N);
    });
    for_generic(rng, 4, [&](std::mt19937& g) {
        QMonomial x = rand_unit_mono(g);
        CHECK_SERIES_EQ(m_lazy(x, q(), QMonomial::constant(CycRat(-1))), msplit3_rhs(x, q()), N);
    });
    for (long n : {2, 3}) {
        for_generic(rng, 3, [&](std::mt19937& g) {
            QMonomial x = rand_unit_mono(g), z = rand_unit_mono(g), zp = rand_unit_mono(g);
            CHECK_SERIES_EQ(m_lazy(x, q(), z), msplit_rhs(n, x, q(), z, zp), N);
        });
    }
}

TEST_CASE("roots of unity")
{
    std::mt19937 rng(9);
    BigRat N = 50;
    std::pair<long, long> cases[] = {{2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}};
    for (auto [n, k] : cases) {
        for_generic(rng, 2, [&](std::mt19937& g) {
            QMonomial x = rand_unit_mono(g), z = rand_unit_mono(g), zp = rand_unit_mono(g);
            INFO("n=" << n << " k=" << k);
            CHECK_SERIES_EQ(rootsof1_lhs(n, k, x, q(), z), rootsof1_rhs(n, k, x, q(), z, zp), N);
        });
    }
}

TEST_CASE("g, h, k")
{
    BigRat N = 100;
    // alternate form of g by direct products
    {
        QMonomial x = q(2), b = q(10);
        QSeries alt = QSeries::zero(N);
        for (long n = 0; 10 * n * (n + 1) < N; ++n) {
            QSeries den = poch_fin(x, b, n + 1) * poch_fin(b / x, b, n + 1);
            alt = alt + series_div(mono_series(b.pow(n * (n + 1))), den, N);
        }
        CHECK_SERIES_EQ(g_eval(x, b, N), alt, N);
    }
    CHECK_SERIES_EQ(QSeries::monomial(q()) * g_eval(q(), q(4), N), psi_third(N), N);

    std::mt19937 rng(3);
    for_generic(rng, 5, [&](std::mt19937& g) {
        QMonomial x = rand_unit_mono(g, -3, 3);
        QMonomial xi = x.inverse();
        Lazy rhs = -(xi * m_lazy(q(2) * xi.pow(3), q(3), x.pow(2))) - xi.pow(2) * m_lazy(q() * xi.pow(3), q(3), x.pow(2));
        CHECK_SERIES_EQ(g_lazy(x, q()), rhs, N);
    });
    for_generic(rng, 5, [&](std::mt19937& g) {
        QMonomial x = rand_unit_mono(g, -3, 3);
        CHECK_SERIES_EQ(h_lazy(x, q()), -(x.inverse() * m_lazy(q() / x.pow(2), q(2), x)), N);
    });
    for_generic(rng, 5, [&](std::mt19937& g) {
        QMonomial x = rand_unit_mono(g, -3, 3);
        QMonomial zz = -(x.pow(-2) / q());
        Lazy first = m_lazy(-(q() * x.pow(4)), q(4), zz) + (x.pow(2) / q()) * m_lazy(-(x.pow(4) / q()), q(4), zz);
        Lazy second = m_lazy(-x.pow(2), q(), x.pow(-2)) +
                      lJm(1).pow(4) / (QMonomial::constant(CycRat(2)) * (lJm(2).pow(2) * lj_den(x.pow(2), q())));
        CHECK_SERIES_EQ(x * k_lazy(x, q()), first, N);
        CHECK_SERIES_EQ(x * k_lazy(x, q()), second, N);
    });
    // fixed specializations
    CHECK_SERIES_EQ(h_eval(q(2), q(5), N), -(q(-2) * m_lazy(q(5) * q(-4), q(10), q(2))).eval(N), N);

    // direct bilateral sums
    {
        QMonomial b = q(3), x = q();
        auto num = [&](long n) { return (n % 2 ? -QMonomial() : QMonomial()) * b.pow(n * (n + 1)); };
        auto w = [&](long n) { return b.pow(n) * x; };
        QSeries direct = series_div(bilateral(20, num, w, N), jtheta(b, b.pow(2), N), N);
        CHECK_SERIES_EQ(h_eval(x, b, N), direct, N);
    }
    {
        QMonomial b = q(3), x = q();
        auto num = [&](long n) { return b.pow(n * (2 * n + 1)); };
        auto w = [&](long n) { return b.pow(2 * n) * x.pow(2); };
        QSeries den = QSeries::monomial(x) * jtheta(-b, b.pow(4), N + 1);
        QSeries direct = series_div(bilateral(20, num, w, N + 1), den, N);
        CHECK_SERIES_EQ(k_eval(x, b, N), direct, N);
    }
    CHECK_THROWS_AS(h_eval(q(3), q(), 10), GenericityError);
}
