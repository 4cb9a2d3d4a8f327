#pragma once

#include "qseries/lazy.hpp"
#include "qseries/qseries.hpp"

namespace qseries {

// Sum_r s^r base^(A*binom(r,2) + B*r) zf^r / (1 - base^(step*r) w0), s = -1 when alternating
struct LerchSum {
    QMonomial base;
    long A = 1;
    long B = 0;
    bool alternating = true;
    QMonomial zf;
    QMonomial w0;
    long step = 1;
};
QSeries lerch_sum(const LerchSum& spec, const BigRat& order);

// m(x,q,z) with q = base
QSeries m_eval(const QMonomial& x, const QMonomial& base, const QMonomial& z, const BigRat& order);
Lazy m_lazy(const QMonomial& x, const QMonomial& base, const QMonomial& z);

QSeries changing_z_delta(const QMonomial& x, const QMonomial& base, const QMonomial& z0, const QMonomial& z1,
                         const BigRat& order);
Lazy changing_z_lazy(const QMonomial& x, const QMonomial& base, const QMonomial& z0, const QMonomial& z1);

// universal mock theta functions
QSeries g_eval(const QMonomial& x, const QMonomial& base, const BigRat& order);
QSeries h_eval(const QMonomial& x, const QMonomial& base, const BigRat& order);
QSeries k_eval(const QMonomial& x, const QMonomial& base, const BigRat& order);
Lazy g_lazy(const QMonomial& x, const QMonomial& base);
Lazy h_lazy(const QMonomial& x, const QMonomial& base);
Lazy k_lazy(const QMonomial& x, const QMonomial& base);

// right-hand sides of the splitting results for m(x,q,z)
// general n with auxiliary z'
Lazy msplit_rhs(long n, const QMonomial& x, const QMonomial& base, const QMonomial& z, const QMonomial& zp);
// n = 2 with z' = z^4 and the closed quotient
Lazy msplit2_rhs(const QMonomial& x, const QMonomial& base, const QMonomial& z);
// n = 3 at z = -1
Lazy msplit3_rhs(const QMonomial& x, const QMonomial& base);
// sum_t w^(-kt) m(w^t x, q, z) expressed through m(., q^(n^2), z') and a theta sum
Lazy rootsof1_lhs(long n, long k, const QMonomial& x, const QMonomial& base, const QMonomial& z);
Lazy rootsof1_rhs(long n, long k, const QMonomial& x, const QMonomial& base, const QMonomial& z,
                  const QMonomial& zp);

} // namespace qseries
