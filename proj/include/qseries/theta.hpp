#pragma once

#include "qseries/lazy.hpp"
#include "qseries/qseries.hpp"

#include <vector>

namespace qseries {

// (x;base)_infinity known for exponents < order; x.expo >= 0
QSeries poch_inf(const QMonomial& x, const QMonomial& base, const BigRat& order);
// (x;base)_n, exact; n >= 0
QSeries poch_fin(const QMonomial& x, const QMonomial& base, long n);

// x' = base^n x with 0 < expo(x') <= expo(base) and j(x) = factor * j(x')
struct ThetaNormal {
    QMonomial factor;
    QMonomial x;
    long shift;
};
ThetaNormal theta_normalize(const QMonomial& x, const QMonomial& base);
// j(x;base) is identically zero, i.e. x is an integral power of base
bool theta_vanishes(const QMonomial& x, const QMonomial& base);

QSeries jtheta(const QMonomial& x, const QMonomial& base, const BigRat& order);
QSeries jtheta_sum_oracle(const QMonomial& x, const QMonomial& base, const BigRat& order);

enum class JKind { J, Jbar, Jm };
// base q; for Jm the parameter a is ignored
QSeries J_std(JKind kind, long a, long m, const BigRat& order);

// lazy building blocks over an arbitrary base
Lazy lpoch(const QMonomial& x, const QMonomial& base);
Lazy lj(const QMonomial& x, const QMonomial& base);
Lazy lj(const std::vector<QMonomial>& xs, const QMonomial& base);
// j(x;base) meant for a denominator: GenericityError if it vanishes
Lazy lj_den(const QMonomial& x, const QMonomial& base);
Lazy lJ(long a, long m, const QMonomial& base = QMonomial::q());
Lazy lJbar(long a, long m, const QMonomial& base = QMonomial::q());
Lazy lJm(long m, const QMonomial& base = QMonomial::q());
Lazy lmono(const QMonomial& m);

} // namespace qseries
