#pragma once

#include "qseries/bigrat.hpp"
#include "qseries/cycrat.hpp"

#include <string>

namespace qseries {

// c^r for rational r: integral r is plain powering, otherwise c must be a
// root of unity zeta_M^t and the branch zeta_{M*den}^{t*num} is taken
CycRat coeff_pow(const CycRat& c, const BigRat& r);

struct QMonomial {
    CycRat coeff{1};
    BigRat expo{0};

    QMonomial() = default;
    QMonomial(const CycRat& c, const BigRat& e) : coeff(c), expo(e)
    {
        if (coeff.is_zero()) expo = 0;
    }

    static QMonomial q(const BigRat& e = 1) { return {CycRat(1), e}; }
    static QMonomial constant(const CycRat& c) { return {c, BigRat(0)}; }
    static QMonomial zero() { return {CycRat(0), BigRat(0)}; }

    bool is_zero() const { return coeff.is_zero(); }
    bool is_one() const { return coeff.is_one() && expo == 0; }

    QMonomial inverse() const;
    QMonomial pow(long k) const;
    QMonomial pow(const BigRat& r) const;
    QMonomial operator-() const { return {-coeff, expo}; }

    std::string to_string() const;

    friend QMonomial operator*(const QMonomial& a, const QMonomial& b)
    {
        return {a.coeff * b.coeff, a.expo + b.expo};
    }
    friend QMonomial operator/(const QMonomial& a, const QMonomial& b) { return a * b.inverse(); }
    friend bool operator==(const QMonomial& a, const QMonomial& b)
    {
        return a.coeff == b.coeff && a.expo == b.expo;
    }
};

} // namespace qseries
