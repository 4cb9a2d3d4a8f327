#pragma once

#include "qseries/bigrat.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qseries {

// integer coefficients of the N-th cyclotomic polynomial, low degree first
const std::vector<BigInt>& cyclotomic_poly(long N);
long euler_phi(long N);

// reduce a polynomial in place modulo Phi_N; result has length phi(N)
void reduce_mod_cyclotomic(std::vector<BigRat>& p, long N);
void reduce_mod_cyclotomic(std::vector<BigInt>& p, long N);

// Element of Q(zeta_N), stored as a polynomial of degree < phi(N) in zeta_N.
// The conductor is never 2 mod 4 and is 1 exactly when the value is rational.
class CycRat {
public:
    CycRat() : c_(1) {}
    CycRat(long v) : c_(1, BigRat(v)) {}
    CycRat(const BigRat& v) : c_(1, v) {}

    // coefficients w.r.t. powers of zeta_N, length phi(N) after reduction
    static CycRat from_poly(long N, std::vector<BigRat> poly);

    long conductor() const { return n_; }
    const std::vector<BigRat>& coeffs() const { return c_; }

    bool is_zero() const { return n_ == 1 && c_[0] == 0; }
    bool is_one() const { return n_ == 1 && c_[0] == 1; }
    bool is_rational() const { return n_ == 1; }
    const BigRat& rational() const;

    // representation at conductor M (a multiple of the conductor), length phi(M)
    std::vector<BigRat> lifted(long M) const;

    CycRat inverse() const;
    CycRat pow(long e) const;

    // value as zeta_M^k if it is a root of unity
    std::optional<std::pair<long, long>> as_root_of_unity() const;

    std::string to_string() const;

    friend CycRat operator+(const CycRat& a, const CycRat& b);
    friend CycRat operator-(const CycRat& a, const CycRat& b);
    friend CycRat operator*(const CycRat& a, const CycRat& b);
    friend CycRat operator/(const CycRat& a, const CycRat& b);
    CycRat operator-() const;
    CycRat& operator+=(const CycRat& b) { return *this = *this + b; }
    CycRat& operator-=(const CycRat& b) { return *this = *this - b; }
    CycRat& operator*=(const CycRat& b) { return *this = *this * b; }
    friend bool operator==(const CycRat& a, const CycRat& b);

private:
    void normalize();
    long n_ = 1;
    std::vector<BigRat> c_;
};

CycRat zeta(long k, long N);
CycRat cyc_mul(const CycRat& a, const CycRat& b);
CycRat cyc_inv(const CycRat& a);

} // namespace qseries
