#include "qseries/bigrat.hpp"
#include "qseries/errors.hpp"

#include <numeric>

namespace qseries {

BigRat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

BigRat make_rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

bool is_integer(const BigRat& r) { return r.get_den() == 1; }

BigInt floor_rat(const BigRat& r)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

BigInt ceil_rat(const BigRat& r)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

long to_long(const BigInt& z)
{
    if (!z.fits_slong_p()) throw Error("integer out of machine range: " + z.get_str());
    return z.get_si();
}

long to_long(const BigRat& r)
{
    if (!is_integer(r)) throw Error("expected an integer, got " + to_string(r));
    return to_long(r.get_num());
}

std::string to_string(const BigRat& r) { return r.get_str(); }

BigInt lcm(const BigInt& a, const BigInt& b)
{
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

BigRat binom2(const BigRat& a)
{
    BigRat r = a * (a - 1) / 2;
    return r;
}

} // namespace qseries
