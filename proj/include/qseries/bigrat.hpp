#pragma once

#include <gmpxx.h>

#include <string>

namespace qseries {

using BigInt = mpz_class;
using BigRat = mpq_class;

// throws DivisionByZero on den == 0
BigRat make_rat(const BigInt& num, const BigInt& den);
BigRat make_rat(long num, long den = 1);

bool is_integer(const BigRat& r);
BigInt floor_rat(const BigRat& r);
BigInt ceil_rat(const BigRat& r);
long to_long(const BigInt& z);     // throws Error if it does not fit
long to_long(const BigRat& r);     // r must be integral
std::string to_string(const BigRat& r);

BigInt lcm(const BigInt& a, const BigInt& b);
long lcm_long(long a, long b);
long gcd_long(long a, long b);

// generalized binomial a(a-1)/2
BigRat binom2(const BigRat& a);

} // namespace qseries
