#include "qseries/qmonomial.hpp"
#include "qseries/errors.hpp"

namespace qseries {

CycRat coeff_pow(const CycRat& c, const BigRat& r)
{
    if (is_integer(r)) return c.pow(to_long(r));
    if (c.is_one()) return c;
    auto root = c.as_root_of_unity();
    if (!root)
        throw UnsupportedSubstitution("fractional power " + to_string(r) + " of non-root-of-unity " +
                                      c.to_string());
    BigInt num = r.get_num() * root->first;
    BigInt M = r.get_den() * root->second;
    BigInt k;
    mpz_fdiv_r(k.get_mpz_t(), num.get_mpz_t(), M.get_mpz_t());
    return zeta(to_long(k), to_long(M));
}

QMonomial QMonomial::inverse() const
{
    if (is_zero()) throw DivisionByZero("inverse of the zero monomial");
    return {coeff.inverse(), -expo};
}

QMonomial QMonomial::pow(long k) const
{
    if (k == 0) return {};
    return {coeff.pow(k), expo * k};
}

QMonomial QMonomial::pow(const BigRat& r) const { return {coeff_pow(coeff, r), expo * r}; }

std::string QMonomial::to_string() const
{
    if (is_zero()) return "0";
    std::string qpart;
    if (expo != 0) {
        qpart = "q";
        if (expo != 1) {
            if (is_integer(expo) && expo > 0)
                qpart += "^" + expo.get_str();
            else
                qpart += "^(" + expo.get_str() + ")";
        }
    }
    if (qpart.empty()) {
        std::string c = coeff.to_string();
        return coeff.is_rational() ? c : "(" + c + ")";
    }
    if (coeff.is_one()) return qpart;
    if (coeff == CycRat(-1)) return "-" + qpart;
    if (coeff.is_rational()) return coeff.to_string() + "*" + qpart;
    return "(" + coeff.to_string() + ")*" + qpart;
}

} // namespace qseries
