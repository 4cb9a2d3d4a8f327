#pragma once

#include "qseries/bigrat.hpp"
#include "qseries/cycrat.hpp"
#include "qseries/qmonomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qseries {

// Truncated Laurent series in q^(1/D). Coefficients of q^(k/D) are known for
// every k < K, or for all k when the series is exact (a Laurent polynomial).
class QSeries {
public:
    using Key = long;
    struct Term {
        Key k;
        CycRat c;
    };

    QSeries() = default; // exact zero

    static QSeries constant(const CycRat& c);
    static QSeries monomial(const QMonomial& m);
    // zero on the window q^e, e < order
    static QSeries zero(const BigRat& order);
    // terms may be unsorted; duplicate keys are summed, keys >= K dropped
    static QSeries from_terms(long scale, std::optional<Key> K, std::vector<Term> terms);

    long scale() const { return d_; }
    bool is_exact() const { return !k_.has_value(); }
    Key order_key() const;
    // nullopt for exact series
    std::optional<BigRat> order() const;
    bool order_at_least(const BigRat& n) const;

    const std::vector<Term>& terms() const { return terms_; }
    bool is_exact_zero() const { return is_exact() && terms_.empty(); }
    // no nonzero coefficient on the known window
    bool known_zero() const { return terms_.empty(); }
    std::optional<BigRat> valuation() const;
    // valuation, or the order when nothing nonzero is known; exact zero throws
    BigRat valuation_or_order() const;

    CycRat coeff_at(const BigRat& e) const;
    QSeries rescaled(long D) const;
    QSeries truncated(const BigRat& order) const;
    QSeries operator-() const;
    QSeries times(const CycRat& c) const;
    QSeries times(const QMonomial& m) const;
    long max_conductor() const;

    std::string to_string(size_t max_terms = 12) const;

private:
    void normalize();
    long d_ = 1;
    std::optional<Key> k_;
    std::vector<Term> terms_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);
inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }
// cap bounds the returned window; required when a/b would be an infinite
// series of two exact operands
QSeries series_div(const QSeries& a, const QSeries& b, std::optional<BigRat> cap = std::nullopt);
// 1/(1-m) known for exponents < order
QSeries geom_inv(const QMonomial& m, const BigRat& order);
QSeries compose_monomial(const QSeries& s, const QMonomial& base);
CycRat coeff_at(const QSeries& s, const BigRat& e);

// ceil(order*D) as a key
QSeries::Key order_to_key(const BigRat& order, long D);

} // namespace qseries
