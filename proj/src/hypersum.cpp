#include "qseries/hypersum.hpp"
#include "qseries/errors.hpp"

namespace qseries {

namespace {

QSeries binomial(const QMonomial& w)
{
    return QSeries::constant(CycRat(1)) - QSeries::monomial(w);
}

} // namespace

QSeries hyper_sum(const std::function<HyperStep(long)>& step, const BigRat& order, long start)
{
    QSeries sum = QSeries::zero(order);
    QSeries t;
    BigRat bound = 0;
    for (long n = 0;; ++n) {
        if (n > 100000) throw Error("hypergeometric sum failed to terminate");
        HyperStep s = step(n);
        BigRat before = bound;
        bool positive = true;
        if (n > 0 && s.mono.expo < 0) throw Error("internal: negative step monomial in hypergeometric sum");
        if (n == 0) {
            t = QSeries::monomial(s.mono);
            bound = s.mono.expo;
        } else {
            t = t.times(s.mono);
            bound += s.mono.expo;
        }
        for (auto& w : s.num) {
            if (w.expo < 0) throw Error("internal: numerator binomial with negative exponent");
            if (w.expo == 0) positive = false;
            if (w.is_one()) {
                t = QSeries();
                break;
            }
            t = series_mul(t, binomial(w));
        }
        if (t.is_exact_zero()) break;
        for (auto& w : s.den) {
            if (w.is_one()) throw GenericityError("pole: factor (1 - " + w.to_string() + ") in a denominator");
            if (w.expo <= 0) positive = false;
            if (w.expo < 0) bound -= w.expo;
            t = series_div(t, binomial(w), order);
        }
        t = t.truncated(order);
        if (n >= start) sum = sum + t;
        if (bound >= order && positive && (n == 0 || bound > before)) break;
    }
    return sum.truncated(order);
}

} // namespace qseries
