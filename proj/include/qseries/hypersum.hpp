#pragma once

#include "qseries/qseries.hpp"

#include <functional>
#include <vector>

namespace qseries {

// One step of a q-hypergeometric sum: T_n = T_{n-1} * mono * prod(1-w, w in num) / prod(1-w, w in den).
// For n = 0 the step describes T_0 itself.
struct HyperStep {
    QMonomial mono;
    std::vector<QMonomial> num;
    std::vector<QMonomial> den;
};

// Sum_{n >= start} T_n known below `order`. Numerator binomials must have
// non-negative exponents and step monomials for n >= 1 non-negative exponents.
// The sum is cut once the valuation bound of T_n reaches the order, all
// binomial exponents of the step are positive and the bound is increasing,
// which presumes the step valuations are eventually non-decreasing (true for
// every Pochhammer-quotient summand with polynomially growing exponents).
QSeries hyper_sum(const std::function<HyperStep(long)>& step, const BigRat& order, long start = 0);

} // namespace qseries
