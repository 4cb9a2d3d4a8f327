#pragma once

// Dense accumulation of products of binomials (1 - c q^s) with coefficients
// lifted into a fixed cyclotomic field.

#include "qseries/qseries.hpp"

#include <vector>

namespace qseries::detail {

struct Binomial {
    CycRat c;
    QSeries::Key s; // in units of 1/D
};

// prod (1 - c_i q^(s_i/D)), truncated to keys < K when K is given
QSeries binomial_product(const std::vector<Binomial>& fs, long D, std::optional<QSeries::Key> K);

} // namespace qseries::detail
