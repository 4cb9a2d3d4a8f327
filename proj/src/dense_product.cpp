#include "dense_product.hpp"
#include "qseries/errors.hpp"

#include <algorithm>

namespace qseries::detail {

namespace {

using Key = QSeries::Key;

template <class T>
T from_rat(const BigRat& r);
template <>
BigInt from_rat<BigInt>(const BigRat& r) { return r.get_num(); }
template <>
BigRat from_rat<BigRat>(const BigRat& r) { return r; }

template <class T>
QSeries run(const std::vector<Binomial>& fs, long D, std::optional<Key> K, long M)
{
    long phi = euler_phi(M);
    Key lo = 0, hi = 1;
    for (auto& f : fs) {
        if (f.s < 0) lo += f.s;
        else hi += f.s;
    }
    if (K) hi = std::min(hi, *K);
    if (hi <= lo) return QSeries::from_terms(D, K, {});
    size_t n = static_cast<size_t>(hi - lo);
    std::vector<T> a(n * phi);
    if (0 >= lo && 0 < hi) a[(0 - lo) * phi] = 1;
    // current support, to avoid sweeping empty ranges
    Key cur_lo = 0, cur_hi = 1;
    std::vector<T> mat(phi * phi), tmp(phi);
    for (auto& f : fs) {
        // column u of mat is c * zeta_M^u
        for (long u = 0; u < phi; ++u) {
            auto col = (f.c * zeta(u, M)).lifted(M);
            for (long v = 0; v < phi; ++v) mat[v * phi + u] = from_rat<T>(col[v]);
        }
        auto apply = [&](T* dst, const T* src) {
            if (phi == 1) {
                if (src[0] != 0) dst[0] -= mat[0] * src[0];
                return;
            }
            for (long v = 0; v < phi; ++v) tmp[v] = 0;
            bool any = false;
            for (long u = 0; u < phi; ++u) {
                if (src[u] == 0) continue;
                any = true;
                for (long v = 0; v < phi; ++v)
                    if (mat[v * phi + u] != 0) tmp[v] += mat[v * phi + u] * src[u];
            }
            if (any)
                for (long v = 0; v < phi; ++v) dst[v] -= tmp[v];
        };
        Key new_lo = std::max(lo, std::min(cur_lo, cur_lo + f.s));
        Key new_hi = std::min(hi, std::max(cur_hi, cur_hi + f.s));
        if (f.s > 0) {
            for (Key k = new_hi - 1; k >= cur_lo + f.s; --k) apply(&a[(k - lo) * phi], &a[(k - f.s - lo) * phi]);
        } else if (f.s < 0) {
            for (Key k = new_lo; k < cur_hi + f.s; ++k) apply(&a[(k - lo) * phi], &a[(k - f.s - lo) * phi]);
        } else {
            std::vector<T> src(phi);
            for (Key k = cur_lo; k < cur_hi; ++k) {
                std::copy(&a[(k - lo) * phi], &a[(k - lo) * phi] + phi, src.begin());
                apply(&a[(k - lo) * phi], src.data());
            }
        }
        cur_lo = new_lo;
        cur_hi = new_hi;
    }
    std::vector<QSeries::Term> out;
    for (size_t t = 0; t < n; ++t) {
        const T* p = &a[t * phi];
        bool nz = false;
        for (long u = 0; u < phi; ++u) nz |= (p[u] != 0);
        if (!nz) continue;
        std::vector<BigRat> v(phi);
        for (long u = 0; u < phi; ++u) v[u] = BigRat(p[u]);
        out.push_back({static_cast<Key>(t) + lo, CycRat::from_poly(M, std::move(v))});
    }
    return QSeries::from_terms(D, K, std::move(out));
}

} // namespace

QSeries binomial_product(const std::vector<Binomial>& fs, long D, std::optional<Key> K)
{
    long M = 1;
    for (auto& f : fs) {
        if (K && f.s < 0) throw Error("internal: truncated binomial product with a negative shift");
        if (f.s == 0 && f.c.is_one()) return QSeries();
        M = lcm_long(M, f.c.conductor());
    }
    bool integral = true;
    for (auto& f : fs) {
        for (auto& x : f.c.lifted(M))
            if (x.get_den() != 1) integral = false;
        if (!integral) break;
    }
    if (integral) return run<BigInt>(fs, D, K, M);
    return run<BigRat>(fs, D, K, M);
}

} // namespace qseries::detail
