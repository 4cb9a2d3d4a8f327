#include "qseries/qseries.hpp"
#include "qseries/errors.hpp"

#include <algorithm>

namespace qseries {

using Key = QSeries::Key;
using Term = QSeries::Term;

QSeries::Key order_to_key(const BigRat& order, long D)
{
    return to_long(ceil_rat(order * D));
}

QSeries QSeries::constant(const CycRat& c)
{
    QSeries s;
    if (!c.is_zero()) s.terms_.push_back({0, c});
    return s;
}

QSeries QSeries::monomial(const QMonomial& m)
{
    QSeries s;
    if (m.is_zero()) return s;
    s.d_ = to_long(m.expo.get_den());
    s.terms_.push_back({to_long(m.expo.get_num()), m.coeff});
    return s;
}

QSeries QSeries::zero(const BigRat& order)
{
    QSeries s;
    s.d_ = to_long(order.get_den());
    s.k_ = to_long(order.get_num());
    return s;
}

QSeries QSeries::from_terms(long scale, std::optional<Key> K, std::vector<Term> terms)
{
    if (scale < 1) throw Error("series scale must be positive");
    std::stable_sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.k < y.k; });
    QSeries s;
    s.d_ = scale;
    s.k_ = K;
    for (auto& t : terms) {
        if (K && t.k >= *K) break;
        if (!s.terms_.empty() && s.terms_.back().k == t.k)
            s.terms_.back().c += t.c;
        else
            s.terms_.push_back(std::move(t));
    }
    s.normalize();
    return s;
}

void QSeries::normalize()
{
    std::erase_if(terms_, [](const Term& t) { return t.c.is_zero(); });
    long g = d_;
    if (k_) g = gcd_long(g, *k_);
    for (auto& t : terms_) {
        if (g == 1) break;
        g = gcd_long(g, t.k);
    }
    if (g > 1) {
        d_ /= g;
        if (k_) *k_ /= g;
        for (auto& t : terms_) t.k /= g;
    }
}

QSeries::Key QSeries::order_key() const
{
    if (!k_) throw Error("exact series has no order bound");
    return *k_;
}

std::optional<BigRat> QSeries::order() const
{
    if (!k_) return std::nullopt;
    return make_rat(*k_, d_);
}

bool QSeries::order_at_least(const BigRat& n) const
{
    return !k_ || make_rat(*k_, d_) >= n;
}

std::optional<BigRat> QSeries::valuation() const
{
    if (terms_.empty()) return std::nullopt;
    return make_rat(terms_.front().k, d_);
}

BigRat QSeries::valuation_or_order() const
{
    if (!terms_.empty()) return make_rat(terms_.front().k, d_);
    if (!k_) throw Error("valuation of the exact zero series");
    return make_rat(*k_, d_);
}

CycRat QSeries::coeff_at(const BigRat& e) const
{
    if (k_ && e >= make_rat(*k_, d_))
        throw OrderExceeded("coefficient of q^" + e.get_str() + " requested beyond known order " +
                            make_rat(*k_, d_).get_str());
    BigRat kk = e * d_;
    if (!is_integer(kk)) return CycRat();
    Key k = to_long(kk);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, Key v) { return t.k < v; });
    if (it != terms_.end() && it->k == k) return it->c;
    return CycRat();
}

QSeries QSeries::rescaled(long D) const
{
    if (D % d_) throw Error("rescale to a non-multiple scale");
    long m = D / d_;
    QSeries s = *this;
    s.d_ = D;
    if (s.k_) *s.k_ *= m;
    for (auto& t : s.terms_) t.k *= m;
    return s;
}

QSeries QSeries::truncated(const BigRat& order) const
{
    long D = lcm_long(d_, to_long(order.get_den()));
    QSeries s = rescaled(D);
    Key K = order_to_key(order, D);
    if (!s.k_ || *s.k_ > K) s.k_ = K;
    std::erase_if(s.terms_, [K](const Term& t) { return t.k >= K; });
    s.normalize();
    return s;
}

QSeries QSeries::operator-() const
{
    QSeries s = *this;
    for (auto& t : s.terms_) t.c = -t.c;
    return s;
}

QSeries QSeries::times(const CycRat& c) const
{
    if (c.is_zero()) return k_ ? zero(*order()) : QSeries();
    QSeries s = *this;
    if (c.is_one()) return s;
    for (auto& t : s.terms_) t.c = t.c * c;
    return s;
}

QSeries QSeries::times(const QMonomial& m) const
{
    if (m.is_zero()) return k_ ? zero(*order() + m.expo) : QSeries();
    long D = lcm_long(d_, to_long(m.expo.get_den()));
    QSeries s = rescaled(D).times(m.coeff);
    Key shift = to_long(m.expo * D);
    if (s.k_) *s.k_ += shift;
    for (auto& t : s.terms_) t.k += shift;
    s.normalize();
    return s;
}

long QSeries::max_conductor() const
{
    long M = 1;
    for (auto& t : terms_) M = lcm_long(M, t.c.conductor());
    return M;
}

std::string QSeries::to_string(size_t max_terms) const
{
    std::string out;
    size_t n = 0;
    for (auto& t : terms_) {
        if (n++ == max_terms) {
            out += " + ...";
            break;
        }
        QMonomial m(t.c, make_rat(t.k, d_));
        std::string s = m.to_string();
        if (out.empty())
            out = s;
        else if (s[0] == '-')
            out += " - " + s.substr(1);
        else
            out += " + " + s;
    }
    if (out.empty()) out = "0";
    if (k_) out += " + O(q^" + make_rat(*k_, d_).get_str() + ")";
    return out;
}

QSeries operator+(const QSeries& a, const QSeries& b)
{
    long L = lcm_long(a.scale(), b.scale());
    long ma = L / a.scale(), mb = L / b.scale();
    std::optional<Key> K;
    if (!a.is_exact()) K = a.order_key() * ma;
    if (!b.is_exact()) K = K ? std::min(*K, b.order_key() * mb) : b.order_key() * mb;
    std::vector<Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        Key ka = ia != ea ? ia->k * ma : 0;
        Key kb = ib != eb ? ib->k * mb : 0;
        if (ib == eb || (ia != ea && ka < kb)) {
            if (K && ka >= *K) { ia = ea; continue; }
            out.push_back({ka, ia->c});
            ++ia;
        } else if (ia == ea || kb < ka) {
            if (K && kb >= *K) { ib = eb; continue; }
            out.push_back({kb, ib->c});
            ++ib;
        } else {
            if (!(K && ka >= *K)) out.push_back({ka, ia->c + ib->c});
            ++ia;
            ++ib;
        }
    }
    return QSeries::from_terms(L, K, std::move(out));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

namespace {

long conductor_of(const std::vector<Term>& ts)
{
    long M = 1;
    for (auto& t : ts) M = lcm_long(M, t.c.conductor());
    return M;
}

// coefficients lifted to conductor M and scaled by a common denominator
struct Packed {
    long phi = 1;
    BigInt den = 1;
    std::vector<Key> keys;
    std::vector<BigInt> flat;
};

Packed pack(const std::vector<Term>& ts, size_t first, long mult, Key limit, long M, const CycRat& factor)
{
    Packed p;
    p.phi = euler_phi(M);
    std::vector<std::vector<BigRat>> polys;
    for (size_t i = first; i < ts.size(); ++i) {
        Key k = ts[i].k * mult;
        if (k >= limit) break;
        CycRat c = factor.is_one() ? ts[i].c : ts[i].c * factor;
        polys.push_back(c.lifted(M));
        p.keys.push_back(k);
        for (auto& x : polys.back())
            if (x != 0 && x.get_den() != 1) p.den = lcm(p.den, x.get_den());
    }
    p.flat.resize(p.keys.size() * p.phi);
    for (size_t i = 0; i < polys.size(); ++i)
        for (long u = 0; u < p.phi; ++u) {
            const BigRat& x = polys[i][u];
            if (x == 0) continue;
            p.flat[i * p.phi + u] = x.get_num() * (p.den / x.get_den());
        }
    return p;
}

// poly of width phi (already reduced) divided by den
CycRat unpack(const BigInt* poly, long phi, long M, const BigInt& den)
{
    if (phi == 1) return CycRat(make_rat(poly[0], den));
    std::vector<BigRat> v(phi);
    bool nz = false;
    for (long u = 0; u < phi; ++u) {
        if (poly[u] == 0) continue;
        nz = true;
        v[u] = make_rat(poly[u], den);
    }
    if (!nz) return CycRat();
    return CycRat::from_poly(M, std::move(v));
}

bool all_zero(const BigInt* p, long n)
{
    for (long i = 0; i < n; ++i)
        if (p[i] != 0) return false;
    return true;
}

} // namespace

QSeries series_mul(const QSeries& a, const QSeries& b)
{
    if (a.is_exact_zero() || b.is_exact_zero()) return QSeries();
    if (a.is_exact() && a.terms().size() == 1)
        return b.times(QMonomial(a.terms()[0].c, make_rat(a.terms()[0].k, a.scale())));
    if (b.is_exact() && b.terms().size() == 1)
        return a.times(QMonomial(b.terms()[0].c, make_rat(b.terms()[0].k, b.scale())));

    long L = lcm_long(a.scale(), b.scale());
    long ma = L / a.scale(), mb = L / b.scale();
    Key va = a.terms().empty() ? a.order_key() * ma : a.terms().front().k * ma;
    Key vb = b.terms().empty() ? b.order_key() * mb : b.terms().front().k * mb;
    std::optional<Key> K;
    if (!a.is_exact()) K = a.order_key() * ma + vb;
    if (!b.is_exact()) K = K ? std::min(*K, b.order_key() * mb + va) : b.order_key() * mb + va;
    Key lo = va + vb;
    if (a.terms().empty() || b.terms().empty() || (K && *K <= lo)) return QSeries::from_terms(L, K, {});
    Key hi = K ? *K : a.terms().back().k * ma + b.terms().back().k * mb + 1;

    long M = lcm_long(conductor_of(a.terms()), conductor_of(b.terms()));
    Packed pa = pack(a.terms(), 0, ma, hi - vb, M, CycRat(1));
    Packed pb = pack(b.terms(), 0, mb, hi - va, M, CycRat(1));
    long phi = pa.phi;
    long w = 2 * phi - 1;
    std::vector<BigInt> acc(static_cast<size_t>(hi - lo) * w);
    for (size_t i = 0; i < pa.keys.size(); ++i) {
        const BigInt* ai = &pa.flat[i * phi];
        for (size_t j = 0; j < pb.keys.size(); ++j) {
            Key s = pa.keys[i] + pb.keys[j];
            if (s >= hi) break;
            const BigInt* bj = &pb.flat[j * phi];
            BigInt* slot = &acc[static_cast<size_t>(s - lo) * w];
            if (phi == 1) {
                mpz_addmul(slot[0].get_mpz_t(), ai[0].get_mpz_t(), bj[0].get_mpz_t());
                continue;
            }
            for (long u = 0; u < phi; ++u) {
                if (ai[u] == 0) continue;
                for (long v = 0; v < phi; ++v)
                    if (bj[v] != 0) mpz_addmul(slot[u + v].get_mpz_t(), ai[u].get_mpz_t(), bj[v].get_mpz_t());
            }
        }
    }
    BigInt den = pa.den * pb.den;
    std::vector<Term> out;
    std::vector<BigInt> poly;
    for (Key s = lo; s < hi; ++s) {
        BigInt* slot = &acc[static_cast<size_t>(s - lo) * w];
        if (all_zero(slot, w)) continue;
        if (phi == 1) {
            out.push_back({s, CycRat(make_rat(slot[0], den))});
            continue;
        }
        poly.assign(slot, slot + w);
        reduce_mod_cyclotomic(poly, M);
        if (all_zero(poly.data(), phi)) continue;
        out.push_back({s, unpack(poly.data(), phi, M, den)});
    }
    return QSeries::from_terms(L, K, std::move(out));
}

namespace {

// X_t -= sum_j U_j X_{t-j}, all polys of width phi reduced mod Phi_M
template <class T>
void back_substitute(std::vector<T>& X, size_t n, const std::vector<Key>& ukeys, const std::vector<T>& uflat,
                     long phi, long M)
{
    long w = 2 * phi - 1;
    std::vector<T> tmp(w);
    for (size_t t = 0; t < n; ++t) {
        T* xt = &X[t * phi];
        if (phi == 1) {
            for (size_t j = 0; j < ukeys.size(); ++j) {
                Key jj = ukeys[j];
                if (static_cast<size_t>(jj) > t) break;
                const T& prev = X[t - jj];
                if (prev != 0) xt[0] -= uflat[j] * prev;
            }
            continue;
        }
        bool any = false;
        for (auto& v : tmp) v = 0;
        for (size_t j = 0; j < ukeys.size(); ++j) {
            Key jj = ukeys[j];
            if (static_cast<size_t>(jj) > t) break;
            const T* prev = &X[(t - jj) * phi];
            const T* uj = &uflat[j * phi];
            for (long u = 0; u < phi; ++u) {
                if (uj[u] == 0) continue;
                for (long v = 0; v < phi; ++v)
                    if (prev[v] != 0) {
                        tmp[u + v] += uj[u] * prev[v];
                        any = true;
                    }
            }
        }
        if (!any) continue;
        std::vector<T> red(tmp);
        reduce_mod_cyclotomic(red, M);
        for (long u = 0; u < phi; ++u) xt[u] -= red[u];
    }
}

} // namespace

QSeries series_div(const QSeries& a, const QSeries& b, std::optional<BigRat> cap)
{
    if (b.known_zero()) throw DivisionByZero("divisor is zero to its known order");
    if (b.is_exact() && b.terms().size() == 1) {
        QMonomial m(b.terms()[0].c, make_rat(b.terms()[0].k, b.scale()));
        QSeries r = a.times(m.inverse());
        if (cap && !r.is_exact()) r = r.truncated(*cap);
        return r;
    }
    if (a.is_exact_zero()) return QSeries();

    long L = lcm_long(a.scale(), b.scale());
    if (cap) L = lcm_long(L, to_long(cap->get_den()));
    long ma = L / a.scale(), mb = L / b.scale();
    Key vb = b.terms().front().k * mb;
    CycRat cbinv = b.terms().front().c.inverse();
    Key va = a.terms().empty() ? a.order_key() * ma : a.terms().front().k * ma;
    std::optional<Key> K;
    if (!a.is_exact()) K = a.order_key() * ma - vb;
    if (!b.is_exact()) {
        Key kb = va + b.order_key() * mb - 2 * vb;
        K = K ? std::min(*K, kb) : kb;
    }
    if (cap) {
        Key kc = order_to_key(*cap, L);
        K = K ? std::min(*K, kc) : kc;
    }
    if (!K) throw Error("quotient of exact series is infinite; a target order is required");
    Key hi = *K + vb;
    if (a.terms().empty() || hi <= va) return QSeries::from_terms(L, K, {});

    long M = lcm_long(lcm_long(conductor_of(a.terms()), conductor_of(b.terms())), cbinv.conductor());
    Packed pu = pack(b.terms(), 1, mb, hi - va + vb, M, cbinv);
    for (auto& k : pu.keys) k -= vb;
    Packed pa = pack(a.terms(), 0, ma, hi, M, cbinv);
    long phi = pa.phi;
    size_t n = static_cast<size_t>(hi - va);
    std::vector<Term> out;

    if (pu.den == 1) {
        std::vector<BigInt> X(n * phi);
        for (size_t i = 0; i < pa.keys.size(); ++i)
            for (long u = 0; u < phi; ++u) X[(pa.keys[i] - va) * phi + u] = pa.flat[i * phi + u];
        back_substitute(X, n, pu.keys, pu.flat, phi, M);
        for (size_t t = 0; t < n; ++t) {
            const BigInt* xt = &X[t * phi];
            if (all_zero(xt, phi)) continue;
            out.push_back({static_cast<Key>(va + t - vb), unpack(xt, phi, M, pa.den)});
        }
    } else {
        std::vector<BigRat> X(n * phi), U(pu.flat.size());
        for (size_t i = 0; i < pa.keys.size(); ++i)
            for (long u = 0; u < phi; ++u)
                X[(pa.keys[i] - va) * phi + u] = make_rat(pa.flat[i * phi + u], pa.den);
        for (size_t i = 0; i < pu.flat.size(); ++i) U[i] = make_rat(pu.flat[i], pu.den);
        back_substitute(X, n, pu.keys, U, phi, M);
        for (size_t t = 0; t < n; ++t) {
            std::vector<BigRat> v(X.begin() + t * phi, X.begin() + (t + 1) * phi);
            bool nz = std::any_of(v.begin(), v.end(), [](const BigRat& r) { return r != 0; });
            if (!nz) continue;
            out.push_back({static_cast<Key>(va + t - vb), CycRat::from_poly(M, std::move(v))});
        }
    }
    return QSeries::from_terms(L, K, std::move(out));
}

QSeries geom_inv(const QMonomial& m, const BigRat& order)
{
    if (m.is_one()) throw GenericityError("pole: 1/(1-m) with m = 1");
    if (m.is_zero()) return QSeries::constant(CycRat(1));
    if (m.expo == 0) return QSeries::constant((CycRat(1) - m.coeff).inverse());
    long D = lcm_long(to_long(m.expo.get_den()), to_long(order.get_den()));
    Key K = order_to_key(order, D);
    std::vector<Term> out;
    if (m.expo > 0) {
        Key step = to_long(m.expo * D);
        CycRat c(1);
        for (Key k = 0; k < K; k += step) {
            out.push_back({k, c});
            c = c * m.coeff;
        }
    } else {
        // 1/(1-m) = -m^{-1}/(1-m^{-1})
        Key step = to_long(-m.expo * D);
        CycRat inv = m.coeff.inverse();
        CycRat c = -inv;
        for (Key k = step; k < K; k += step) {
            out.push_back({k, c});
            c = c * inv;
        }
    }
    return QSeries::from_terms(D, K, std::move(out));
}

QSeries compose_monomial(const QSeries& s, const QMonomial& base)
{
    if (base.expo <= 0) throw UnsupportedSubstitution("substitution base must have positive exponent");
    long D = s.scale();
    long p = to_long(base.expo.get_num());
    long qd = to_long(base.expo.get_den());
    std::optional<QSeries::Key> K;
    if (!s.is_exact()) K = s.order_key() * p;
    std::vector<Term> out;
    out.reserve(s.terms().size());
    std::optional<std::pair<long, long>> root;
    if (!base.coeff.is_one()) root = base.coeff.as_root_of_unity();
    for (auto& t : s.terms()) {
        CycRat c = t.c;
        if (root)
            c = c * zeta(root->first * t.k, root->second * D);
        else if (!base.coeff.is_one())
            c = c * coeff_pow(base.coeff, make_rat(t.k, D));
        out.push_back({t.k * p, c});
    }
    return QSeries::from_terms(D * qd, K, std::move(out));
}

CycRat coeff_at(const QSeries& s, const BigRat& e) { return s.coeff_at(e); }

} // namespace qseries
