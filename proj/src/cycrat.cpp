#include "qseries/cycrat.hpp"
#include "qseries/errors.hpp"

#include <map>
#include <mutex>

namespace qseries {

namespace {

std::mutex g_cyc_mutex;
std::map<long, std::vector<BigInt>> g_cyc_cache;

std::vector<BigInt> compute_cyclotomic(long N)
{
    // x^N - 1 divided by Phi_d for each proper divisor d
    std::vector<BigInt> num(N + 1);
    num[0] = -1;
    num[N] = 1;
    for (long d = 1; d < N; ++d) {
        if (N % d) continue;
        const std::vector<BigInt>& den = cyclotomic_poly(d);
        long dd = static_cast<long>(den.size()) - 1;
        long nd = static_cast<long>(num.size()) - 1;
        std::vector<BigInt> quo(nd - dd + 1);
        for (long i = nd; i >= dd; --i) {
            BigInt c = num[i];
            quo[i - dd] = c;
            if (c == 0) continue;
            for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        num = std::move(quo);
    }
    return num;
}

template <class T>
void reduce_impl(std::vector<T>& p, long N)
{
    const std::vector<BigInt>& phi = cyclotomic_poly(N);
    long d = static_cast<long>(phi.size()) - 1;
    for (long i = static_cast<long>(p.size()) - 1; i >= d; --i) {
        if (p[i] == 0) continue;
        T c = p[i];
        for (long j = 0; j < d; ++j) {
            if (phi[j] != 0) p[i - d + j] -= c * phi[j];
        }
        p[i] = 0;
    }
    p.resize(d);
}

using Poly = std::vector<BigRat>;

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// polynomial division over Q, b nonzero and trimmed
void divmod(Poly a, const Poly& b, Poly& quo, Poly& rem)
{
    trim(a);
    long db = static_cast<long>(b.size()) - 1;
    long da = static_cast<long>(a.size()) - 1;
    quo.assign(da >= db ? da - db + 1 : 0, BigRat(0));
    for (long i = da; i >= db; --i) {
        if (a[i] == 0) continue;
        BigRat c = a[i] / b[db];
        quo[i - db] = c;
        for (long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    rem = std::move(a);
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

} // namespace

const std::vector<BigInt>& cyclotomic_poly(long N)
{
    if (N < 1) throw Error("cyclotomic polynomial of non-positive index");
    {
        std::lock_guard<std::mutex> lock(g_cyc_mutex);
        auto it = g_cyc_cache.find(N);
        if (it != g_cyc_cache.end()) return it->second;
    }
    std::vector<BigInt> p;
    if (N == 1)
        p = {BigInt(-1), BigInt(1)};
    else
        p = compute_cyclotomic(N);
    std::lock_guard<std::mutex> lock(g_cyc_mutex);
    return g_cyc_cache.emplace(N, std::move(p)).first->second;
}

long euler_phi(long N)
{
    long r = N;
    long n = N;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

void reduce_mod_cyclotomic(std::vector<BigRat>& p, long N) { reduce_impl(p, N); }
void reduce_mod_cyclotomic(std::vector<BigInt>& p, long N) { reduce_impl(p, N); }

CycRat CycRat::from_poly(long N, std::vector<BigRat> poly)
{
    CycRat r;
    if (N == 1) {
        BigRat s = 0;
        for (auto& c : poly) s += c;
        r.c_[0] = s;
        return r;
    }
    if (N % 4 == 2) {
        // zeta_{2m} = -zeta_m^{(m+1)/2}
        long m = N / 2;
        std::vector<BigRat> q(static_cast<size_t>(poly.size() * (m + 1) / 2 + 1));
        for (size_t i = 0; i < poly.size(); ++i) {
            if (poly[i] == 0) continue;
            size_t e = i * static_cast<size_t>((m + 1) / 2);
            if (i % 2)
                q[e] -= poly[i];
            else
                q[e] += poly[i];
        }
        return from_poly(m, std::move(q));
    }
    reduce_mod_cyclotomic(poly, N);
    r.n_ = N;
    r.c_ = std::move(poly);
    r.normalize();
    return r;
}

void CycRat::normalize()
{
    if (n_ == 1) return;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return;
    c_.resize(1);
    n_ = 1;
}

const BigRat& CycRat::rational() const
{
    if (n_ != 1) throw Error("cyclotomic value is not rational: " + to_string());
    return c_[0];
}

std::vector<BigRat> CycRat::lifted(long M) const
{
    if (M % n_) throw Error("conductor lift to a non-multiple");
    if (M == n_) return c_;
    long step = M / n_;
    std::vector<BigRat> p(static_cast<size_t>((c_.size() - 1) * step + 1));
    for (size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
    reduce_mod_cyclotomic(p, M);
    return p;
}

CycRat operator+(const CycRat& a, const CycRat& b)
{
    if (a.n_ == 1 && b.n_ == 1) return CycRat(a.c_[0] + b.c_[0]);
    long M = lcm_long(a.n_, b.n_);
    auto pa = a.lifted(M);
    auto pb = b.lifted(M);
    for (size_t i = 0; i < pa.size(); ++i) pa[i] += pb[i];
    return CycRat::from_poly(M, std::move(pa));
}

CycRat CycRat::operator-() const
{
    CycRat r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycRat operator-(const CycRat& a, const CycRat& b) { return a + (-b); }

CycRat operator*(const CycRat& a, const CycRat& b)
{
    if (a.n_ == 1 && b.n_ == 1) return CycRat(a.c_[0] * b.c_[0]);
    if (a.n_ == 1 || b.n_ == 1) {
        const CycRat& s = a.n_ == 1 ? a : b;
        const CycRat& v = a.n_ == 1 ? b : a;
        if (s.c_[0] == 0) return CycRat();
        CycRat r = v;
        for (auto& c : r.c_) c *= s.c_[0];
        return r;
    }
    long M = lcm_long(a.n_, b.n_);
    auto pa = a.lifted(M);
    auto pb = b.lifted(M);
    return CycRat::from_poly(M, poly_mul(pa, pb));
}

CycRat CycRat::inverse() const
{
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic value");
    if (n_ == 1) return CycRat(1 / c_[0]);
    // extended Euclid with Phi_N: track s with s*a = r mod Phi_N
    Poly r0;
    for (auto& c : cyclotomic_poly(n_)) r0.emplace_back(c);
    Poly r1 = c_;
    trim(r1);
    Poly s0, s1{BigRat(1)};
    while (!r1.empty()) {
        Poly quo, rem;
        divmod(r0, r1, quo, rem);
        Poly s2 = poly_sub(s0, poly_mul(quo, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi_N is irreducible
    BigRat g = r0[0];
    for (auto& c : s0) c /= g;
    return from_poly(n_, std::move(s0));
}

CycRat operator/(const CycRat& a, const CycRat& b) { return a * b.inverse(); }

CycRat CycRat::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    CycRat result(1), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool operator==(const CycRat& a, const CycRat& b)
{
    if (a.n_ == b.n_) return a.c_ == b.c_;
    if (a.n_ == 1 || b.n_ == 1) return false; // rational values always sit at conductor 1
    long M = lcm_long(a.n_, b.n_);
    return a.lifted(M) == b.lifted(M);
}

std::optional<std::pair<long, long>> CycRat::as_root_of_unity() const
{
    if (n_ == 1) {
        if (c_[0] == 1) return std::make_pair(0L, 1L);
        if (c_[0] == -1) return std::make_pair(1L, 2L);
        return std::nullopt;
    }
    long M = n_ % 2 ? 2 * n_ : n_;
    for (long k = 0; k < M; ++k)
        if (zeta(k, M) == *this) return std::make_pair(k, M);
    return std::nullopt;
}

std::string CycRat::to_string() const
{
    if (n_ == 1) return c_[0].get_str();
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        BigRat c = c_[i];
        bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0) {
            out += c.get_str();
            continue;
        }
        if (c != 1) out += c.get_str() + "*";
        out += "zeta(" + std::to_string(i) + "," + std::to_string(n_) + ")";
    }
    return out;
}

CycRat zeta(long k, long N)
{
    if (N < 1) throw Error("zeta: conductor must be positive");
    k %= N;
    if (k < 0) k += N;
    if (N == 1) return CycRat(1);
    if (N == 2) return CycRat(k ? -1 : 1);
    std::vector<BigRat> p(k + 1);
    p[k] = 1;
    return CycRat::from_poly(N, std::move(p));
}

CycRat cyc_mul(const CycRat& a, const CycRat& b) { return a * b; }
CycRat cyc_inv(const CycRat& a) { return a.inverse(); }

} // namespace qseries
