#include "qseries/catalog.hpp"
#include "qseries/errors.hpp"
#include "qseries/hypersum.hpp"

#include <map>

namespace qseries {

namespace {

// (x;b)_{n+k} raised to p
struct Fac {
    QMonomial x, b;
    long k;
    int p;
};

QMonomial Q(long e) { return QMonomial::q(e); }
QMonomial mQ(long e) { return -QMonomial::q(e); }
Fac pf(QMonomial x, long b, long k = 0, int p = 1) { return {x, Q(b), k, p}; }

// sum_{n>=0} c s^n q^(a n^2 + b n + g) prod (x_i;b_i)_{n+k_i}^{p_i}
Lazy esum(BigRat a, BigRat b, BigRat g, std::vector<Fac> fs, long s = 1, CycRat c = 1)
{
    auto step = [=](long n) {
        HyperStep st;
        auto push = [&](const QMonomial& w, int p) {
            for (int t = 0; t < std::abs(p); ++t) (p > 0 ? st.num : st.den).push_back(w);
        };
        if (n == 0) {
            st.mono = QMonomial(c, g);
            for (auto& f : fs)
                for (long j = 0; j < f.k; ++j) push(f.x * f.b.pow(j), f.p);
        } else {
            st.mono = QMonomial(CycRat(s), a * (2 * n - 1) + b);
            for (auto& f : fs) push(f.x * f.b.pow(n - 1 + f.k), f.p);
        }
        return st;
    };
    return Lazy::leaf([step](const BigRat& N) { return hyper_sum(step, N); }, "eulerian");
}

Lazy one() { return Lazy::constant(1); }
BigRat R(long p, long q = 1) { return make_rat(p, q); }

CatalogRepr text(std::string t) { return {std::move(t), nullptr, nullptr}; }
CatalogRepr built(std::string what, std::function<Lazy()> f) { return {std::move(what), std::move(f), nullptr}; }

std::vector<CatalogEntry> make_catalog()
{
    std::vector<CatalogEntry> c;
    auto add = [&](std::string name, std::string ord, std::function<Lazy()> eul, std::vector<CatalogRepr> reprs) {
        c.push_back({std::move(name), std::move(ord), std::move(eul), std::move(reprs)});
    };

    // second order
    add("A_2nd", "2nd", [] { return esum(0, 1, 1, {pf(mQ(2), 2), pf(Q(1), 2, 1, -1)}); },
        {built("sum q^((n+1)^2) (-q;q^2)_n / (q;q^2)_{n+1}^2",
               [] { return esum(1, 2, 1, {pf(mQ(1), 2), pf(Q(1), 2, 1, -2)}); }),
         text("-m(q, q^4, q^2)")});
    add("B_2nd", "2nd", [] { return esum(0, 1, 0, {pf(mQ(1), 2), pf(Q(1), 2, 1, -1)}); },
        {built("sum q^(n^2+n) (-q^2;q^2)_n / (q;q^2)_{n+1}^2",
               [] { return esum(1, 1, 0, {pf(mQ(2), 2), pf(Q(1), 2, 1, -2)}); }),
         text("-q^-1*m(1, q^4, q^3)")});
    add("mu_2nd", "2nd", [] { return esum(1, 0, 0, {pf(Q(1), 2), pf(mQ(2), 2, 0, -2)}, -1); },
        {text("2*m(-q, q^4, -1) + 2*m(-q, q^4, q)"), text("4*m(-q, q^4, -1) - J[2,4]^4/Jm[1]^3")});

    // third order
    add("f_3rd", "3rd", [] { return esum(1, 0, 0, {pf(mQ(1), 1, 0, -2)}); },
        {text("2 - 2*g(-1; q)"), text("2*m(-q, q^3, q) + 2*m(-q, q^3, q^2)"),
         text("4*m(-q, q^3, q) + J[3,6]^2/Jm[1]")});
    add("phi_3rd", "3rd", [] { return esum(1, 0, 0, {pf(mQ(2), 2, 0, -1)}); },
        {text("(1 - i)*(1 + i*g(i; q))"), text("(1 + i)*m(i*q, q^3, -1) + (1 - i)*m(-i*q, q^3, -1)"),
         text("m(q^5, q^12, q^4) + m(q^5, q^12, q^8) + q^-1*m(q, q^12, q^4) + q^-1*m(q, q^12, q^8)"),
         text("2*m(q, -q^3, -1) + 2*q*Jm[12]^3/(Jm[4]*J[3,12])")});
    add("psi_3rd", "3rd", [] { return esum(1, 2, 1, {pf(Q(1), 2, 1, -1)}); },
        {text("q*g(q; q^4)"), text("-q^-1*m(q, q^12, q^2) - m(q^5, q^12, q^2)"),
         text("-m(q, -q^3, -q) + q*Jm[12]^3/(Jm[4]*J[3,12])")});
    add("chi_3rd", "3rd", [] { return esum(1, 0, 0, {pf(mQ(1), 1), pf(mQ(3), 3, 0, -1)}); },
        {text("(1 + omega)*(1 - omega*g(-omega; q))"), text("2*m(-q, q^3, q^2) - m(-q, q^3, q)"),
         text("m(-q, q^3, q) + J[3,6]^2/Jm[1]")});
    add("omega_3rd", "3rd", [] { return esum(2, 2, 0, {pf(Q(1), 2, 1, -2)}); },
        {text("g(q; q^2)"), text("-q^-1*m(q, q^6, q^2) - q^-1*m(q, q^6, q^4)"),
         text("-2*q^-1*m(q, q^6, q^2) + Jm[6]^3/(Jm[2]*J[3,6])")});
    add("nu_3rd", "3rd", [] { return esum(1, 1, 0, {pf(mQ(1), 2, 1, -1)}); },
        {text("g(i*q^(1/2); q)"), text("i*q^(-1/2)*(m(i*q^(1/2), q^3, -q) - m(-i*q^(1/2), q^3, -q^2))"),
         text("q^-1*m(q^2, q^12, -q^3) + q^-1*m(q^2, q^12, -q^9)"),
         text("2*q^-1*m(q^2, q^12, -q^3) + Jm[1]*J[3,12]/Jm[2]")});
    add("rho_3rd", "3rd", [] { return esum(2, 2, 0, {pf(Q(1), 2, 1), pf(Q(3), 6, 1, -1)}); },
        {text("g(omega*q; q^2)"),
         text("-omega*q^-1*m(q, q^6, omega*q^4) - omega^2*q^-1*m(q, q^6, omega^2*q^2)"),
         text("q^-1*m(q, q^6, -q)")});

    // fifth order
    add("f0_5th", "5th", [] { return esum(1, 0, 0, {pf(mQ(1), 1, 0, -1)}); },
        {text("J[5,10]*J[2,5]/Jm[1] - 2*q^2*g(q^2; q^10)"),
         text("m(q^14, q^30, q^14) + m(q^14, q^30, q^29) + q^-2*m(q^4, q^30, q^4) + q^-2*m(q^4, q^30, q^19)"),
         text("2*m(q^14, q^30, q^4) + 2*q^-2*m(q^4, q^30, q^4) + J[5,10]*J[2,5]/Jm[1]")});
    add("phi0_5th", "5th", [] { return esum(1, 0, 0, {pf(mQ(1), 2)}); },
        {text("q*g(-q; -q^5) + Jm[10]*j(-q^2; -q^5)/J[2,10]"),
         text("m(-q^7, -q^15, q^9) - q^-1*m(q^2, -q^15, q^9)")});
    add("psi0_5th", "5th", [] { return esum(R(1, 2), R(3, 2), 1, {pf(mQ(1), 1)}); },
        {text("q^2*g(q^2; q^10) + q*Jm[5]*J[1,10]/J[2,5]"),
         text("-m(q^14, q^30, q^3) - q^-2*m(q^4, q^30, q^3)")});
    add("F0_5th", "5th", [] { return esum(2, 0, 0, {pf(Q(1), 2, 0, -1)}); },
        {text("1 + q*g(q; q^5) - q*Jm[10]*JB[5,20]/J[4,10]"),
         text("-1/2*q^-1*m(q^2, q^15, q^2) - 1/2*q^-1*m(q^2, q^15, -q^2) + 1/2*m(q^8, q^15, q^8)"
              " + 1/2*m(q^8, q^15, -q^8)"),
         text("-q^-1*m(q^2, q^15, q) + m(q^8, q^15, q^4) - q*Jm[10]*JB[5,20]/J[4,10]")});
    // 1/(q^{n+1})_n = (q)_n / ((q;q^2)_n (q^2;q^2)_n)
    add("chi0_5th", "5th", [] { return esum(0, 1, 0, {pf(Q(1), 1), pf(Q(1), 2, 0, -1), pf(Q(2), 2, 0, -1)}); },
        {built("1 + sum q^(2n+1) / (q^(n+1))_(n+1)",
               [] { return one() + esum(0, 2, 1, {pf(Q(1), 1), pf(Q(1), 2, 1, -1), pf(Q(2), 2, 0, -1)}); }),
         text("2 + 3*q*g(q; q^5) - Jm[5]^2*J[2,5]/J[1,5]^2"),
         text("2 - 2*m(q^7, q^15, q^12) - m(q^7, q^15, q^9) - 2*q^-1*m(q^2, q^15, q^12) - q^-1*m(q^2, q^15, q^9)"),
         text("2 - 3*m(q^7, q^15, q^9) - 3*q^-1*m(q^2, q^15, q^4) + 2*Jm[5]^2*J[2,5]/J[1,5]^2")});
    add("f1_5th", "5th", [] { return esum(1, 1, 0, {pf(mQ(1), 1, 0, -1)}); },
        {text("J[5,10]*J[1,5]/Jm[1] - 2*q^3*g(q^4; q^10)"),
         text("q^-1*m(q^8, q^30, q^8) + q^-1*m(q^8, q^30, q^23) + q^-3*m(q^2, q^30, q^2)"
              " + q^-3*m(q^2, q^30, q^17)"),
         text("2*q^-1*m(q^8, q^30, q^8) + 2*q^-3*m(q^2, q^30, q^-8) + J[5,10]*J[1,5]/Jm[1]")});
    add("phi1_5th", "5th", [] { return esum(1, 2, 1, {pf(mQ(1), 2)}); },
        {text("q^2*g(q^2; -q^5) + q*Jm[10]*j(q; -q^5)/J[4,10]"),
         text("q^-1*m(-q, -q^15, q^-3) - m(q^4, -q^15, q^3)")});
    add("psi1_5th", "5th", [] { return esum(R(1, 2), R(1, 2), 0, {pf(mQ(1), 1)}); },
        {text("q^3*g(q^4; q^10) + Jm[5]*J[3,10]/J[1,5]"),
         text("-q^-1*m(q^8, q^30, q^-9) - q^-3*m(q^2, q^30, q^9)")});
    add("F1_5th", "5th", [] { return esum(2, 2, 0, {pf(Q(1), 2, 1, -1)}); },
        {text("q*g(q^2; q^5) + Jm[10]*JB[5,20]/J[2,10]"),
         text("-1/2*q^-2*m(q, q^15, q) - 1/2*q^-2*m(q, q^15, -q) - 1/2*q^-1*m(q^4, q^15, q^4)"
              " - 1/2*q^-1*m(q^4, q^15, -q^4)"),
         text("-q^-2*m(q, q^15, q^-4) - q^-1*m(q^4, q^15, q^4) + Jm[10]*JB[5,20]/J[2,10]")});
    // 1/(q^{n+1})_{n+1} = (q)_n / ((q;q^2)_{n+1} (q^2;q^2)_n)
    add("chi1_5th", "5th", [] { return esum(0, 1, 0, {pf(Q(1), 1), pf(Q(1), 2, 1, -1), pf(Q(2), 2, 0, -1)}); },
        {built("1 + sum q^(2n+1) (1+q^n) / (q^(n+1))_(n+1)",
               [] {
                   std::vector<Fac> f{pf(Q(1), 1), pf(Q(1), 2, 1, -1), pf(Q(2), 2, 0, -1)};
                   return one() + esum(0, 2, 1, f) + esum(0, 3, 1, f);
               }),
         text("3*q*g(q^2; q^5) + Jm[5]^2*J[1,5]/J[2,5]^2"),
         text("-2*q^-1*m(q^4, q^15, q^-6) - q^-1*m(q^4, q^15, q^3) - 2*q^-2*m(q, q^15, q^6) - q^-2*m(q, q^15, q^-3)"),
         text("-3*q^-1*m(q^4, q^15, q^3) - 3*q^-2*m(q, q^15, q^2) - 2*Jm[5]^2*J[1,5]/J[2,5]^2")});
    add("Phi_5th", "5th", [] { return esum(5, 0, 0, {pf(Q(1), 5, 1, -1), pf(Q(4), 5, 0, -1)}) - one(); },
        {text("q*g(q; q^5)"), text("-q^-1*m(q^2, q^15, q^2) - m(q^7, q^15, q^2)")});
    add("Psi_5th", "5th", [] { return esum(5, 0, 0, {pf(Q(2), 5, 1, -1), pf(Q(3), 5, 0, -1)}) - one(); },
        {text("q^2*g(q^2; q^5)"), text("-q^-1*m(q, q^15, q^-4) - m(q^4, q^15, q^4)")});

    // sixth order; (-q)_{2n} = (-q;q^2)_n (-q^2;q^2)_n
    add("phi_6th", "6th", [] { return esum(1, 0, 0, {pf(Q(1), 2), pf(mQ(1), 2, 0, -1), pf(mQ(2), 2, 0, -1)}, -1); },
        {text("2*m(q, q^3, -1)")});
    add("psi_6th", "6th", [] { return esum(1, 2, 1, {pf(Q(1), 2), pf(mQ(1), 2, 1, -1), pf(mQ(2), 2, 0, -1)}, -1); },
        {text("m(1, q^3, -q)")});
    add("rho_6th", "6th", [] { return esum(R(1, 2), R(1, 2), 0, {pf(mQ(1), 1), pf(Q(1), 2, 1, -1)}); },
        {text("-q^-1*m(1, q^6, q)")});
    add("sigma_6th", "6th", [] { return esum(R(1, 2), R(3, 2), 1, {pf(mQ(1), 1), pf(Q(1), 2, 1, -1)}); },
        {text("-m(q^2, q^6, q)")});
    add("lambda_6th", "6th", [] { return esum(0, 1, 0, {pf(Q(1), 2), pf(mQ(1), 1, 0, -1)}, -1); },
        {text("q^-1*m(1, q^6, -q^2) + q^-1*m(1, q^6, -q)"),
         text("2*q^-1*m(1, q^6, -q^2) + J[1,2]*JB[3,12]/JB[1,4]")});
    // closed form 1/2 + 1/2 sum (-1)^n q^(n+1) (1+q^n) (q;q^2)_n / (-q)_{n+1}
    add("mu_6th", "6th",
        [] {
            std::vector<Fac> f{pf(Q(1), 2), pf(mQ(1), 1, 1, -1)};
            return Lazy::constant(R(1, 2)) + esum(0, 1, 1, f, -1, R(1, 2)) + esum(0, 2, 1, f, -1, R(1, 2));
        },
        {text("m(q^2, q^6, -1) + m(q^2, q^6, -q^3)"), text("2*m(q^2, q^6, -1) - J[1,2]*JB[1,3]/(2*JB[1,4])")});
    add("gamma_6th", "6th", [] { return esum(1, 0, 0, {pf(Q(1), 1), pf(Q(3), 3, 0, -1)}); },
        {text("(1 - omega)*(1 + omega*g(omega; q))"), text("2*m(q, q^3, -1) + m(q, q^3, -q)"),
         text("3*m(q, q^3, -q) + J[1,2]^2/JB[1,3]")});
    // n -> n+1: q^(n+1) (-q;q^2)_{n+1} (-q^2;q^2)_n / (q;q^2)_{n+1}
    add("phibar_6th", "6th",
        [] { return esum(0, 1, 1, {pf(mQ(1), 2, 1), pf(mQ(2), 2), pf(Q(1), 2, 1, -1)}); },
        {text("-3/4*m(q, q^3, q) - 1/4*m(q, q^3, -q)"),
         text("-m(q, q^3, q) - q*JB[3,12]^3/(Jm[1]*JB[1,4])")});
    add("psibar_6th", "6th", [] { return esum(0, 1, 1, {pf(mQ(1), 2), pf(mQ(2), 2), pf(Q(1), 2, 1, -1)}); },
        {text("-3/4*m(1, q^3, q) + 1/4*m(1, q^3, -q)"),
         text("-1/2*m(1, q^3, q) + q*Jm[6]^3/(2*Jm[1]*Jm[2])")});

    // seventh order; (q^{n+1})_n and (q^{n+1})_{n+1} as above
    add("F0_7th", "7th", [] { return esum(1, 0, 0, {pf(Q(1), 1), pf(Q(1), 2, 0, -1), pf(Q(2), 2, 0, -1)}); },
        {text("2 + 2*q*g(q; q^7) - J[3,7]^2/Jm[1]"),
         text("m(q^10, q^21, q^9) + m(q^10, q^21, q^-9) - q^-1*m(q^4, q^21, q^9) - q^-1*m(q^4, q^21, q^-9)"),
         text("2*m(q^10, q^21, q^9) - 2*q^-1*m(q^4, q^21, q^-9) + J[3,7]^2/Jm[1]")});
    // n -> n+1: q^((n+1)^2) / (q^(n+1))_(n+1)
    add("F1_7th", "7th", [] { return esum(1, 2, 1, {pf(Q(1), 1), pf(Q(1), 2, 1, -1), pf(Q(2), 2, 0, -1)}); },
        {text("2*q^2*g(q^2; q^7) + q*J[1,7]^2/Jm[1]"),
         text("-m(q^8, q^21, q^3) - m(q^8, q^21, q^-3) - q^-2*m(q, q^21, q^3) - q^-2*m(q, q^21, q^-3)"),
         text("-2*m(q^8, q^21, q^3) - 2*q^-2*m(q, q^21, q^3) - q*J[1,7]^2/Jm[1]")});
    add("F2_7th", "7th", [] { return esum(1, 1, 0, {pf(Q(1), 1), pf(Q(1), 2, 1, -1), pf(Q(2), 2, 0, -1)}); },
        {text("2*q^2*g(q^3; q^7) + J[2,7]^2/Jm[1]"),
         text("-q^-1*m(q^5, q^21, q^6) - q^-1*m(q^5, q^21, q^-6) - q^-2*m(q^2, q^21, q^6) - q^-2*m(q^2, q^21, q^-6)"),
         text("-2*q^-1*m(q^5, q^21, q^6) - 2*q^-2*m(q^2, q^21, q^-6) + J[2,7]^2/Jm[1]")});

    // eighth order
    add("S0_8th", "8th", [] { return esum(1, 0, 0, {pf(mQ(1), 2), pf(mQ(2), 2, 0, -1)}); },
        {text("m(-q^3, q^8, -q^2) + m(-q^3, q^8, -q^6)"),
         text("2*m(-q^3, q^8, -1) + q*JB[1,8]*J[2,8]^2/J[3,8]^2")});
    add("S1_8th", "8th", [] { return esum(1, 2, 0, {pf(mQ(1), 2), pf(mQ(2), 2, 0, -1)}); },
        {text("-q^-1*m(-q, q^8, -q^2) - q^-1*m(-q, q^8, -q^6)"),
         text("-2*q^-1*m(-q, q^8, -1) + JB[3,8]*J[2,8]^2/(q*J[1,8]^2)")});
    add("T0_8th", "8th", [] { return esum(1, 3, 2, {pf(mQ(2), 2), pf(mQ(1), 2, 1, -1)}); },
        {text("-m(-q^3, q^8, q^2)")});
    add("T1_8th", "8th", [] { return esum(1, 1, 0, {pf(mQ(2), 2), pf(mQ(1), 2, 1, -1)}); },
        {text("q^-1*m(-q, q^8, q^6)")});
    add("U0_8th", "8th", [] { return esum(1, 0, 0, {pf(mQ(1), 2), pf(mQ(4), 4, 0, -1)}); },
        {text("2*m(-q, q^4, -1)")});
    add("U1_8th", "8th", [] { return esum(1, 2, 1, {pf(mQ(1), 2), pf(mQ(2), 4, 1, -1)}); },
        {text("-m(-q, q^4, -q^2)")});
    add("V0_8th", "8th", [] { return Lazy::constant(-1) + esum(1, 0, 0, {pf(mQ(1), 2), pf(Q(1), 2, 0, -1)}, 1, 2); },
        {// (q;q^2)_{2n+1} = (q;q^4)_{n+1} (q^3;q^4)_n
         built("-1 + 2 sum q^(2n^2) (-q^2;q^4)_n / (q;q^2)_(2n+1)",
               [] {
                   return Lazy::constant(-1) +
                          esum(2, 0, 0, {pf(mQ(2), 4), pf(Q(1), 4, 1, -1), pf(Q(3), 4, 0, -1)}, 1, 2);
               }),
         text("-q^-1*m(1, q^8, q) - q^-1*m(1, q^8, q^3)"), text("-2*q^-1*m(1, q^8, q) - JB[1,4]^2/J[2,8]")});
    add("V1_8th", "8th", [] { return esum(1, 2, 1, {pf(mQ(1), 2), pf(Q(1), 2, 1, -1)}); },
        {built("sum q^(2n^2+2n+1) (-q^4;q^4)_n / (q;q^2)_(2n+2)",
               [] { return esum(2, 2, 1, {pf(mQ(4), 4), pf(Q(1), 4, 1, -1), pf(Q(3), 4, 1, -1)}); }),
         built("sum q^(n+1) (-q)_(2n) / (-q^2;q^4)_(n+1)",
               [] { return esum(0, 1, 1, {pf(mQ(1), 2), pf(mQ(2), 2), pf(mQ(2), 4, 1, -1)}); }),
         text("-m(q^2, q^8, q)")});

    // tenth order
    add("phi_10th", "10th", [] { return esum(R(1, 2), R(1, 2), 0, {pf(Q(1), 2, 1, -1)}); },
        {text("2*q*h(q^2; q^5) + Jm[5]*Jm[10]*J[4,10]/(J[2,5]*J[2,10])"),
         text("-q^-1*m(q, q^10, q) - q^-1*m(q, q^10, q^2)"),
         text("-2*q^-1*m(q, q^10, q^2) + Jm[5]*Jm[10]*J[4,10]/(J[2,5]*J[2,10])")});
    add("psi_10th", "10th", [] { return esum(R(1, 2), R(3, 2), 1, {pf(Q(1), 2, 1, -1)}); },
        {text("2*q*h(q; q^5) - q*Jm[5]*Jm[10]*J[2,10]/(J[1,5]*J[4,10])"),
         text("-m(q^3, q^10, q) - m(q^3, q^10, q^3)"),
         text("-2*m(q^3, q^10, q) - q*Jm[5]*Jm[10]*J[2,10]/(J[1,5]*J[4,10])")});
    add("X_10th", "10th", [] { return esum(1, 0, 0, {pf(mQ(1), 2, 0, -1), pf(mQ(2), 2, 0, -1)}, -1); },
        {text("2*q*k(q; q^5) - Jm[5]*Jm[10]*J[2,5]/(J[2,10]*J[1,5])"), text("m(-q^2, q^5, q) + m(-q^2, q^5, q^4)"),
         text("2*m(-q^2, q^5, q^4) - J[3,10]*J[5,10]/J[1,5]")});
    add("chi_10th", "10th", [] { return esum(1, 2, 1, {pf(mQ(1), 2, 1, -1), pf(mQ(2), 2, 0, -1)}, -1); },
        {text("2 - 2*q^2*k(q^2; q^5) + q*Jm[5]*Jm[10]*J[1,5]/(J[4,10]*J[2,5])"),
         text("m(-q, q^5, q^2) + m(-q, q^5, q^3)"), text("2*m(-q, q^5, q^2) + q*J[1,10]*J[5,10]/J[2,5]")});

    for (auto& e : c)
        for (auto& r : e.reprs)
            if (!r.build) r.expr = parse_expr(r.text);
    return c;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries()
{
    static const std::vector<CatalogEntry> c = make_catalog();
    return c;
}

const CatalogEntry& catalog_lookup(const std::string& name)
{
    static const std::map<std::string, size_t> index = [] {
        std::map<std::string, size_t> m;
        for (size_t i = 0; i < catalog_entries().size(); ++i) m[catalog_entries()[i].name] = i;
        return m;
    }();
    auto it = index.find(name);
    if (it == index.end()) throw UnknownCatalogName("unknown catalog name '" + name + "'");
    return catalog_entries()[it->second];
}

Lazy catalog_lazy(const std::string& name, std::optional<long> repr)
{
    const CatalogEntry& e = catalog_lookup(name);
    if (!repr) return e.eulerian();
    if (*repr < 0 || *repr >= static_cast<long>(e.reprs.size()))
        throw UnsupportedArgument(name + " has no representation " + std::to_string(*repr));
    const CatalogRepr& r = e.reprs[*repr];
    return r.build ? r.build() : eval_lazy(r.expr);
}

std::vector<IdentityRecord> catalog_identities()
{
    std::vector<IdentityRecord> out;
    for (const auto& e : catalog_entries())
        for (size_t i = 0; i < e.reprs.size(); ++i)
            out.push_back({e.name + ".r" + std::to_string(i), std::nullopt, mk_catalog(e.name, std::nullopt, std::nullopt),
                           mk_catalog(e.name, std::nullopt, static_cast<long>(i)), {"catalog", "mock_" + e.order}});
    return out;
}

std::vector<IdentityRecord> paper_identities() { return parse_identities(paper_identity_text()); }

std::vector<IdentityRecord> builtin_suite()
{
    auto out = catalog_identities();
    auto more = paper_identities();
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

} // namespace qseries
