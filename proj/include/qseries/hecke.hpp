#pragma once

#include "qseries/lazy.hpp"
#include "qseries/qseries.hpp"

namespace qseries {

// f_{a,b,c}(x,y,q) with q = base
struct HeckeParams {
    long a = 1, b = 1, c = 1;
    QMonomial x, y, base = QMonomial::q();
};

QSeries f_eval(const HeckeParams& p, const BigRat& order);
Lazy f_lazy(const HeckeParams& p);

// g_{a,b,c}(x,y,q,z1,z0)
Lazy g_abc(const HeckeParams& p, const QMonomial& z1, const QMonomial& z0);
// h_{a,b,c}(x,y,q,z1,z0); needs a | b and c | b
Lazy h_abc(const HeckeParams& p, const QMonomial& z1, const QMonomial& z0);

// correction sums
Lazy theta_np(long n, long p, const QMonomial& x, const QMonomial& y, const QMonomial& base);
Lazy theta_abc(const HeckeParams& p);
// Theta_{n,p} for p in 1..4 (Theta_{n,1} = 0)
Lazy big_theta(long n, long p, const QMonomial& x, const QMonomial& y, const QMonomial& base);

// right-hand sides of the three expansions of f
// f_{n,n+p,n} = g(x,y,q,-1,-1) + theta_{n,p} / Jbar_{0,np(2n+p)}
Lazy master_rhs(long n, long p, const QMonomial& x, const QMonomial& y, const QMonomial& base);
// f_{a,b,c} = h(x,y,q,-1,-1) - theta_{a,b,c} / (Jbar_{0,b^2/a-c} Jbar_{0,b^2/c-a})
Lazy divisible_rhs(const HeckeParams& p);
// f_{n,n+p,n} = g(x,y,q,y^n/x^n,x^n/y^n) - Theta_{n,p}
Lazy subtheorem_rhs(long n, long p, const QMonomial& x, const QMonomial& y, const QMonomial& base);

// C^N_{m,l} = f_{1,1+N,1}(q^{1+(m+l)/2}, q^{1-(m-l)/2}, q) / J_1^3
QSeries string_function(long N, long m, long l, const BigRat& order);
Lazy string_function_lazy(long N, long m, long l);

} // namespace qseries
