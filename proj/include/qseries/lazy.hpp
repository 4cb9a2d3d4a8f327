#pragma once

#include "qseries/qseries.hpp"

#include <functional>
#include <memory>
#include <string>

namespace qseries {

// A series-valued expression that can be evaluated to any requested order.
// Composite nodes work out how far each child must be expanded from the
// valuations they observe, so eval(N) always returns a series known at least
// to q^N (or an exact one).
class Lazy {
public:
    struct Node;
    using Fn = std::function<QSeries(const BigRat&)>;

    Lazy();
    explicit Lazy(std::shared_ptr<Node> n) : node_(std::move(n)) {}

    static Lazy constant(const CycRat& c);
    static Lazy monomial(const QMonomial& m);
    static Lazy exact(const QSeries& s); // s must be exact
    // fn(N) must return a series whose order is at least N
    static Lazy leaf(Fn fn, std::string label);

    QSeries eval(const BigRat& order) const;

    friend Lazy operator+(const Lazy& a, const Lazy& b);
    friend Lazy operator-(const Lazy& a, const Lazy& b);
    friend Lazy operator*(const Lazy& a, const Lazy& b);
    friend Lazy operator/(const Lazy& a, const Lazy& b);
    Lazy operator-() const;
    Lazy pow(long k) const;
    Lazy compose(const QMonomial& base) const;

private:
    std::shared_ptr<Node> node_;
};

Lazy operator*(const QMonomial& m, const Lazy& a);
Lazy operator*(const CycRat& c, const Lazy& a);

} // namespace qseries
