#pragma once

#include "glqv/common.hpp"

namespace glqv {

// Exact element a + b*sqrt(5) of Q(sqrt 5). Carries the golden-ratio bounds
// (phi = (1+sqrt5)/2, gamma = phi/2) without any floating point.
class QuadSqrt5 {
public:
    QuadSqrt5() = default;
    QuadSqrt5(BigRat rational, BigRat sqrt5_coeff) : a_(std::move(rational)), b_(std::move(sqrt5_coeff)) {}
    explicit QuadSqrt5(const BigInt& n) : a_(n), b_(0) {}

    static QuadSqrt5 phi() { return {BigRat(1, 2), BigRat(1, 2)}; }

    const BigRat& rational_part() const { return a_; }
    const BigRat& sqrt5_part() const { return b_; }

    friend QuadSqrt5 operator+(const QuadSqrt5& x, const QuadSqrt5& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend QuadSqrt5 operator-(const QuadSqrt5& x, const QuadSqrt5& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend QuadSqrt5 operator*(const QuadSqrt5& x, const QuadSqrt5& y)
    {
        return {x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    friend QuadSqrt5 operator*(const QuadSqrt5& x, const BigRat& r) { return {x.a_ * r, x.b_ * r}; }

    QuadSqrt5 conjugate() const { return {a_, -b_}; }
    BigRat norm() const { return a_ * a_ - 5 * b_ * b_; }

    // Division through the conjugate; the divisor must be nonzero.
    friend QuadSqrt5 operator/(const QuadSqrt5& x, const QuadSqrt5& y)
    {
        BigRat n = y.norm();
        if (n == 0)
            throw DomainError("division by zero in Q(sqrt5)");
        QuadSqrt5 t = x * y.conjugate();
        return {t.a_ / n, t.b_ / n};
    }

    QuadSqrt5 pow(unsigned long e) const
    {
        QuadSqrt5 result(BigRat(1), BigRat(0));
        QuadSqrt5 base = *this;
        while (e > 0) {
            if (e & 1)
                result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    // Sign of a + b*sqrt5: -1, 0 or 1.
    int sign() const
    {
        int sa = sgn(a_);
        int sb = sgn(b_);
        if (sb == 0)
            return sa;
        if (sa == 0 || sa == sb)
            return sb;
        // Opposite signs: compare a^2 against 5 b^2.
        int c = cmp(a_ * a_, 5 * b_ * b_);
        return c > 0 ? sa : (c < 0 ? sb : 0);
    }

    friend bool operator<(const QuadSqrt5& x, const QuadSqrt5& y) { return (y - x).sign() > 0; }
    friend bool operator<=(const QuadSqrt5& x, const QuadSqrt5& y) { return (y - x).sign() >= 0; }
    friend bool operator==(const QuadSqrt5& x, const QuadSqrt5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    double approx() const { return a_.get_d() + b_.get_d() * 2.2360679774997896964; }

private:
    BigRat a_{0};
    BigRat b_{0};
};

} // namespace glqv
