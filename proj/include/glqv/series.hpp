#pragma once

#include <functional>
#include <vector>

#include "glqv/common.hpp"

// Truncated power series over BigInt or BigRat, used by every generating-function
// count in the library (nu-map counts, weighted class sums, polynomial counts).
namespace glqv::series {

template <class T>
using Series = std::vector<T>;

template <class T>
Series<T> mul(const Series<T>& a, const Series<T>& b, std::size_t max_degree)
{
    Series<T> c(max_degree + 1, T(0));
    for (std::size_t i = 0; i < a.size() && i <= max_degree; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size() && i + j <= max_degree; ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

// a(x)^N mod x^(max_degree+1) for a[0] == 1, by the J.C.P. Miller recurrence
//   k b_k = sum_{i=1..k} ((N+1) i - k) a_i b_{k-i}.
// N may be astronomically large; the cost is O(max_degree^2).
template <class T>
Series<T> pow(const Series<T>& a, const BigInt& exponent, std::size_t max_degree)
{
    if (a.empty() || a[0] != 1)
        throw DomainError("series::pow requires constant term 1");
    Series<T> b(max_degree + 1, T(0));
    b[0] = 1;
    for (std::size_t k = 1; k <= max_degree; ++k) {
        T acc(0);
        for (std::size_t i = 1; i <= k && i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            BigInt w = (exponent + 1) * BigInt(static_cast<unsigned long>(i)) - BigInt(static_cast<unsigned long>(k));
            acc += T(w) * a[i] * b[k - i];
        }
        if constexpr (std::is_same_v<T, BigInt>) {
            if (!mpz_divisible_ui_p(acc.get_mpz_t(), k))
                throw ConsistencyError("series::pow: non-exact division");
            mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), k);
            b[k] = acc;
        } else {
            b[k] = acc / T(static_cast<unsigned long>(k));
        }
    }
    return b;
}

// s(x) -> s(x^d), truncated.
template <class T>
Series<T> stretch(const Series<T>& s, std::size_t d, std::size_t max_degree)
{
    Series<T> r(max_degree + 1, T(0));
    for (std::size_t i = 0; i < s.size() && i * d <= max_degree; ++i)
        r[i * d] = s[i];
    return r;
}

// prod_{d=1..n} slot_d(x^d)^{count(d)} mod x^(n+1): the generating function of
// maps from a graded set (count(d) objects of degree d) to weighted "slots",
// where slot_d(s) weights an object of degree d carrying size s (slot_d(0) = 1).
template <class T>
Series<T> graded_product(int n, const std::function<BigInt(int)>& count,
                         const std::function<Series<T>(int d, int max_size)>& slot)
{
    Series<T> acc(static_cast<std::size_t>(n) + 1, T(0));
    acc[0] = 1;
    for (int d = 1; d <= n; ++d) {
        BigInt N = count(d);
        if (N == 0)
            continue;
        std::size_t max_size = static_cast<std::size_t>(n / d);
        Series<T> layer = pow(slot(d, static_cast<int>(max_size)), N, max_size);
        acc = mul(acc, stretch(layer, static_cast<std::size_t>(d), static_cast<std::size_t>(n)),
                  static_cast<std::size_t>(n));
    }
    return acc;
}

} // namespace glqv::series
