#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "glqv/common.hpp"

namespace glqv {

// Field elements are integers in [0, q): the base-p digits of an element are
// its coordinates in the polynomial basis 1, t, ..., t^(k-1) of F_p[t]/(modulus).
using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

// F_q for q = p^k <= 2^20. Immutable once built; share through make().
class FqCtx {
public:
    // Throws DomainError unless q is a prime power <= 2^20.
    static std::shared_ptr<const FqCtx> make(std::uint64_t q);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }

    // Monic modulus over F_p (ascending coefficients, length k+1). For k = 1 it is x.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        std::uint32_t s = log_[a] + log_[b];
        return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    // Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const;

    // Smallest encoded generator of the multiplicative group.
    Elem primitive_element() const { return exp_.size() > 1 ? exp_[1] : 1; }
    std::uint32_t log(Elem a) const;
    Elem exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

    // a^(q/p): the inverse of the Frobenius a -> a^p.
    Elem pth_root(Elem a) const;

private:
    FqCtx(std::uint32_t p, std::uint32_t k);
    Elem mul_slow(Elem a, Elem b) const;

    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t q_ = 0;
    std::vector<Elem> modulus_;
    std::vector<Elem> exp_; // exp_[i] = g^i, i < q-1
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> digit_weight_; // p^i
};

} // namespace glqv
