#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "glqv/common.hpp"
#include "glqv/report.hpp"

namespace glqv {

inline constexpr std::uint32_t kMaxCycloOrder = 100000;

// Per-order data shared by all elements of Z[zeta_M]: Phi_M, traces of root
// powers and (for moderate M) the reduced powers x^k mod Phi_M.
struct CycloData {
    std::uint32_t M = 1;
    std::uint32_t phi = 1;
    std::vector<std::int64_t> cyclotomic;    // Phi_M, ascending, length phi+1
    std::vector<std::int64_t> root_trace;    // Tr(zeta^k), k < M
    std::vector<std::int64_t> reduced_powers; // row k: x^k mod Phi_M (M rows of phi), may be empty
    std::vector<std::uint32_t> prime_divisors;
};

// Thread-safe cached lookup. Throws DomainError for M = 0 or M > 10^5.
const CycloData& cyclo_data(std::uint32_t M);

// Element of Z[zeta_M] in the power basis 1, zeta, ..., zeta^(phi(M)-1).
// Coordinates are checked 64-bit integers; overflow raises ResourceError.
class CycloElem {
public:
    CycloElem() : CycloElem(1) {}
    explicit CycloElem(std::uint32_t M);
    // Coordinates of length phi(M); throws DomainError otherwise.
    CycloElem(std::uint32_t M, std::vector<std::int64_t> coeffs);

    static CycloElem from_integer(std::uint32_t M, std::int64_t v);
    static CycloElem from_root_power(std::uint32_t M, std::int64_t k);
    // Image of sum_k terms[k] x^k (k < M) under x -> zeta_M.
    static CycloElem from_group_ring(std::uint32_t M, const std::vector<std::int64_t>& terms);

    std::uint32_t M() const { return M_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    CycloElem operator-() const;
    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(std::int64_t c, const CycloElem& a);
    friend bool operator==(const CycloElem& a, const CycloElem& b) { return a.M_ == b.M_ && a.coeffs_ == b.coeffs_; }

    // sigma_j : zeta -> zeta^j. Throws DomainError unless gcd(j, M) = 1.
    CycloElem galois_apply(std::int64_t j) const;
    CycloElem conj() const { return galois_apply(-1); }
    // Tr_{Q(zeta_M)/Q}, exact.
    BigInt trace() const;
    // Image in Z[zeta_M'] for a multiple M' of M.
    CycloElem embed(std::uint32_t M_big) const;

    nlohmann::json to_json() const;

private:
    std::uint32_t M_;
    std::vector<std::int64_t> coeffs_;
};

// (1/phi(M)) sum over the Galois group of |sigma(alpha)|^2 = Tr(alpha conj(alpha)) / phi(M).
BigRat average_galois_norm(const CycloElem& alpha);

// alpha / d when every coordinate is divisible by d; nullopt certifies that
// alpha / d is not an algebraic integer (the power basis is an integral basis).
std::optional<CycloElem> divide_by_integer(const CycloElem& alpha, std::int64_t d);

// Integer combination of M-th roots of unity kept in Z[C_M], with an exact
// O(M * omega(M)) test for vanishing at zeta_M: multiplying by
// prod_{p | M} (1 - x^(M/p)) kills every other cyclotomic component.
class GroupRingAccumulator {
public:
    explicit GroupRingAccumulator(std::uint32_t M);

    std::uint32_t M() const { return M_; }
    void add(std::int64_t exponent, std::int64_t coeff);
    void clear();
    const std::vector<std::int64_t>& terms() const { return terms_; }

    bool vanishes() const;
    CycloElem reduce() const { return CycloElem::from_group_ring(M_, terms_); }

private:
    std::uint32_t M_;
    std::vector<std::int64_t> terms_;
    mutable std::vector<std::int64_t> scratch_;
};

// Ring axioms, Galois composition, self-conjugacy of alpha conj(alpha) and the
// bound average_galois_norm >= 1 on seeded random elements of each Z[zeta_M].
Report verify_cycloring(const std::vector<std::uint32_t>& orders, int samples, std::uint64_t seed);

} // namespace glqv
