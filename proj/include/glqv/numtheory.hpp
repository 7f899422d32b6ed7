#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "glqv/common.hpp"
#include "glqv/report.hpp"

namespace glqv::nt {

// --- machine-word arithmetic -------------------------------------------------

bool is_prime_u64(std::uint64_t n);
// Prime factorization of n >= 1, ascending primes (trial division + Pollard rho).
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);
int moebius(std::uint64_t d);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
// (p, k) with q = p^k, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

// --- big integers ------------------------------------------------------------

enum class Primality { composite, prime, probable_prime };

// Deterministic Miller-Rabin below 2^64; Baillie-PSW above, reported as
// probable_prime.
Primality primality(const BigInt& n);
bool bpsw_probable_prime(const BigInt& n);

// Largest e with ell^e | x. Throws DomainError for x == 0 or ell < 2.
unsigned ord_prime(const BigInt& ell, const BigInt& x);

// Phi_n(a) as the exact quotient prod_{mu(d)=1}(a^{n/d}-1) / prod_{mu(d)=-1}(a^{n/d}-1).
BigInt cyclotomic_value(std::uint64_t n, std::uint64_t a);

// Phi_n(a) = P_n(a) R_n(a): R_n(a) collects the primes dividing n.
struct CycloFactorization {
    std::uint64_t n = 0;
    std::uint64_t a = 0;
    BigInt phi_value;
    BigInt p_part;
    BigInt r_part;
};

CycloFactorization split_primitive_part(std::uint64_t n, std::uint64_t a);

struct FactorBudget {
    std::uint64_t trial_bound = 1u << 20;
    std::uint64_t rho_iterations = 1u << 22;
};

struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> factors; // ascending primes
    std::vector<BigInt> unfactored;                   // composites left when the budget ran out
    bool has_probable_primes = false;                 // some factor >= 2^64 certified only by BPSW

    bool complete() const { return unfactored.empty(); }
    BigInt product() const;
    std::string to_string() const;
};

// Factors x >= 1. Trial division walks the progression 1 (mod `progression`)
// first; Pollard-Brent rho (deterministic seeds) handles the rest.
Factorization factorize(const BigInt& x, const FactorBudget& budget = {}, std::uint64_t progression = 1);

class NoPrimitivePrime : public DomainError {
public:
    using DomainError::DomainError;
};

// Smallest prime divisor of P_m(q). Throws NoPrimitivePrime when P_m(q) = 1 and
// ResourceError (message carries the partial factorization) on budget overrun.
BigInt smallest_prime_factor_primitive(std::uint64_t m, std::uint64_t q, const FactorBudget& budget = {});

// Sign of L - 2^sqrt(r) for L > 0, r >= 0, decided with integer arithmetic only.
// nullopt when `max_rounds` refinements did not separate the two.
std::optional<int> compare_pow2_sqrt(const BigInt& L, const BigRat& r, int max_rounds = 16);

// --- verifiers ---------------------------------------------------------------

// ord_l(n-1) = e >= 1 implies (i) ord_l(n^k-1) = e for l not dividing k, and
// (ii) ord_l(n^k-1) = e+1 for odd l with ord_l(k) = 1.
Report verify_cong(const BigInt& ell, const BigInt& n, std::uint64_t k);
Report verify_cong_sweep(std::size_t count, std::uint64_t seed);

// Parts (i)-(iii) of the primitive-part lemma for n in [n_lo, n_hi].
Report verify_big_factor(std::uint64_t n_lo, std::uint64_t n_hi, const std::vector<std::uint64_t>& a_set,
                         const FactorBudget& budget = {});
// Part (iv): for each prime l | P_m(a) and every n <= n_max with m l > n,
// ord_l(a^n - 1) = ord_l P_m(a) if m | n, else 0.
Report verify_big_factor_ord(std::uint64_t m_max, std::uint64_t n_max, const std::vector<std::uint64_t>& a_set,
                             const FactorBudget& budget = {});
// prod_{d | n} Phi_d(a) = a^n - 1.
Report verify_product_identity(std::uint64_t n_max, const std::vector<std::uint64_t>& a_set);
// 4 Phi_n(a) >= 2^phi(n) for n >= 3.
Report verify_quarter_bound(std::uint64_t n_max, const std::vector<std::uint64_t>& a_set);

} // namespace glqv::nt
