#pragma once

#include <compare>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "glqv/common.hpp"
#include "glqv/fq.hpp"
#include "glqv/report.hpp"

namespace glqv {

// Dense polynomial over F_q, ascending coefficients. The zero polynomial is the
// empty vector; every other value has a nonzero last entry after trim().
using Coeffs = std::vector<Elem>;

namespace poly {

void trim(Coeffs& a);
int degree(const Coeffs& a); // -1 for zero
bool is_one(const Coeffs& a);

Coeffs add(const FqCtx& F, const Coeffs& a, const Coeffs& b);
Coeffs sub(const FqCtx& F, const Coeffs& a, const Coeffs& b);
Coeffs mul(const FqCtx& F, const Coeffs& a, const Coeffs& b);
Coeffs scale(const FqCtx& F, const Coeffs& a, Elem c);
// a = quot * b + rem with deg rem < deg b. Throws DomainError for b = 0.
void divmod(const FqCtx& F, const Coeffs& a, const Coeffs& b, Coeffs& quot, Coeffs& rem);
Coeffs mod(const FqCtx& F, const Coeffs& a, const Coeffs& b);
// Exact quotient; throws ConsistencyError if b does not divide a.
Coeffs divexact(const FqCtx& F, const Coeffs& a, const Coeffs& b);
Coeffs monic(const FqCtx& F, const Coeffs& a);
// Monic gcd (zero only when both inputs are zero).
Coeffs gcd(const FqCtx& F, Coeffs a, Coeffs b);
Coeffs derivative(const FqCtx& F, const Coeffs& a);
Coeffs mulmod(const FqCtx& F, const Coeffs& a, const Coeffs& b, const Coeffs& m);
Coeffs powmod(const FqCtx& F, Coeffs base, const BigInt& e, const Coeffs& m);
Coeffs pow(const FqCtx& F, const Coeffs& a, unsigned e);

// Rabin's test: x^(q^d) = x mod f and gcd(x^(q^(d/r)) - x, f) = 1 for each
// prime r | d. Accepts any nonzero f (made monic first); constants are not
// irreducible.
bool is_irreducible(const FqCtx& F, const Coeffs& f);

} // namespace poly

// Monic polynomial of degree >= 1 over a shared field context.
class MonicPoly {
public:
    // Throws DomainError unless coeffs is monic of degree >= 1 with entries < q.
    MonicPoly(std::shared_ptr<const FqCtx> ctx, Coeffs coeffs);

    const FqCtx& ctx() const { return *ctx_; }
    const std::shared_ptr<const FqCtx>& ctx_ptr() const { return ctx_; }
    const Coeffs& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Membership in the index set requires a nonzero constant term.
    bool nonzero_constant() const { return coeffs_[0] != 0; }

    // sum c_i q^i.
    BigInt encoding() const;
    std::string to_string() const;
    nlohmann::json to_json() const;

    friend bool operator==(const MonicPoly& a, const MonicPoly& b)
    {
        return a.ctx_->q() == b.ctx_->q() && a.coeffs_ == b.coeffs_;
    }
    // Field order, then degree, then encoding.
    friend std::strong_ordering operator<=>(const MonicPoly& a, const MonicPoly& b);

private:
    std::shared_ptr<const FqCtx> ctx_;
    Coeffs coeffs_;
};

MonicPoly operator*(const MonicPoly& a, const MonicPoly& b);
MonicPoly pow(const MonicPoly& a, unsigned e);

// Degree-d members of the index set: (1/d) sum_{e|d} mu(d/e) q^e, less one for d = 1.
BigInt count_irreducibles(std::uint64_t q, int d);
inline BigInt count_irreducibles(const FqCtx& F, int d) { return count_irreducibles(F.q(), d); }

// Degree-d monic irreducibles with nonzero constant term, ascending encoding.
// Throws ResourceError when q^d exceeds `scan_cap` (0 means the default 2^24,
// GLQV_CAP overrides).
std::vector<MonicPoly> enumerate_irreducibles(const std::shared_ptr<const FqCtx>& ctx, int d,
                                              std::uint64_t scan_cap = 0);

struct PolyFactor {
    MonicPoly factor;
    int multiplicity;
};

// Squarefree split, distinct-degree split, then Cantor-Zassenhaus with a seed
// hashed from (q, f). Factors are sorted ascending.
std::vector<PolyFactor> factor_poly(const MonicPoly& f);
int factor_count(const MonicPoly& f);

// Monic degree-n polynomials with nonzero constant term that are divisible by
// f^2 for some irreducible f with deg f >= m. Counted exactly by a generating
// function over the irreducible counts.
BigInt count_repeated_factor_polys(std::uint64_t q, int n, int m);

// count_repeated_factor_polys < 2 q^(n-m) for 1 <= m <= n <= n_max.
Report verify_repeated_factor_bound(std::uint64_t q, int n_max);
// sum_{d|D} d * (degree-d irreducibles including x) = q^D, and N_m < q^m / m.
Report verify_irreducible_counts(std::uint64_t q, int d_max);
// Field axioms: full tables for q <= 16, sampled triples otherwise.
Report verify_field(const FqCtx& F, std::uint64_t seed = 1);
// factor_poly reproduces its input on random polynomials and agrees with
// Rabin's test on the factors.
Report verify_factorization(const std::shared_ptr<const FqCtx>& ctx, int max_degree, int samples,
                            std::uint64_t seed = 1);

} // namespace glqv
