#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "glqv/common.hpp"
#include "glqv/fqpoly.hpp"
#include "glqv/partitions.hpp"
#include "glqv/report.hpp"

namespace glqv {

struct NuEntry {
    MonicPoly poly;
    Partition lambda;

    friend bool operator==(const NuEntry&, const NuEntry&) = default;
};

// Finitely supported map from the index set (monic irreducibles with nonzero
// constant term) to partitions. Entries are kept sorted by (degree, encoding).
class NuMap {
public:
    // Validates distinctness, irreducibility, nonzero constant terms and
    // nonempty partitions unless `trusted` is set.
    NuMap(std::shared_ptr<const FqCtx> ctx, std::vector<NuEntry> entries, bool trusted = false);

    const FqCtx& ctx() const { return *ctx_; }
    const std::shared_ptr<const FqCtx>& ctx_ptr() const { return ctx_; }
    const std::vector<NuEntry>& entries() const { return entries_; }
    int degree() const { return degree_; }

    // [{"poly": [...], "partition": [...]}, ...]
    nlohmann::json to_json() const;
    std::string to_string() const;

    friend bool operator==(const NuMap& a, const NuMap& b) { return a.entries_ == b.entries_; }

private:
    std::shared_ptr<const FqCtx> ctx_;
    std::vector<NuEntry> entries_;
    int degree_ = 0;
};

// Cached degree-d members of the index set for a field.
const std::vector<MonicPoly>& irreducible_catalog(const std::shared_ptr<const FqCtx>& ctx, int d);

// prod_{i<n} (q^n - q^i), checked against q^(n(n-1)/2) prod_{i<=n} (q^i - 1).
BigInt group_order(int n, std::uint64_t q);

// Number of degree-n maps (= classes = irreducible characters), by DP.
BigInt count_numaps(int n, std::uint64_t q);

// Calls `visit` on every degree-n map in lexicographic order of the sorted
// support. Throws ResourceError when q^n exceeds the cap (default 2^20).
void for_each_numap(int n, const std::shared_ptr<const FqCtx>& ctx, const std::function<void(const NuMap&)>& visit,
                    std::uint64_t cap = 0);
std::vector<NuMap> enumerate_numaps(int n, const std::shared_ptr<const FqCtx>& ctx, std::uint64_t cap = 0);

// c_lambda(Q) = Q^(|lambda| + 2 n(lambda)) prod_i prod_{k <= m_i} (1 - Q^-k), as an integer.
BigInt centralizer_factor(const Partition& lambda, const BigInt& Q);

struct ClassData {
    NuMap nu;
    BigInt centralizer_order;
    BigInt class_size;
    MonicPoly char_poly;
    int fact = 0; // sum of |lambda(f)|
};

ClassData class_data(const NuMap& nu);

struct CharData {
    NuMap nu;
    BigInt degree;
    long q_exponent = 0; // N_nu = sum deg(f) n(lambda(f))
    int deficiency = 0;
};

CharData char_degree(const NuMap& nu);

int deficiency(const NuMap& nu);

BigInt sum_degree_squares(int n, std::uint64_t q);
// Integrality and divisibility of every degree and sum d^2 = |G|.
Report verify_degree_formula(int n, std::uint64_t q);
// Sum of class sizes = |G|, centralizer divides |G|, characteristic polynomial
// shape, enumeration count = DP count.
Report verify_class_equation(int n, std::uint64_t q);
// q^n / 2 <= count_numaps(n, q) <= q^n.
Report verify_class_count_bounds(int n_max, const std::vector<std::uint64_t>& qs);

// Maps with deficiency >= N, counted by DP.
BigInt count_high_deficiency(int n, std::uint64_t q, int N);
// count < 2 N gamma^N q^n / (1 - gamma)^2 with gamma = phi / 2, exact in Q(sqrt 5).
bool high_deficiency_bound_holds(const BigInt& count, int n, std::uint64_t q, int N);
// Maps with some degree-m f carrying the one-box partition, counted by DP.
BigInt count_degree_m_single_box(int n, std::uint64_t q, int m);
Report verify_counting_bounds(int n_max, const std::vector<std::uint64_t>& qs, int N_lo, int N_hi);

struct OrdEll {
    long formula = 0; // e floor(n/m) - e #{f : m | deg f}
    long direct = 0;  // ord_l(d_chi)
    long via_group = 0; // ord_l |G| - e #{f : m | deg f}
};

// nullopt when the lemma's preconditions fail (l m <= n, l does not divide
// P_m(q), or deficiency >= m/2).
std::optional<OrdEll> ord_ell_degree(const NuMap& nu, int m, const BigInt& ell);
Report verify_ord_ell(int n, std::uint64_t q);

// Exact proportion of characters with ord_l(d_chi) = ord_l |G|. DomainError
// unless l | P_m(q).
BigRat prob_order_equality(int n, std::uint64_t q, int m, const BigInt& ell);

// Fact(p_g) -> sum of class sizes.
std::map<int, BigInt> fact_distribution(int n, std::uint64_t q);

// Probability over G that some f of degree >= m has |lambda(f)| >= 2: DP over
// exact weights 1/c_lambda(q^d).
BigRat repeated_factor_probability(int n, std::uint64_t q, int m);
// The same by enumerating classes (oracle; small cases only).
BigRat repeated_factor_probability_enumerated(int n, std::uint64_t q, int m);

struct RClass {
    NuMap nu;
    BigInt class_size;
    int fact = 0;
    bool in_X = false;
    std::string exclusion; // why the class is outside X
    int m_g = 0;
    BigInt ell_g;
    bool m_exceeds_inv_eps = false;
};

struct RReport {
    int n = 0;
    std::uint64_t q = 0;
    BigRat k_factor;
    BigRat eps;
    std::vector<RClass> classes;
    BigRat r_measure; // |R| / (k(G) |G|), pairs weighted by class size
    std::uint64_t off_r_pairs = 0;
    bool empty_X = false;
    Report checks{"R-set"};

    nlohmann::json to_json() const;
};

// The R-set construction. Classes whose characteristic polynomial has no
// simple factor of degree >= sqrt n, or whose chosen degree m_g has
// P_m(q) = 1, are left out of X (all their pairs lie in R).
RReport build_R_set(int n, std::uint64_t q, const BigRat& k_factor, const BigRat& eps);

// ln n rounded up to a rational with 1e-9 slack.
BigRat log_upper_bound(int n);

struct PairStats {
    int n = 0;
    std::uint64_t q = 0;
    BigRat eps;
    BigRat Q;           // exact value or sample estimate
    bool exact = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;

    nlohmann::json to_json() const;
};

// Q(eps): measure of pairs (chi, g) with gcd(d_chi, s_g) / d_chi >= eps, chi
// uniform over Irr(G) and g uniform over G.
PairStats ratio_statistic_exact(int n, std::uint64_t q, const BigRat& eps);
PairStats ratio_statistic_sampled(int n, std::uint64_t q, const BigRat& eps, std::uint64_t samples,
                                  std::uint64_t seed);

// gcd(d, s) / d >= eps, by cross-multiplication.
bool ratio_at_least(const BigInt& d, const BigInt& s, const BigRat& eps);

} // namespace glqv
