#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "glqv/common.hpp"
#include "glqv/cycloring.hpp"
#include "glqv/fq.hpp"
#include "glqv/report.hpp"

namespace glqv {

inline constexpr std::uint64_t kMaxGl2Order = 64;

// Classes of GL(2,q) in exponent form. With g2 the fixed generator of
// F_{q^2}^x and h = g2^(q+1) the induced generator of F_q^x:
//   central       a_i   = h^i I
//   nonsemisimple b_i   : eigenvalue h^i, one Jordan block
//   split         c_ij  : eigenvalues h^i, h^j, i < j
//   elliptic      d_s   : eigenvalues g2^s, g2^(qs), s not a multiple of q+1,
//                         s the smaller of s and qs mod (q^2 - 1)
enum class Gl2ClassKind { central, nonsemisimple, split, elliptic };
// Characters: U_a = alpha_a o det, V_a = Steinberg twist, W_ab principal
// series (a < b), X_t cuspidal (t not a multiple of q+1, smaller of t, qt).
enum class Gl2CharKind { U, V, W, X };

struct Gl2Class {
    Gl2ClassKind kind;
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    std::uint64_t size = 0;
    std::string label() const;
};

struct Gl2Char {
    Gl2CharKind kind;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint64_t degree = 0;
    std::string label() const;
};

// Table entry: sum of at most two terms c * zeta_M^e, M = q^2 - 1.
struct Gl2Entry {
    std::uint8_t terms = 0;
    std::int64_t coeff[2] = {0, 0};
    std::uint32_t exponent[2] = {0, 0};
};

class Gl2Table {
public:
    // Throws DomainError unless q is a prime power <= 64.
    static Gl2Table build(std::uint64_t q);

    std::uint64_t q() const { return q_; }
    std::uint32_t M() const { return M_; }
    std::uint64_t group_order() const { return group_order_; }
    const std::shared_ptr<const FqCtx>& field() const { return field_; }
    // Quadratic modulus y^2 + m1 y + m0 of F_{q^2} over F_q, and g2 = u0 + u1 y.
    const std::vector<Elem>& ext_modulus() const { return ext_modulus_; }
    std::pair<Elem, Elem> ext_generator() const { return generator_; }

    const std::vector<Gl2Class>& classes() const { return classes_; }
    const std::vector<Gl2Char>& chars() const { return chars_; }
    const Gl2Entry& entry(std::size_t chi, std::size_t g) const { return entries_[chi * classes_.size() + g]; }
    CycloElem value(std::size_t chi, std::size_t g) const;
    // Exact zero test of one entry.
    bool is_zero(std::size_t chi, std::size_t g) const;

    // Element g2^s of F_{q^2} as (u0, u1).
    std::pair<Elem, Elem> ext_power(std::uint64_t s) const;

    nlohmann::json to_json(bool with_values) const;

private:
    std::uint64_t q_ = 0;
    std::uint32_t M_ = 0;
    std::uint64_t group_order_ = 0;
    std::shared_ptr<const FqCtx> field_;
    std::vector<Elem> ext_modulus_;
    std::pair<Elem, Elem> generator_{0, 0};
    std::vector<Gl2Class> classes_;
    std::vector<Gl2Char> chars_;
    std::vector<Gl2Entry> entries_;
};

struct VanishingCount {
    BigRat proportion;    // P_{2,q}: nonvanishing pairs, class-size weighted, over k(G) |G|
    BigInt zero_weight;   // from exact zero tests
    BigInt independent_zero_weight; // structural blocks plus sporadic zeros by exponent arithmetic
};

VanishingCount vanishing_count(const Gl2Table& table);
BigRat vanishing_proportion(const Gl2Table& table);

// Q(eps) from the table's degrees and class sizes.
BigRat table_ratio_statistic(const Gl2Table& table, const BigRat& eps);

struct LemmaARow {
    BigRat eps;
    BigRat P;
    BigRat Q;
    BigRat bound; // Q + eps^2
    bool holds = false;
};

std::vector<LemmaARow> lemma_A_rows(const Gl2Table& table, const std::vector<BigRat>& eps_grid);
Report verify_lemma_A(const Gl2Table& table, const std::vector<BigRat>& eps_grid);

// Both orthogonality relations, exactly.
Report verify_orthogonality(const Gl2Table& table);
// The two zero counts agree.
Report verify_zero_counts(const Gl2Table& table);
// sigma_j maps the value matrix onto a row permutation of itself, for the
// smallest `max_units` units j > 1 together with j = -1.
Report verify_galois_rows(const Gl2Table& table, std::size_t max_units = 8);
// Integrality of alpha = chi(g) (d, s) / d, Galois-average norms >= 1, the
// row identity, its Galois-averaged form and both summed inequalities.
Report verify_burnside_chain(const Gl2Table& table);
// Class sizes, centralizers and degree multisets against the nu-parametrization.
Report crosscheck_with_glnq(const Gl2Table& table);

} // namespace glqv
