#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <set>

#include "glqv/gl2.hpp"
#include "glqv/oracle.hpp"

using namespace glqv;

namespace {

using Complex = std::complex<long double>;

Complex numeric(const Gl2Table& t, std::size_t x, std::size_t y)
{
    const long double pi = std::acos(-1.0L);
    const Gl2Entry& e = t.entry(x, y);
    Complex v = 0;
    for (int i = 0; i < e.terms; ++i)
        v += static_cast<long double>(e.coeff[i]) * std::polar(1.0L, 2 * pi * e.exponent[i] / t.M());
    return v;
}

const std::vector<BigRat> kGrid{BigRat(1, 20), BigRat(1, 10), BigRat(1, 5), BigRat(1, 4), BigRat(1, 2), BigRat(1)};

} // namespace

TEST(Gl2, ShapeAndDegrees)
{
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 16}) {
        Gl2Table t = Gl2Table::build(q);
        EXPECT_EQ(t.classes().size(), q * q - 1);
        EXPECT_EQ(t.chars().size(), q * q - 1);
        std::uint64_t total = 0;
        for (const auto& c : t.classes())
            total += c.size;
        EXPECT_EQ(total, t.group_order());
        // chi(identity) = degree
        for (std::size_t x = 0; x < t.chars().size(); ++x)
            EXPECT_EQ(t.value(x, 0), CycloElem::from_integer(t.M(), static_cast<std::int64_t>(t.chars()[x].degree)));
    }
    EXPECT_THROW(Gl2Table::build(6), DomainError);
    EXPECT_THROW(Gl2Table::build(67), DomainError);
}

TEST(Gl2, GeneratorHasFullOrder)
{
    for (std::uint64_t q : {2, 3, 4, 5, 9, 25}) {
        Gl2Table t = Gl2Table::build(q);
        std::set<std::pair<Elem, Elem>> seen;
        for (std::uint64_t s = 0; s < t.M(); ++s)
            seen.insert(t.ext_power(s));
        EXPECT_EQ(seen.size(), t.M());
        EXPECT_FALSE(seen.count({0, 0}));
    }
}

TEST(Gl2, NumericOrthogonality)
{
    for (std::uint64_t q : {3, 4, 5, 7}) {
        Gl2Table t = Gl2Table::build(q);
        std::size_t k = t.chars().size();
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                Complex s = 0;
                for (std::size_t y = 0; y < k; ++y)
                    s += static_cast<long double>(t.classes()[y].size) * numeric(t, a, y) * std::conj(numeric(t, b, y));
                long double expect = a == b ? static_cast<long double>(t.group_order()) : 0;
                EXPECT_LT(std::abs(s - expect), 1e-6L) << q << " " << t.chars()[a].label() << " " << t.chars()[b].label();
            }
    }
}

TEST(Gl2, ExactOrthogonality)
{
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
        Report r = verify_orthogonality(Gl2Table::build(q));
        EXPECT_TRUE(r.ok()) << r.summary();
    }
}

TEST(Gl2, ZeroTestsAgainstNumerics)
{
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        Gl2Table t = Gl2Table::build(q);
        BigInt numeric_zero = 0;
        for (std::size_t x = 0; x < t.chars().size(); ++x)
            for (std::size_t y = 0; y < t.classes().size(); ++y) {
                bool nz = std::abs(numeric(t, x, y)) < 1e-9L;
                EXPECT_EQ(t.is_zero(x, y), nz);
                if (nz)
                    numeric_zero += BigInt(std::to_string(t.classes()[y].size));
            }
        VanishingCount v = vanishing_count(t);
        EXPECT_EQ(v.zero_weight, numeric_zero);
        EXPECT_EQ(v.zero_weight, v.independent_zero_weight);
        EXPECT_TRUE(verify_zero_counts(t).ok());
    }
}

TEST(Gl2, VanishingProportionValues)
{
    // q = 2 against the permutation-character table of S_3.
    MatrixGroupSnapshot snap = snapshot(2, 2);
    EXPECT_EQ(nonvanishing_proportion(gl22_character_table(snap)), BigRat(5, 6));
    EXPECT_EQ(vanishing_proportion(Gl2Table::build(2)), BigRat(5, 6));
    // q = 3 by hand: zero weight 32 + 18 + 36 + 12 + 24 = 122 of 384.
    EXPECT_EQ(vanishing_proportion(Gl2Table::build(3)), BigRat(131, 192));
}

TEST(Gl2, LemmaA)
{
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        Gl2Table t = Gl2Table::build(q);
        Report r = verify_lemma_A(t, kGrid);
        EXPECT_TRUE(r.ok()) << r.summary();
        auto rows = lemma_A_rows(t, {BigRat(1)});
        EXPECT_LE(rows[0].P, rows[0].Q + 1);
    }
    EXPECT_THROW(lemma_A_rows(Gl2Table::build(3), {BigRat(0)}), DomainError);
}

TEST(Gl2, GaloisRows)
{
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) {
        Report r = verify_galois_rows(Gl2Table::build(q), 12);
        EXPECT_TRUE(r.ok()) << r.summary();
    }
}

TEST(Gl2, BurnsideChain)
{
    for (std::uint64_t q : {2, 3, 4, 5}) {
        Report r = verify_burnside_chain(Gl2Table::build(q));
        EXPECT_TRUE(r.ok()) << r.summary();
    }
    // Steinberg twist V_0 at q = 3: restricted sum of size (3 / gcd(3, s))^2.
    Gl2Table t = Gl2Table::build(3);
    std::size_t v0 = 0;
    while (t.chars()[v0].kind != Gl2CharKind::V)
        ++v0;
    BigInt sum = 0;
    for (std::size_t y = 0; y < t.classes().size(); ++y) {
        if (t.is_zero(v0, y))
            continue;
        BigInt s(std::to_string(t.classes()[y].size));
        BigInt r = 3 / gcd(BigInt(3), s);
        sum += s * r * r;
    }
    EXPECT_LE(sum, 48);
}

TEST(Gl2, CrosscheckWithParametrization)
{
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        Report r = crosscheck_with_glnq(Gl2Table::build(q));
        EXPECT_TRUE(r.ok()) << r.summary();
    }
}

TEST(Gl2, JsonDump)
{
    auto j = Gl2Table::build(3).to_json(true);
    EXPECT_EQ(j["q"], 3);
    EXPECT_EQ(j["classes"].size(), 8u);
    EXPECT_EQ(j["values"].size(), 8u);
    EXPECT_EQ(j["values"][0][0].size(), 4u); // phi(8) coordinates
}
