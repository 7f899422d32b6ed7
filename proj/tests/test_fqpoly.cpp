#include <gtest/gtest.h>

#include <set>

#include "glqv/fqpoly.hpp"

using namespace glqv;

namespace {

// All monic polynomials of degree d, coefficient lists ascending.
std::vector<Coeffs> all_monic(std::uint64_t q, int d)
{
    std::vector<Coeffs> out;
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i)
        total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
        Coeffs c(static_cast<std::size_t>(d) + 1);
        std::uint64_t x = code;
        for (int i = 0; i < d; ++i) {
            c[i] = static_cast<Elem>(x % q);
            x /= q;
        }
        c[d] = 1;
        out.push_back(c);
    }
    return out;
}

// Irreducibles of degree d as the complement of all products of lower-degree monics.
std::set<Coeffs> sieve_irreducibles(const FqCtx& F, int d)
{
    std::set<Coeffs> reducible;
    for (int a = 1; a <= d / 2; ++a)
        for (const auto& f : all_monic(F.q(), a))
            for (const auto& g : all_monic(F.q(), d - a))
                reducible.insert(poly::mul(F, f, g));
    std::set<Coeffs> out;
    for (const auto& f : all_monic(F.q(), d))
        if (!reducible.count(f) && f[0] != 0)
            out.insert(f);
    return out;
}

MonicPoly product_of(const std::vector<PolyFactor>& fs)
{
    MonicPoly out = pow(fs.front().factor, static_cast<unsigned>(fs.front().multiplicity));
    for (std::size_t i = 1; i < fs.size(); ++i)
        out = out * pow(fs[i].factor, static_cast<unsigned>(fs[i].multiplicity));
    return out;
}

} // namespace

TEST(Field, PrimeFieldMatchesIntegerArithmetic)
{
    for (std::uint64_t p : {2, 3, 5, 7, 13}) {
        auto F = FqCtx::make(p);
        for (Elem a = 0; a < p; ++a)
            for (Elem b = 0; b < p; ++b) {
                EXPECT_EQ(F->mul(a, b), (a * b) % p);
                EXPECT_EQ(F->add(a, b), (a + b) % p);
                EXPECT_EQ(F->sub(a, b), (a + p - b) % p);
            }
    }
}

TEST(Field, Axioms)
{
    for (std::uint64_t q : {2, 4, 8, 9, 16, 25, 27, 49, 64, 81, 125, 1024, 3125}) {
        auto F = FqCtx::make(q);
        Report r = verify_field(*F, 5);
        EXPECT_TRUE(r.ok()) << q << " " << r.summary();
    }
    EXPECT_THROW(FqCtx::make(6), DomainError);
    EXPECT_THROW(FqCtx::make(1), DomainError);
    EXPECT_THROW(FqCtx::make((1u << 20) * 2), DomainError);
}

TEST(Field, FrobeniusAndRoots)
{
    auto F = FqCtx::make(27);
    for (Elem a = 0; a < 27; ++a) {
        EXPECT_EQ(F->pow(F->pth_root(a), 3), a);
        EXPECT_EQ(F->pow(a, 27), a);
    }
}

TEST(Poly, IrreducibleCountsAgainstSieve)
{
    EXPECT_EQ(count_irreducibles(2, 1), 1);
    EXPECT_EQ(count_irreducibles(2, 2), 1);
    EXPECT_EQ(count_irreducibles(2, 3), 2);
    for (auto [q, dmax] : std::vector<std::pair<std::uint64_t, int>>{{2, 8}, {3, 5}, {4, 4}, {5, 3}, {9, 2}}) {
        auto ctx = FqCtx::make(q);
        for (int d = 1; d <= dmax; ++d) {
            auto sieve = sieve_irreducibles(*ctx, d);
            EXPECT_EQ(count_irreducibles(q, d), BigInt(static_cast<unsigned long>(sieve.size()))) << q << " " << d;
            std::set<Coeffs> listed;
            for (const auto& f : enumerate_irreducibles(ctx, d)) {
                listed.insert(f.coeffs());
                EXPECT_TRUE(poly::is_irreducible(*ctx, f.coeffs()));
            }
            EXPECT_EQ(listed, sieve);
        }
    }
}

TEST(Poly, EnumerationExamples)
{
    auto F2 = FqCtx::make(2);
    auto two = enumerate_irreducibles(F2, 2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0].to_string(), "[1,1,1]");
    EXPECT_EQ(enumerate_irreducibles(F2, 4).size(), 3u);
    auto F3 = FqCtx::make(3);
    auto lin = enumerate_irreducibles(F3, 1);
    ASSERT_EQ(lin.size(), 2u);
    EXPECT_EQ(lin[0].coeffs(), (Coeffs{1, 1}));
    EXPECT_EQ(lin[1].coeffs(), (Coeffs{2, 1}));
    EXPECT_EQ(MonicPoly(F2, {1, 1, 0, 1}).to_string(), "[1,1,0,1]");
    EXPECT_THROW(MonicPoly(F2, {1, 1, 0}), DomainError);
}

TEST(Poly, FactorExamples)
{
    auto F2 = FqCtx::make(2);
    auto irr = factor_poly(MonicPoly(F2, {1, 1, 1}));
    ASSERT_EQ(irr.size(), 1u);
    EXPECT_EQ(irr[0].multiplicity, 1);
    auto sq = factor_poly(MonicPoly(F2, {1, 0, 1}));
    ASSERT_EQ(sq.size(), 1u);
    EXPECT_EQ(sq[0].factor.coeffs(), (Coeffs{1, 1}));
    EXPECT_EQ(sq[0].multiplicity, 2);
    auto x3x = factor_poly(MonicPoly(F2, {0, 1, 0, 1}));
    ASSERT_EQ(x3x.size(), 2u);
    EXPECT_EQ(x3x[0].factor.coeffs(), (Coeffs{0, 1}));
    EXPECT_EQ(x3x[1].multiplicity, 2);
    EXPECT_EQ(factor_count(MonicPoly(F2, {1, 1, 1, 1})), 3); // (x+1)^3
}

TEST(Poly, FactorizationReproducesEveryPolynomial)
{
    for (auto [q, dmax] : std::vector<std::pair<std::uint64_t, int>>{{2, 9}, {3, 6}, {4, 4}, {8, 3}}) {
        auto ctx = FqCtx::make(q);
        for (int d = 1; d <= dmax; ++d)
            for (const auto& c : all_monic(q, d)) {
                MonicPoly f(ctx, c);
                auto fs = factor_poly(f);
                ASSERT_EQ(product_of(fs), f) << f.to_string();
                for (const auto& pf : fs)
                    EXPECT_TRUE(poly::is_irreducible(*ctx, pf.factor.coeffs()));
            }
    }
    Report r = verify_factorization(FqCtx::make(49), 10, 30, 2);
    EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(Poly, RepeatedFactorCountsAgainstEnumeration)
{
    EXPECT_EQ(count_repeated_factor_polys(2, 2, 1), 1);
    EXPECT_EQ(count_repeated_factor_polys(2, 3, 2), 0);
    for (auto [q, nmax] : std::vector<std::pair<std::uint64_t, int>>{{2, 10}, {3, 6}, {4, 4}}) {
        auto ctx = FqCtx::make(q);
        for (int n = 1; n <= nmax; ++n) {
            std::vector<int> worst; // per polynomial: largest degree of a repeated factor
            for (const auto& c : all_monic(q, n)) {
                if (c[0] == 0)
                    continue;
                int w = 0;
                for (const auto& pf : factor_poly(MonicPoly(ctx, c)))
                    if (pf.multiplicity >= 2)
                        w = std::max(w, pf.factor.degree());
                worst.push_back(w);
            }
            for (int m = 1; m <= n; ++m) {
                long brute = std::count_if(worst.begin(), worst.end(), [m](int w) { return w >= m; });
                EXPECT_EQ(count_repeated_factor_polys(q, n, m), brute) << q << " " << n << " " << m;
            }
        }
    }
}

TEST(Poly, BoundReports)
{
    for (std::uint64_t q : {2, 3, 4}) {
        Report a = verify_repeated_factor_bound(q, 12);
        EXPECT_TRUE(a.ok()) << a.summary();
        Report b = verify_irreducible_counts(q, 10);
        EXPECT_TRUE(b.ok()) << b.summary();
    }
}

TEST(Poly, Arithmetic)
{
    auto F = FqCtx::make(5);
    Coeffs a{1, 2, 3}, b{4, 0, 1};
    Coeffs quot, rem;
    Coeffs prod = poly::mul(*F, a, b);
    poly::divmod(*F, prod, b, quot, rem);
    EXPECT_EQ(quot, a);
    EXPECT_EQ(poly::degree(rem), -1);
    EXPECT_EQ(poly::gcd(*F, prod, poly::mul(*F, b, Coeffs{1, 1})), poly::monic(*F, b));
    EXPECT_EQ(poly::powmod(*F, Coeffs{0, 1}, BigInt(5), Coeffs{0, 0, 0, 1}), (Coeffs{}));
}
