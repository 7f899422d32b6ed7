#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "glqv/cycloring.hpp"

using namespace glqv;

namespace {

using Complex = std::complex<long double>;

Complex embed_at(const CycloElem& a, std::int64_t j)
{
    const long double pi = std::acos(-1.0L);
    Complex z = std::polar(1.0L, 2 * pi * static_cast<long double>(j) / a.M());
    Complex v = 0, zk = 1;
    for (auto c : a.coeffs()) {
        v += static_cast<long double>(c) * zk;
        zk *= z;
    }
    return v;
}

CycloElem random_elem(std::uint32_t M, std::mt19937_64& rng, int range = 6)
{
    std::uniform_int_distribution<std::int64_t> d(-range, range);
    std::vector<std::int64_t> c(cyclo_data(M).phi);
    for (auto& x : c)
        x = d(rng);
    return CycloElem(M, c);
}

} // namespace

TEST(Cyclo, Examples)
{
    EXPECT_EQ(CycloElem::from_root_power(7, 0), CycloElem::from_integer(7, 1));
    EXPECT_EQ(CycloElem::from_root_power(4, 2).coeffs(), (std::vector<std::int64_t>{-1, 0}));
    EXPECT_EQ(CycloElem::from_root_power(3, 2).coeffs(), (std::vector<std::int64_t>{-1, -1}));
    CycloElem a = CycloElem(5, {1, 2, 0, -1});
    EXPECT_EQ(a.galois_apply(1), a);
    EXPECT_EQ(a.galois_apply(2).galois_apply(2), a.conj());
    EXPECT_THROW(a.galois_apply(5), DomainError);
    EXPECT_THROW(CycloElem(5, {1, 2}), DomainError);
}

TEST(Cyclo, CyclotomicPolynomialsAgainstRoots)
{
    // Phi_M vanishes at the primitive roots and nowhere else among M-th roots.
    for (std::uint32_t M = 1; M <= 60; ++M) {
        const auto& d = cyclo_data(M);
        const long double pi = std::acos(-1.0L);
        for (std::uint32_t k = 0; k < M; ++k) {
            Complex z = std::polar(1.0L, 2 * pi * k / M), v = 0, zk = 1;
            for (auto c : d.cyclotomic) {
                v += static_cast<long double>(c) * zk;
                zk *= z;
            }
            bool primitive = std::gcd(k, M) == 1;
            EXPECT_EQ(std::abs(v) < 1e-9L, primitive) << M << " " << k;
        }
    }
}

TEST(Cyclo, ArithmeticAgainstComplexEmbeddings)
{
    std::mt19937_64 rng(1);
    for (std::uint32_t M : {1u, 2u, 3u, 4u, 8u, 12u, 15u, 24u, 35u, 63u}) {
        for (int t = 0; t < 20; ++t) {
            CycloElem a = random_elem(M, rng), b = random_elem(M, rng);
            for (std::int64_t j = 1; j < static_cast<std::int64_t>(M) || j == 1; ++j) {
                if (std::gcd<std::int64_t>(j, M) != 1)
                    continue;
                Complex ea = embed_at(a, j), eb = embed_at(b, j);
                EXPECT_LT(std::abs(embed_at(a * b, j) - ea * eb), 1e-6L);
                EXPECT_LT(std::abs(embed_at(a + b, j) - (ea + eb)), 1e-9L);
                EXPECT_LT(std::abs(embed_at(a.galois_apply(j), 1) - ea), 1e-6L);
                if (M == 1)
                    break;
            }
            // Trace = sum of embeddings.
            Complex tr = 0;
            for (std::int64_t j = 1; j <= static_cast<std::int64_t>(M); ++j)
                if (std::gcd<std::int64_t>(j, M) == 1)
                    tr += embed_at(a, j);
            EXPECT_LT(std::abs(tr - Complex(a.trace().get_d(), 0)), 1e-6L);
        }
    }
}

TEST(Cyclo, GroupRingZeroTestAgainstNumerics)
{
    std::mt19937_64 rng(2);
    for (std::uint32_t M : {6u, 8u, 12u, 24u, 30u, 48u, 80u, 120u}) {
        GroupRingAccumulator acc(M);
        // sum of all M-th roots vanishes for M > 1
        for (std::uint32_t k = 0; k < M; ++k)
            acc.add(k, 3);
        EXPECT_TRUE(acc.vanishes());
        std::uniform_int_distribution<std::uint32_t> e(0, M - 1);
        std::uniform_int_distribution<int> c(-2, 2);
        int zeros = 0;
        for (int t = 0; t < 400; ++t) {
            acc.clear();
            std::vector<std::int64_t> terms(M, 0);
            int n = 1 + t % 4;
            for (int i = 0; i < n; ++i) {
                auto ex = e(rng);
                int co = c(rng);
                acc.add(ex, co);
                terms[ex] += co;
            }
            // Half the time, add an exact zero: zeta^s (1 + zeta^(M/2)) when M even.
            if (t % 2 == 0) {
                auto s = e(rng);
                acc.add(s, 1);
                acc.add(s + M / 2, 1);
                terms[s] += 1;
                terms[(s + M / 2) % M] += 1;
            }
            Complex v = 0;
            const long double pi = std::acos(-1.0L);
            for (std::uint32_t k = 0; k < M; ++k)
                v += static_cast<long double>(terms[k]) * std::polar(1.0L, 2 * pi * k / M);
            bool numeric_zero = std::abs(v) < 1e-9L;
            EXPECT_EQ(acc.vanishes(), numeric_zero);
            EXPECT_EQ(acc.reduce().is_zero(), numeric_zero);
            zeros += numeric_zero;
        }
        EXPECT_GT(zeros, 0);
    }
}

TEST(Cyclo, GaloisNorm)
{
    EXPECT_EQ(average_galois_norm(CycloElem(9)), 0);
    EXPECT_EQ(average_galois_norm(CycloElem::from_root_power(9, 4)), 1);
    CycloElem one_plus_zeta = CycloElem::from_integer(5, 1) + CycloElem::from_root_power(5, 1);
    EXPECT_EQ(average_galois_norm(one_plus_zeta), BigRat(3, 2));
    std::mt19937_64 rng(4);
    for (std::uint32_t M : {5u, 7u, 12u, 20u, 21u})
        for (int t = 0; t < 50; ++t) {
            CycloElem a = random_elem(M, rng, 3);
            if (a.is_zero())
                continue;
            long double avg = 0;
            int units = 0;
            for (std::int64_t j = 1; j < M; ++j)
                if (std::gcd<std::int64_t>(j, M) == 1) {
                    avg += std::norm(embed_at(a, j));
                    ++units;
                }
            avg /= units;
            EXPECT_NEAR(static_cast<double>(avg), average_galois_norm(a).get_d(), 1e-6);
            EXPECT_GE(average_galois_norm(a), 1);
        }
}

TEST(Cyclo, DivideByInteger)
{
    CycloElem a(12, {1, -2, 3, 0});
    EXPECT_EQ(divide_by_integer(2 * a, 2), a);
    EXPECT_FALSE(divide_by_integer(CycloElem(3, {1, 1}), 2));
    EXPECT_EQ(divide_by_integer(CycloElem(3, {3, 3}), 3), CycloElem(3, {1, 1}));
}

TEST(Cyclo, EmbedAndOverflow)
{
    CycloElem z3 = CycloElem::from_root_power(3, 1);
    EXPECT_EQ(z3.embed(12), CycloElem::from_root_power(12, 4));
    CycloElem big = CycloElem::from_integer(3, std::int64_t{1} << 62);
    EXPECT_THROW(big * big, ResourceError);
    EXPECT_THROW(cyclo_data(100001), DomainError);
}

TEST(Cyclo, Verifier)
{
    Report r = verify_cycloring({1, 2, 3, 4, 5, 8, 9, 12, 16, 20, 60, 63}, 15, 9);
    EXPECT_TRUE(r.ok()) << r.summary();
}
