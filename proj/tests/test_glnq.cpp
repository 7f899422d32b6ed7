#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "glqv/glnq.hpp"
#include "glqv/numtheory.hpp"

using namespace glqv;

namespace {

NuMap single(const std::shared_ptr<const FqCtx>& ctx, Coeffs poly, std::vector<int> parts)
{
    return NuMap(ctx, {{MonicPoly(ctx, std::move(poly)), Partition(std::move(parts))}});
}

std::vector<BigInt> degree_list(int n, std::uint64_t q)
{
    std::vector<BigInt> out;
    for (const auto& nu : enumerate_numaps(n, FqCtx::make(q)))
        out.push_back(char_degree(nu).degree);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Glnq, GroupOrder)
{
    EXPECT_EQ(group_order(2, 2), 6);
    EXPECT_EQ(group_order(2, 3), 48);
    EXPECT_EQ(group_order(3, 2), 168);
    EXPECT_EQ(group_order(4, 2), 20160);
}

TEST(Glnq, EnumerationExamples)
{
    auto F2 = FqCtx::make(2);
    auto one = enumerate_numaps(1, F2);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], single(F2, {1, 1}, {1}));
    auto two = enumerate_numaps(2, F2);
    ASSERT_EQ(two.size(), 3u);
    for (const auto& nu : {single(F2, {1, 1}, {2}), single(F2, {1, 1}, {1, 1}), single(F2, {1, 1, 1}, {1})})
        EXPECT_NE(std::find(two.begin(), two.end(), nu), two.end()) << nu.to_string();
    EXPECT_EQ(enumerate_numaps(3, F2).size(), 6u);
}

TEST(Glnq, CountMatchesEnumeration)
{
    EXPECT_EQ(count_numaps(2, 2), 3);
    EXPECT_EQ(count_numaps(2, 3), 8);
    EXPECT_EQ(count_numaps(3, 2), 6);
    for (std::uint64_t q : {2, 3, 4, 5})
        for (int n = 1; n <= 5; ++n) {
            if (pow_ui(q, n) > 4096)
                continue;
            EXPECT_EQ(count_numaps(n, q), BigInt(static_cast<unsigned long>(enumerate_numaps(n, FqCtx::make(q)).size())))
                << n << " " << q;
        }
}

TEST(Glnq, InvalidMaps)
{
    auto F2 = FqCtx::make(2);
    EXPECT_THROW(single(F2, {0, 1}, {1}), DomainError);    // x excluded
    EXPECT_THROW(single(F2, {1, 0, 1}, {1}), DomainError); // reducible
    MonicPoly f(F2, {1, 1});
    EXPECT_THROW(NuMap(F2, {{f, Partition({1})}, {f, Partition({1})}}), DomainError);
}

TEST(Glnq, ClassDataExamples)
{
    auto F3 = FqCtx::make(3);
    ClassData id = class_data(single(F3, {2, 1}, {1, 1}));
    EXPECT_EQ(id.centralizer_order, 48);
    EXPECT_EQ(id.class_size, 1);
    ClassData tv = class_data(single(F3, {2, 1}, {2}));
    EXPECT_EQ(tv.centralizer_order, 6);
    EXPECT_EQ(tv.class_size, 8);
    auto F2 = FqCtx::make(2);
    ClassData c7 = class_data(single(F2, {1, 1, 0, 1}, {1}));
    EXPECT_EQ(c7.centralizer_order, 7);
    EXPECT_EQ(c7.class_size, 24);
    EXPECT_EQ(c7.char_poly.coeffs(), (Coeffs{1, 1, 0, 1}));
}

TEST(Glnq, CentralizerFactorByDirectProduct)
{
    // c_lambda(Q) = Q^(sum lambda'_i^2) prod_i prod_{k <= m_i} (1 - Q^-k).
    for (std::uint64_t Qv : {2, 3, 4, 8, 9})
        for (int n = 1; n <= 7; ++n)
            for (const auto& l : enumerate_partitions(n)) {
                BigInt Q(static_cast<unsigned long>(Qv));
                long e = 0;
                Partition lc = l.conjugate();
                for (int c : lc.parts())
                    e += static_cast<long>(c) * c;
                BigRat v = BigRat(pow(Q, static_cast<unsigned long>(e)));
                for (auto [part, mult] : l.multiplicities())
                    for (int k = 1; k <= mult; ++k)
                        v *= BigRat(1) - BigRat(BigInt(1), pow(Q, static_cast<unsigned long>(k)));
                EXPECT_EQ(BigRat(centralizer_factor(l, Q)), v) << l.to_string() << " " << Qv;
            }
}

TEST(Glnq, DegreeExamples)
{
    auto F2 = FqCtx::make(2);
    EXPECT_EQ(char_degree(single(F2, {1, 1}, {3})).degree, 1);
    EXPECT_EQ(char_degree(single(F2, {1, 1}, {1, 1, 1})).degree, 8);
    CharData d21 = char_degree(single(F2, {1, 1}, {2, 1}));
    EXPECT_EQ(d21.degree, 6);
    EXPECT_EQ(d21.q_exponent, 1);
    EXPECT_EQ(degree_list(3, 2), (std::vector<BigInt>{1, 3, 3, 6, 7, 8}));
    EXPECT_EQ(degree_list(2, 2), (std::vector<BigInt>{1, 1, 2}));
    EXPECT_EQ(degree_list(2, 3), (std::vector<BigInt>{1, 1, 2, 2, 2, 3, 3, 4}));
    // GL(2,q): q-1 of degree 1, q-1 of q, (q-1)(q-2)/2 of q+1, q(q-1)/2 of q-1.
    for (std::uint64_t q : {4, 5, 7, 8, 9}) {
        auto list = degree_list(2, q);
        BigInt Q(static_cast<unsigned long>(q));
        auto count = [&](const BigInt& d) { return std::count(list.begin(), list.end(), d); };
        long c1 = static_cast<long>(q - 1), cq = static_cast<long>(q - 1);
        long cw = static_cast<long>((q - 1) * (q - 2) / 2), cx = static_cast<long>(q * (q - 1) / 2);
        EXPECT_EQ(count(1), c1);
        EXPECT_EQ(count(Q), cq);
        EXPECT_EQ(count(Q + 1), cw);
        EXPECT_EQ(count(Q - 1), cx);
    }
}

TEST(Glnq, SumOfDegreeSquares)
{
    for (std::uint64_t q : {2, 3, 4, 5})
        for (int n = 1; n <= 4; ++n)
            EXPECT_EQ(sum_degree_squares(n, q), group_order(n, q)) << n << " " << q;
    Report r = verify_degree_formula(3, 3);
    EXPECT_TRUE(r.ok()) << r.summary();
    Report c = verify_class_equation(3, 3);
    EXPECT_TRUE(c.ok()) << c.summary();
}

TEST(Glnq, Deficiency)
{
    auto F2 = FqCtx::make(2);
    EXPECT_EQ(deficiency(single(F2, {1, 1}, {1, 1, 1, 1})), 3);
    EXPECT_EQ(deficiency(single(F2, {1, 1, 1}, {2, 1})), 4);
    auto F3 = FqCtx::make(3);
    EXPECT_EQ(deficiency(NuMap(F3, {{MonicPoly(F3, {1, 1}), Partition({1})}, {MonicPoly(F3, {2, 1}), Partition({1})}})), 0);
}

TEST(Glnq, HighDeficiencyCountAgainstEnumeration)
{
    EXPECT_EQ(count_high_deficiency(2, 2, 1), 2);
    EXPECT_THROW(count_high_deficiency(2, 2, 0), DomainError);
    for (std::uint64_t q : {2, 3})
        for (int n = 1; n <= (q == 2 ? 8 : 5); ++n) {
            auto maps = enumerate_numaps(n, FqCtx::make(q));
            for (int N = 1; N <= n; ++N) {
                long brute = std::count_if(maps.begin(), maps.end(), [N](const NuMap& nu) { return deficiency(nu) >= N; });
                EXPECT_EQ(count_high_deficiency(n, q, N), brute) << n << " " << q << " " << N;
            }
        }
}

TEST(Glnq, DegreeMSingleBoxAgainstEnumeration)
{
    EXPECT_EQ(count_degree_m_single_box(2, 2, 2), 1);
    EXPECT_EQ(count_degree_m_single_box(3, 2, 3), 2);
    EXPECT_EQ(count_degree_m_single_box(2, 2, 3), 0);
    for (std::uint64_t q : {2, 3})
        for (int n = 1; n <= (q == 2 ? 8 : 5); ++n) {
            auto maps = enumerate_numaps(n, FqCtx::make(q));
            for (int m = 1; m <= n; ++m) {
                long brute = std::count_if(maps.begin(), maps.end(), [m](const NuMap& nu) {
                    return std::any_of(nu.entries().begin(), nu.entries().end(), [m](const NuEntry& e) {
                        return e.poly.degree() == m && e.lambda == Partition({1});
                    });
                });
                EXPECT_EQ(count_degree_m_single_box(n, q, m), brute) << n << " " << q << " " << m;
            }
        }
}

TEST(Glnq, CountingBoundReports)
{
    Report a = verify_class_count_bounds(12, {2, 3, 4});
    EXPECT_TRUE(a.ok()) << a.summary();
    Report b = verify_counting_bounds(8, {2, 3}, 2, 6);
    EXPECT_TRUE(b.ok()) << b.summary();
}

TEST(Glnq, OrdEllExamples)
{
    auto F4 = FqCtx::make(4);
    auto lin = irreducible_catalog(F4, 1);
    NuMap two_lin(F4, {{lin[0], Partition({1})}, {lin[1], Partition({1})}});
    auto a = ord_ell_degree(two_lin, 2, 5);
    ASSERT_TRUE(a);
    EXPECT_EQ(a->formula, 1);
    EXPECT_EQ(a->direct, 1);
    auto F2 = FqCtx::make(2);
    auto b = ord_ell_degree(single(F2, {1, 1, 1}, {1}), 2, 3);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->formula, 0);
    EXPECT_EQ(b->direct, 0);
    auto c = ord_ell_degree(single(F2, {1, 1, 0, 1}, {1}), 2, 3);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->formula, 1);
    EXPECT_EQ(c->direct, 1);
    for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{4, 2}, {5, 2}, {3, 3}, {2, 5}}) {
        Report r = verify_ord_ell(n, q);
        EXPECT_TRUE(r.ok()) << r.summary();
    }
}

TEST(Glnq, ProbOrderEquality)
{
    EXPECT_THROW(prob_order_equality(3, 2, 2, 5), DomainError);
    // By hand: characters of GL(3,2) with ord_3(d) = ord_3(168) = 1 have degrees 3, 3, 6.
    EXPECT_EQ(prob_order_equality(3, 2, 2, 3), BigRat(1, 2));
    BigRat p = prob_order_equality(2, 4, 2, 5);
    EXPECT_GT(p, 0);
    EXPECT_LE(p, 1);
}

TEST(Glnq, FactDistribution)
{
    auto d = fact_distribution(2, 2);
    EXPECT_EQ(d.size(), 2u);
    EXPECT_EQ(d[1], 2);
    EXPECT_EQ(d[2], 4);
    auto one = fact_distribution(1, 5);
    EXPECT_EQ(one[1], 4);
    BigInt total = 0;
    for (const auto& [k, w] : fact_distribution(3, 2))
        total += w;
    EXPECT_EQ(total, 168);
}

TEST(Glnq, RepeatedFactorProbability)
{
    EXPECT_EQ(repeated_factor_probability(2, 2, 1), BigRat(2, 3));
    EXPECT_EQ(repeated_factor_probability(3, 2, 2), 0);
    for (std::uint64_t q : {2, 3})
        for (int n = 1; n <= (q == 2 ? 6 : 4); ++n)
            for (int m = 1; m <= n; ++m)
                EXPECT_EQ(repeated_factor_probability(n, q, m), repeated_factor_probability_enumerated(n, q, m))
                    << n << " " << q << " " << m;
}

TEST(Glnq, RatioStatistic)
{
    EXPECT_EQ(ratio_statistic_exact(2, 3, BigRat(1, 1000)).Q, 1);
    // eps = 1 counts pairs with d | s. Brute force over the enumerated maps.
    for (std::uint64_t q : {2, 3, 4}) {
        auto ctx = FqCtx::make(q);
        auto maps = enumerate_numaps(2, ctx);
        BigInt hits = 0;
        for (const auto& chi : maps)
            for (const auto& g : maps) {
                BigInt d = char_degree(chi).degree, s = class_data(g).class_size;
                if (s % d == 0)
                    hits += s;
            }
        BigRat expect(hits, BigInt(static_cast<unsigned long>(maps.size())) * group_order(2, q));
        expect.canonicalize();
        EXPECT_EQ(ratio_statistic_exact(2, q, BigRat(1)).Q, expect);
    }
    EXPECT_TRUE(ratio_at_least(7, 24, BigRat(1, 7)));
    EXPECT_FALSE(ratio_at_least(7, 24, BigRat(1, 2)));
}

TEST(Glnq, RSet)
{
    RReport r = build_R_set(3, 2, BigRat(100), BigRat(1, 2));
    EXPECT_TRUE(r.checks.ok()) << r.checks.summary();
    // X holds the two order-7 classes (cubic factor) and the class with a
    // simple quadratic factor, since 2^2 >= 3.
    int order7 = 0, quadratic = 0;
    for (const auto& c : r.classes)
        if (c.in_X) {
            if (c.m_g == 3) {
                EXPECT_EQ(c.ell_g, 7);
                ++order7;
            } else {
                EXPECT_EQ(c.m_g, 2);
                EXPECT_EQ(c.ell_g, 3);
                ++quadratic;
            }
        }
    EXPECT_EQ(order7, 2);
    EXPECT_EQ(quadratic, 1);
    EXPECT_GT(r.off_r_pairs, 0u);
    RReport r4 = build_R_set(4, 2, BigRat(100), BigRat(1, 2));
    EXPECT_TRUE(r4.checks.ok()) << r4.checks.summary();
    for (const auto& c : r4.classes)
        if (c.in_X) {
            EXPECT_EQ(c.ell_g % c.m_g, 1);
        }
    EXPECT_THROW(build_R_set(1, 2, BigRat(1), BigRat(1, 2)), DomainError);
}

TEST(Glnq, LogUpperBound)
{
    for (int n = 1; n <= 200; ++n) {
        double v = log_upper_bound(n).get_d();
        EXPECT_GE(v, std::log(static_cast<double>(n)));
        EXPECT_LT(v, std::log(static_cast<double>(n)) + 1e-8);
    }
}
