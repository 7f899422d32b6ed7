#include <gtest/gtest.h>

#include <map>
#include <random>

#include "glqv/numtheory.hpp"

using namespace glqv;
using namespace glqv::nt;

namespace {

std::vector<bool> sieve(std::uint64_t n)
{
    std::vector<bool> prime(n + 1, true);
    prime[0] = prime[1] = false;
    for (std::uint64_t i = 2; i * i <= n; ++i)
        if (prime[i])
            for (std::uint64_t j = i * i; j <= n; j += i)
                prime[j] = false;
    return prime;
}

// Phi_n(a) by peeling: (a^n - 1) / prod_{d | n, d < n} Phi_d(a).
BigInt peeled_cyclotomic(std::uint64_t n, std::uint64_t a, std::map<std::uint64_t, BigInt>& memo)
{
    auto it = memo.find(n);
    if (it != memo.end())
        return it->second;
    BigInt v = pow_ui(a, n) - 1;
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0)
            v /= peeled_cyclotomic(d, a, memo);
    memo[n] = v;
    return v;
}

std::uint64_t brute_phi(std::uint64_t n)
{
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        c += std::gcd(k, n) == 1;
    return c;
}

BigInt random_big(std::mt19937_64& rng, int words)
{
    BigInt x = 0;
    for (int i = 0; i < words; ++i) {
        x <<= 64;
        x += BigInt(std::to_string(rng()));
    }
    return x;
}

} // namespace

TEST(NumTheory, WordPrimalityAgainstSieve)
{
    auto prime = sieve(200000);
    for (std::uint64_t n = 0; n <= 200000; ++n)
        ASSERT_EQ(is_prime_u64(n), static_cast<bool>(prime[n])) << n;
    EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
    EXPECT_FALSE(is_prime_u64(3215031751ULL)); // strong pseudoprime to bases 2,3,5,7
}

TEST(NumTheory, BigPrimalityAgainstGmp)
{
    std::mt19937_64 rng(7);
    int agree = 0;
    for (int i = 0; i < 400; ++i) {
        BigInt n = random_big(rng, 2) | 1;
        bool gmp = mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
        EXPECT_EQ(bpsw_probable_prime(n), gmp) << n.get_str();
        agree += bpsw_probable_prime(n) == gmp;
    }
    EXPECT_EQ(agree, 400);
    // A prime above 2^64 and a product of two such primes.
    BigInt p("340282366920938463463374607431768211297");
    EXPECT_EQ(primality(p), Primality::probable_prime);
    EXPECT_EQ(primality(p * BigInt("18446744073709551629")), Primality::composite);
    EXPECT_EQ(primality(BigInt(97)), Primality::prime);
}

TEST(NumTheory, MoebiusPhiDivisorsAgainstBruteForce)
{
    EXPECT_EQ(moebius(1), 1);
    EXPECT_EQ(moebius(6), 1);
    EXPECT_EQ(moebius(12), 0);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        EXPECT_EQ(euler_phi(n), brute_phi(n)) << n;
        std::vector<std::uint64_t> divs;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                divs.push_back(d);
        EXPECT_EQ(divisors(n), divs);
        int mu_sum = 0;
        for (auto d : divs)
            mu_sum += moebius(d);
        EXPECT_EQ(mu_sum, n == 1 ? 1 : 0);
        std::uint64_t product = 1;
        for (auto [p, e] : factor_u64(n))
            for (int i = 0; i < e; ++i)
                product *= p;
        EXPECT_EQ(product, n);
    }
}

TEST(NumTheory, PrimePower)
{
    EXPECT_EQ(prime_power(8), std::make_optional(std::make_pair<std::uint64_t, unsigned>(2, 3)));
    EXPECT_EQ(prime_power(9), std::make_optional(std::make_pair<std::uint64_t, unsigned>(3, 2)));
    EXPECT_FALSE(prime_power(6));
    EXPECT_FALSE(prime_power(1));
    EXPECT_FALSE(prime_power(0));
}

TEST(NumTheory, CyclotomicValuesAgainstPeeling)
{
    EXPECT_EQ(cyclotomic_value(1, 2), 1);
    EXPECT_EQ(cyclotomic_value(6, 2), 3);
    EXPECT_EQ(cyclotomic_value(12, 2), 13);
    for (std::uint64_t a : {2, 3, 5, 10}) {
        std::map<std::uint64_t, BigInt> memo;
        for (std::uint64_t n = 1; n <= 120; ++n)
            EXPECT_EQ(cyclotomic_value(n, a), peeled_cyclotomic(n, a, memo)) << n << " " << a;
    }
}

TEST(NumTheory, PrimitiveSplit)
{
    auto s3 = split_primitive_part(3, 2);
    EXPECT_EQ(s3.phi_value, 7);
    EXPECT_EQ(s3.p_part, 7);
    EXPECT_EQ(s3.r_part, 1);
    auto s6 = split_primitive_part(6, 2);
    EXPECT_EQ(s6.p_part, 1);
    EXPECT_EQ(s6.r_part, 3);
    auto s10 = split_primitive_part(10, 2);
    EXPECT_EQ(s10.p_part, 11);
    for (std::uint64_t a : {2, 3, 7})
        for (std::uint64_t n = 1; n <= 80; ++n) {
            auto s = split_primitive_part(n, a);
            EXPECT_EQ(s.p_part * s.r_part, s.phi_value);
            EXPECT_EQ(gcd(s.p_part, BigInt(std::to_string(n))), 1);
            BigInt r = s.r_part;
            for (auto p : prime_divisors(n))
                while (r % p == 0)
                    r /= p;
            EXPECT_EQ(r, 1) << n << " " << a;
        }
}

TEST(NumTheory, OrdPrime)
{
    EXPECT_EQ(ord_prime(3, 63), 2u);
    EXPECT_EQ(ord_prime(5, 7), 0u);
    EXPECT_EQ(ord_prime(2, pow_ui(2, 40)), 40u);
    EXPECT_THROW(ord_prime(3, 0), DomainError);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        BigInt x = random_big(rng, 1) + 1, y = random_big(rng, 1) + 1;
        for (int ell : {2, 3, 5, 7})
            EXPECT_EQ(ord_prime(ell, x * y), ord_prime(ell, x) + ord_prime(ell, y));
    }
}

TEST(NumTheory, SmallestPrimitivePrime)
{
    EXPECT_EQ(smallest_prime_factor_primitive(2, 2), 3);
    EXPECT_EQ(smallest_prime_factor_primitive(4, 2), 5);
    EXPECT_EQ(smallest_prime_factor_primitive(3, 2), 7);
    EXPECT_THROW(smallest_prime_factor_primitive(6, 2), NoPrimitivePrime);
    // Brute force: smallest prime l with ord of q mod l equal to m.
    for (std::uint64_t q : {2, 3, 5})
        for (std::uint64_t m = 1; m <= 24; ++m) {
            auto s = split_primitive_part(m, q);
            if (s.p_part == 1)
                continue;
            BigInt l = smallest_prime_factor_primitive(m, q);
            if (l < 1000000)
                for (BigInt p = 2; p < l; ++p)
                    if (mpz_probab_prime_p(p.get_mpz_t(), 30)) {
                        EXPECT_NE(s.p_part % p, 0);
                    }
            EXPECT_EQ(s.p_part % l, 0);
            EXPECT_EQ(l % m, 1 % m);
        }
}

TEST(NumTheory, Factorize)
{
    BigInt x = BigInt("1000000007") * BigInt("998244353") * 12;
    Factorization f = factorize(x);
    EXPECT_TRUE(f.complete());
    EXPECT_EQ(f.product(), x);
}

TEST(NumTheory, Pow2SqrtComparison)
{
    // 2^sqrt(9) = 8
    EXPECT_EQ(compare_pow2_sqrt(8, 9), std::make_optional(0));
    EXPECT_EQ(compare_pow2_sqrt(9, 9), std::make_optional(1));
    EXPECT_EQ(compare_pow2_sqrt(2, 2), std::make_optional(-1)); // 2^1.414 = 2.66
    EXPECT_EQ(compare_pow2_sqrt(3, 2), std::make_optional(1));
}

TEST(NumTheory, Verifiers)
{
    Report a = verify_cong(5, 6, 2);
    EXPECT_TRUE(a.ok()) << a.summary();
    Report b = verify_cong(5, 6, 5);
    EXPECT_TRUE(b.ok()) << b.summary();
    Report c = verify_cong(3, 4, 2);
    EXPECT_TRUE(c.ok()) << c.summary();
    Report sweep = verify_cong_sweep(100, 11);
    EXPECT_TRUE(sweep.ok()) << sweep.summary();
    Report prod = verify_product_identity(60, {2, 3});
    EXPECT_TRUE(prod.ok()) << prod.summary();
    Report quarter = verify_quarter_bound(60, {2, 3});
    EXPECT_TRUE(quarter.ok()) << quarter.summary();
    Report big = verify_big_factor(3, 30, {2, 3});
    EXPECT_TRUE(big.ok()) << big.summary();
    Report ord = verify_big_factor_ord(8, 24, {2, 3});
    EXPECT_TRUE(ord.ok()) << ord.summary();
}
