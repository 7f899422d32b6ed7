// Primality and factorization: word-size deterministic routines plus the
// big-integer Baillie-PSW / Pollard-Brent path used for cyclotomic values.

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "glqv/numtheory.hpp"

namespace glqv::nt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m)
{
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s)
{
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return false;
    }
    return true;
}

u64 rho_u64(u64 n, u64 c)
{
    auto f = [&](u64 x) { return static_cast<u64>((static_cast<u128>(mulmod(x, x, n)) + c) % n); };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    const u64 m = 128;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i)
            y = f(y);
        for (u64 k = 0; k < r && g == 1; k += m) {
            ys = y;
            for (u64 i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_u64_into(u64 n, std::map<u64, int>& out)
{
    if (n == 1)
        return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    for (u64 c = 1;; ++c) {
        u64 d = rho_u64(n, c);
        if (d != n) {
            factor_u64_into(d, out);
            factor_u64_into(n / d, out);
            return;
        }
    }
}

int jacobi(const BigInt& a, const BigInt& n)
{
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

bool strong_probable_prime_base2(const BigInt& n)
{
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    BigInt x;
    BigInt two = 2;
    mpz_powm(x.get_mpz_t(), two.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    BigInt nm1 = n - 1;
    if (x == 1 || x == nm1)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1)
            return true;
    }
    return false;
}

BigInt mod_pos(const BigInt& x, const BigInt& n)
{
    BigInt r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    return r;
}

BigInt half_mod(BigInt x, const BigInt& n)
{
    if (mpz_odd_p(x.get_mpz_t()))
        x += n;
    mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
    return x;
}

// Strong Lucas probable-prime test with Selfridge's parameters (method A).
bool strong_lucas_probable_prime(const BigInt& n)
{
    if (mpz_perfect_square_p(n.get_mpz_t()))
        return false;
    long D = 5;
    while (true) {
        int j = jacobi(BigInt(D), n);
        if (j == -1)
            break;
        if (j == 0 && BigInt(std::labs(D)) != n)
            return false;
        D = D > 0 ? -(D + 2) : -(D - 2);
    }
    const BigInt P = 1;
    const BigInt Q = BigInt((1 - D) / 4);
    const BigInt Dz = D;

    BigInt d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    BigInt U = 1, V = P, Qk = mod_pos(Q, n);
    for (long bit = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
        U = mod_pos(U * V, n);
        V = mod_pos(V * V - 2 * Qk, n);
        Qk = mod_pos(Qk * Qk, n);
        if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
            BigInt U2 = half_mod(mod_pos(P * U + V, n), n);
            BigInt V2 = half_mod(mod_pos(Dz * U + P * V, n), n);
            U = U2;
            V = V2;
            Qk = mod_pos(Qk * Q, n);
        }
    }
    if (U == 0 || V == 0)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = mod_pos(V * V - 2 * Qk, n);
        if (V == 0)
            return true;
        Qk = mod_pos(Qk * Qk, n);
    }
    return false;
}

// One Pollard-Brent run with map x -> x^e + c. Returns a nontrivial factor or
// 0; `budget` is decremented by the number of map evaluations.
BigInt brent_rho(const BigInt& n, unsigned long e, unsigned long c, std::uint64_t& budget)
{
    BigInt y = 2, x = 2, ys = 2, q = 1, g = 1, t;
    auto f = [&](BigInt& v) {
        mpz_powm_ui(v.get_mpz_t(), v.get_mpz_t(), e, n.get_mpz_t());
        v += c;
        if (v >= n)
            v -= n;
    };
    auto spend = [&](std::uint64_t steps) {
        budget = budget > steps ? budget - steps : 0;
    };
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    while (g == 1) {
        if (budget == 0)
            return 0;
        x = y;
        for (std::uint64_t i = 0; i < r; ++i)
            f(y);
        spend(r);
        for (std::uint64_t k = 0; k < r && g == 1; k += m) {
            ys = y;
            std::uint64_t steps = std::min(m, r - k);
            for (std::uint64_t i = 0; i < steps; ++i) {
                f(y);
                t = x - y;
                q = q * t % n;
            }
            spend(steps);
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            f(ys);
            t = x - ys;
            mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n || g == 0)
        return 0;
    return g;
}

} // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (miller_rabin_witness(n, a, d, s))
            return false;
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n)
{
    if (n == 0)
        throw DomainError("factor_u64(0)");
    std::map<u64, int> out;
    for (u64 p = 2; p < 1000 && p * p <= n; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    factor_u64_into(n, out);
    return {out.begin(), out.end()};
}

bool bpsw_probable_prime(const BigInt& n)
{
    if (n < 2)
        return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return n == p;
    }
    return strong_probable_prime_base2(n) && strong_lucas_probable_prime(n);
}

Primality primality(const BigInt& n)
{
    if (n < 2)
        return Primality::composite;
    if (mpz_fits_ulong_p(n.get_mpz_t()))
        return is_prime_u64(n.get_ui()) ? Primality::prime : Primality::composite;
    return bpsw_probable_prime(n) ? Primality::probable_prime : Primality::composite;
}

BigInt Factorization::product() const
{
    BigInt r = 1;
    for (const auto& [p, e] : factors)
        r *= pow(p, e);
    for (const auto& u : unfactored)
        r *= u;
    return r;
}

std::string Factorization::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factors) {
        os << (first ? "" : " * ") << p.get_str();
        if (e > 1)
            os << "^" << e;
        first = false;
    }
    for (const auto& u : unfactored) {
        os << (first ? "" : " * ") << "[" << u.get_str() << "]";
        first = false;
    }
    if (first)
        os << "1";
    return os.str();
}

Factorization factorize(const BigInt& x, const FactorBudget& budget, std::uint64_t progression)
{
    if (x < 1)
        throw DomainError("factorize: argument must be positive");
    if (progression == 0)
        progression = 1;
    std::map<BigInt, unsigned> primes;
    Factorization result;
    BigInt rest = x;
    std::vector<BigInt> pending;

    auto add_prime = [&](const BigInt& p, unsigned e) {
        primes[p] += e;
        if (!mpz_fits_ulong_p(p.get_mpz_t()))
            result.has_probable_primes = true;
    };

    // Trial division along 1 (mod progression). A composite candidate can divide
    // only if some prime outside the progression does; it is then factored generically.
    for (u64 c = progression == 1 ? 2 : progression + 1; c <= budget.trial_bound && rest > 1; c += progression) {
        if (progression == 1 && BigInt(static_cast<unsigned long>(c)) * c > rest)
            break; // rest is prime
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), c))
            continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), c)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), c);
            ++e;
        }
        if (is_prime_u64(c))
            add_prime(BigInt(static_cast<unsigned long>(c)), e);
        else
            for (unsigned i = 0; i < e; ++i)
                pending.push_back(BigInt(static_cast<unsigned long>(c)));
    }
    if (rest > 1)
        pending.push_back(rest);

    unsigned long e_map = 2;
    if (progression > 2)
        e_map = (progression % 2 == 0) ? progression : 2 * progression;
    std::uint64_t rho_budget = budget.rho_iterations;

    while (!pending.empty()) {
        BigInt n = pending.back();
        pending.pop_back();
        if (n == 1)
            continue;
        if (primality(n) != Primality::composite) {
            add_prime(n, 1);
            continue;
        }
        if (mpz_fits_ulong_p(n.get_mpz_t())) {
            for (const auto& [p, e] : factor_u64(n.get_ui()))
                add_prime(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned>(e));
            continue;
        }
        BigInt root;
        if (mpz_perfect_power_p(n.get_mpz_t())) {
            for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k)
                if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                    for (unsigned long i = 0; i < k; ++i)
                        pending.push_back(root);
                    break;
                }
            continue;
        }
        BigInt d = 0;
        for (unsigned long c = 1; c <= 16 && d == 0 && rho_budget > 0; ++c) {
            d = brent_rho(n, e_map, c, rho_budget);
            if (d == 0 && e_map != 2)
                d = brent_rho(n, 2, c, rho_budget);
        }
        if (d == 0) {
            result.unfactored.push_back(n);
            continue;
        }
        pending.push_back(d);
        pending.push_back(n / d);
    }
    result.factors.assign(primes.begin(), primes.end());
    std::sort(result.unfactored.begin(), result.unfactored.end());
    return result;
}

} // namespace glqv::nt
