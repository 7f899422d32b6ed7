#include "glqv/fq.hpp"

#include <map>
#include <mutex>

#include "glqv/fqpoly.hpp"
#include "glqv/numtheory.hpp"

namespace glqv {

std::shared_ptr<const FqCtx> FqCtx::make(std::uint64_t q)
{
    static std::mutex mutex;
    static std::map<std::uint64_t, std::shared_ptr<const FqCtx>> cache;
    if (q > kMaxFieldOrder)
        throw DomainError("field order " + std::to_string(q) + " exceeds 2^20");
    auto pk = nt::prime_power(q);
    if (!pk)
        throw DomainError(std::to_string(q) + " is not a prime power");
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(q);
        if (it != cache.end())
            return it->second;
    }
    // Built outside the lock: extension fields recursively need their prime field.
    std::shared_ptr<const FqCtx> ctx(new FqCtx(static_cast<std::uint32_t>(pk->first), pk->second));
    std::lock_guard lock(mutex);
    return cache.emplace(q, std::move(ctx)).first->second;
}

FqCtx::FqCtx(std::uint32_t p, std::uint32_t k) : p_(p), k_(k)
{
    q_ = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        digit_weight_.push_back(q_);
        q_ *= p;
    }
    if (k == 1) {
        modulus_ = {0, 1};
    } else {
        // Smallest monic irreducible of degree k under the ascending base-p encoding.
        auto base = FqCtx::make(p);
        for (std::uint32_t code = 0; code < q_; ++code) {
            Coeffs cand(k + 1);
            std::uint32_t c = code;
            for (std::uint32_t i = 0; i < k; ++i) {
                cand[i] = c % p;
                c /= p;
            }
            cand[k] = 1;
            if (cand[0] != 0 && poly::is_irreducible(*base, cand)) {
                modulus_ = std::move(cand);
                break;
            }
        }
        if (modulus_.empty())
            throw ConsistencyError("no irreducible modulus found");
    }

    // Smallest element of multiplicative order q - 1.
    std::vector<std::uint64_t> order_primes = q_ > 2 ? nt::prime_divisors(q_ - 1) : std::vector<std::uint64_t>{};
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1)
                r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    };
    Elem gen = 0;
    for (Elem g = 1; g < q_; ++g) {
        bool primitive = true;
        for (auto r : order_primes)
            if (slow_pow(g, (q_ - 1) / r) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen = g;
            break;
        }
    }
    if (gen == 0)
        throw ConsistencyError("no primitive element found");
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_slow(x, gen);
    }
    if (x != 1)
        throw ConsistencyError("generator order mismatch");
}

Elem FqCtx::mul_slow(Elem a, Elem b) const
{
    if (k_ == 1)
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    std::vector<std::uint32_t> da(k_), db(k_), prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    for (std::uint32_t d = 2 * k_ - 2; d >= k_; --d) {
        std::uint32_t c = prod[d];
        if (c == 0)
            continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < k_; ++i)
            prod[d - k_ + i] = static_cast<std::uint32_t>(
                (prod[d - k_ + i] + static_cast<std::uint64_t>(p_ - c) * modulus_[i]) % p_);
    }
    Elem r = 0;
    for (std::uint32_t i = 0; i < k_; ++i)
        r += prod[i] * digit_weight_[i];
    return r;
}

Elem FqCtx::add(Elem a, Elem b) const
{
    if (k_ == 1) {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2)
        return a ^ b;
    Elem r = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t d = a % p_ + b % p_;
        if (d >= p_)
            d -= p_;
        r += d * digit_weight_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

Elem FqCtx::neg(Elem a) const
{
    if (k_ == 1)
        return a == 0 ? 0 : p_ - a;
    if (p_ == 2)
        return a;
    Elem r = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * digit_weight_[i];
        a /= p_;
    }
    return r;
}

Elem FqCtx::sub(Elem a, Elem b) const
{
    return add(a, neg(b));
}

Elem FqCtx::inv(Elem a) const
{
    if (a == 0)
        throw DomainError("inverse of zero in F_q");
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Elem FqCtx::pow(Elem a, std::uint64_t e) const
{
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

Elem FqCtx::from_int(std::int64_t v) const
{
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Elem>(r);
}

std::uint32_t FqCtx::log(Elem a) const
{
    if (a == 0)
        throw DomainError("discrete log of zero");
    return log_[a];
}

Elem FqCtx::pth_root(Elem a) const
{
    return pow(a, q_ / p_);
}

} // namespace glqv
