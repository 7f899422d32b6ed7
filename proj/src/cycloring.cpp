#include "glqv/cycloring.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <shared_mutex>

#include "glqv/numtheory.hpp"

namespace glqv {

namespace {

constexpr std::uint64_t kReducedPowersCap = std::uint64_t{1} << 22;

std::int64_t add_checked(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ResourceError("cyclotomic coefficient overflow");
    return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ResourceError("cyclotomic coefficient overflow");
    return r;
}

std::uint32_t mod_exp(std::int64_t k, std::uint32_t M)
{
    std::int64_t r = k % static_cast<std::int64_t>(M);
    return static_cast<std::uint32_t>(r < 0 ? r + M : r);
}

// In-place remainder of poly (any length) modulo the monic Phi_M; returns phi coordinates.
std::vector<std::int64_t> reduce_mod_phi(std::vector<std::int64_t> a, const CycloData& D)
{
    const auto& c = D.cyclotomic;
    for (std::size_t i = a.size(); i-- > D.phi;) {
        std::int64_t lead = a[i];
        if (lead == 0)
            continue;
        a[i] = 0;
        std::size_t base = i - D.phi;
        for (std::size_t j = 0; j < D.phi; ++j)
            if (c[j] != 0)
                a[base + j] = add_checked(a[base + j], -mul_checked(lead, c[j]));
    }
    a.resize(D.phi, 0);
    return a;
}

std::unique_ptr<CycloData> build_data(std::uint32_t M)
{
    auto D = std::make_unique<CycloData>();
    D->M = M;
    D->phi = static_cast<std::uint32_t>(nt::euler_phi(M));
    for (auto p : nt::prime_divisors(M))
        D->prime_divisors.push_back(static_cast<std::uint32_t>(p));

    // Phi_M = prod_{d | M} (x^(M/d) - 1)^mu(d): numerators first, then exact
    // division by each denominator factor.
    std::vector<std::int64_t> num{1};
    std::vector<std::uint64_t> denominators;
    for (auto d : nt::divisors(M)) {
        int mu = nt::moebius(d);
        std::uint64_t e = M / d;
        if (mu == 1) {
            std::vector<std::int64_t> next(num.size() + e, 0);
            for (std::size_t i = 0; i < num.size(); ++i) {
                next[i + e] = add_checked(next[i + e], num[i]);
                next[i] = add_checked(next[i], -num[i]);
            }
            num = std::move(next);
        } else if (mu == -1) {
            denominators.push_back(e);
        }
    }
    for (auto e : denominators) {
        // num / (x^e - 1): q_i = q_{i+e} - num_{i+e}, computed from the top.
        std::size_t n = num.size() - 1;
        std::vector<std::int64_t> quot(n - e + 1, 0);
        std::vector<std::int64_t> rem = num;
        for (std::size_t i = n + 1; i-- > e;) {
            std::int64_t c = rem[i];
            if (c == 0)
                continue;
            quot[i - e] = c;
            rem[i] = 0;
            rem[i - e] = add_checked(rem[i - e], c);
        }
        for (std::size_t i = 0; i < e; ++i)
            if (rem[i] != 0)
                throw ConsistencyError("cyclotomic polynomial division not exact for M=" + std::to_string(M));
        num = std::move(quot);
    }
    if (num.size() != D->phi + 1 || num.back() != 1)
        throw ConsistencyError("cyclotomic polynomial has wrong degree for M=" + std::to_string(M));
    D->cyclotomic = std::move(num);

    D->root_trace.resize(M);
    for (std::uint32_t k = 0; k < M; ++k) {
        std::uint64_t d = M / std::gcd<std::uint64_t>(M, k);
        D->root_trace[k] = nt::moebius(d) * static_cast<std::int64_t>(D->phi / nt::euler_phi(d));
    }

    if (static_cast<std::uint64_t>(M) * D->phi <= kReducedPowersCap) {
        std::size_t phi = D->phi;
        D->reduced_powers.assign(static_cast<std::size_t>(M) * phi, 0);
        std::vector<std::int64_t> row(phi, 0);
        row[0] = 1;
        for (std::uint32_t k = 0; k < M; ++k) {
            std::copy(row.begin(), row.end(), D->reduced_powers.begin() + static_cast<std::ptrdiff_t>(k * phi));
            // multiply by x and reduce the overflow term
            std::int64_t top = row[phi - 1];
            for (std::size_t i = phi - 1; i > 0; --i)
                row[i] = row[i - 1];
            row[0] = 0;
            if (top != 0)
                for (std::size_t j = 0; j < phi; ++j)
                    row[j] = add_checked(row[j], -mul_checked(top, D->cyclotomic[j]));
        }
    }
    return D;
}

} // namespace

const CycloData& cyclo_data(std::uint32_t M)
{
    static std::shared_mutex mutex;
    static std::map<std::uint32_t, std::unique_ptr<CycloData>> cache;
    if (M == 0 || M > kMaxCycloOrder)
        throw DomainError("cyclotomic order must lie in [1, 100000], got " + std::to_string(M));
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(M);
        if (it != cache.end())
            return *it->second;
    }
    auto data = build_data(M);
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.emplace(M, std::move(data));
    return *it->second;
}

CycloElem::CycloElem(std::uint32_t M) : M_(M), coeffs_(cyclo_data(M).phi, 0) {}

CycloElem::CycloElem(std::uint32_t M, std::vector<std::int64_t> coeffs) : M_(M), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != cyclo_data(M).phi)
        throw DomainError("CycloElem needs phi(M) coordinates");
}

CycloElem CycloElem::from_integer(std::uint32_t M, std::int64_t v)
{
    CycloElem r(M);
    r.coeffs_[0] = v;
    return r;
}

CycloElem CycloElem::from_root_power(std::uint32_t M, std::int64_t k)
{
    const CycloData& D = cyclo_data(M);
    std::uint32_t e = mod_exp(k, M);
    if (!D.reduced_powers.empty()) {
        auto first = D.reduced_powers.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(e) * D.phi);
        return CycloElem(M, std::vector<std::int64_t>(first, first + D.phi));
    }
    std::vector<std::int64_t> a(e + 1, 0);
    a[e] = 1;
    return CycloElem(M, reduce_mod_phi(std::move(a), D));
}

CycloElem CycloElem::from_group_ring(std::uint32_t M, const std::vector<std::int64_t>& terms)
{
    const CycloData& D = cyclo_data(M);
    if (terms.size() > M)
        throw DomainError("group ring vector longer than M");
    if (!D.reduced_powers.empty()) {
        std::vector<std::int64_t> out(D.phi, 0);
        for (std::size_t k = 0; k < terms.size(); ++k) {
            if (terms[k] == 0)
                continue;
            const std::int64_t* row = D.reduced_powers.data() + k * D.phi;
            for (std::size_t j = 0; j < D.phi; ++j)
                if (row[j] != 0)
                    out[j] = add_checked(out[j], mul_checked(terms[k], row[j]));
        }
        return CycloElem(M, std::move(out));
    }
    return CycloElem(M, reduce_mod_phi(terms, D));
}

bool CycloElem::is_zero() const
{
    for (auto c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

CycloElem CycloElem::operator-() const
{
    CycloElem r(*this);
    for (auto& c : r.coeffs_)
        c = add_checked(0, -c);
    return r;
}

namespace {

void require_same_order(const CycloElem& a, const CycloElem& b)
{
    if (a.M() != b.M())
        throw DomainError("cyclotomic elements of different orders; embed first");
}

} // namespace

CycloElem operator+(const CycloElem& a, const CycloElem& b)
{
    require_same_order(a, b);
    CycloElem r(a);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = add_checked(r.coeffs_[i], b.coeffs_[i]);
    return r;
}

CycloElem operator-(const CycloElem& a, const CycloElem& b)
{
    return a + (-b);
}

CycloElem operator*(const CycloElem& a, const CycloElem& b)
{
    require_same_order(a, b);
    const CycloData& D = cyclo_data(a.M_);
    std::vector<std::int64_t> prod(2 * D.phi - 1, 0);
    for (std::size_t i = 0; i < D.phi; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < D.phi; ++j)
            if (b.coeffs_[j] != 0)
                prod[i + j] = add_checked(prod[i + j], mul_checked(a.coeffs_[i], b.coeffs_[j]));
    }
    return CycloElem(a.M_, reduce_mod_phi(std::move(prod), D));
}

CycloElem operator*(std::int64_t c, const CycloElem& a)
{
    CycloElem r(a);
    for (auto& x : r.coeffs_)
        x = mul_checked(c, x);
    return r;
}

CycloElem CycloElem::galois_apply(std::int64_t j) const
{
    std::uint32_t jm = mod_exp(j, M_);
    if (std::gcd<std::uint64_t>(jm, M_) != 1)
        throw DomainError("galois_apply: j=" + std::to_string(j) + " is not a unit mod " + std::to_string(M_));
    std::vector<std::int64_t> terms(M_, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) {
            std::size_t e = static_cast<std::size_t>(static_cast<std::uint64_t>(i) * jm % M_);
            terms[e] = add_checked(terms[e], coeffs_[i]);
        }
    return from_group_ring(M_, terms);
}

BigInt CycloElem::trace() const
{
    const CycloData& D = cyclo_data(M_);
    BigInt t = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            t += BigInt(static_cast<long>(coeffs_[i])) * static_cast<long>(D.root_trace[i]);
    return t;
}

CycloElem CycloElem::embed(std::uint32_t M_big) const
{
    if (M_big == 0 || M_big % M_ != 0)
        throw DomainError("embed: target order must be a multiple of " + std::to_string(M_));
    std::uint32_t scale = M_big / M_;
    std::vector<std::int64_t> terms(M_big, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        terms[i * scale] = coeffs_[i];
    return from_group_ring(M_big, terms);
}

nlohmann::json CycloElem::to_json() const
{
    return {{"M", M_}, {"coeffs", coeffs_}};
}

BigRat average_galois_norm(const CycloElem& alpha)
{
    BigRat r((alpha * alpha.conj()).trace(), BigInt(static_cast<unsigned long>(cyclo_data(alpha.M()).phi)));
    r.canonicalize();
    return r;
}

std::optional<CycloElem> divide_by_integer(const CycloElem& alpha, std::int64_t d)
{
    if (d < 1)
        throw DomainError("divide_by_integer: d must be positive");
    std::vector<std::int64_t> out(alpha.coeffs());
    for (auto& c : out) {
        if (c % d != 0)
            return std::nullopt;
        c /= d;
    }
    return CycloElem(alpha.M(), std::move(out));
}

GroupRingAccumulator::GroupRingAccumulator(std::uint32_t M) : M_(M), terms_(M, 0)
{
    cyclo_data(M);
}

void GroupRingAccumulator::add(std::int64_t exponent, std::int64_t coeff)
{
    auto& t = terms_[mod_exp(exponent, M_)];
    t = add_checked(t, coeff);
}

void GroupRingAccumulator::clear()
{
    std::fill(terms_.begin(), terms_.end(), 0);
}

bool GroupRingAccumulator::vanishes() const
{
    const CycloData& D = cyclo_data(M_);
    scratch_ = terms_;
    std::vector<std::int64_t> next(M_);
    for (auto p : D.prime_divisors) {
        std::uint32_t s = M_ / p;
        for (std::uint32_t k = 0; k < M_; ++k)
            next[k] = add_checked(scratch_[k], -scratch_[k >= s ? k - s : k + M_ - s]);
        scratch_.swap(next);
    }
    for (auto c : scratch_)
        if (c != 0)
            return false;
    return true;
}

Report verify_cycloring(const std::vector<std::uint32_t>& orders, int samples, std::uint64_t seed)
{
    Report r("cyclotomic ring");
    std::mt19937_64 rng(seed);
    for (auto M : orders) {
        const std::string tag = "M=" + std::to_string(M) + " ";
        std::uniform_int_distribution<std::int64_t> exp_dist(0, M - 1);
        std::uniform_int_distribution<std::int64_t> coef_dist(-3, 3);
        auto random_elem = [&]() {
            GroupRingAccumulator acc(M);
            for (int t = 0; t < 4; ++t)
                acc.add(exp_dist(rng), coef_dist(rng));
            return acc;
        };
        std::vector<std::int64_t> units{1};
        for (std::int64_t j = 2; j < static_cast<std::int64_t>(M); ++j)
            if (std::gcd<std::int64_t>(j, M) == 1)
                units.push_back(j);
        std::uniform_int_distribution<std::size_t> unit_dist(0, units.size() - 1);
        bool ring = true, galois = true, selfconj = true, burnside = true, zero_test = true;
        for (int s = 0; s < samples; ++s) {
            auto ga = random_elem(), gb = random_elem(), gc = random_elem();
            CycloElem a = ga.reduce(), b = gb.reduce(), c = gc.reduce();
            ring = ring && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a;
            zero_test = zero_test && ga.vanishes() == a.is_zero();
            std::int64_t j = units[unit_dist(rng)], k = units[unit_dist(rng)];
            galois = galois && a.galois_apply(j).galois_apply(k) == a.galois_apply(j * k % M) &&
                     (a * b).galois_apply(j) == a.galois_apply(j) * b.galois_apply(j);
            CycloElem n = a * a.conj();
            selfconj = selfconj && n.conj() == n;
            if (!a.is_zero())
                burnside = burnside && average_galois_norm(a) >= 1;
        }
        r.expect(ring, tag + "ring axioms");
        r.expect(zero_test, tag + "group-ring zero test agrees with reduction");
        r.expect(galois, tag + "sigma_j sigma_k = sigma_jk and multiplicativity");
        r.expect(selfconj, tag + "alpha conj(alpha) self-conjugate");
        r.expect(burnside, tag + "average Galois norm >= 1");
    }
    return r;
}

} // namespace glqv
