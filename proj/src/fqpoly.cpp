#include "glqv/fqpoly.hpp"

#include <algorithm>
#include <random>

#include "glqv/numtheory.hpp"
#include "glqv/series.hpp"

namespace glqv {

namespace poly {

void trim(Coeffs& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int degree(const Coeffs& a)
{
    return static_cast<int>(a.size()) - 1;
}

bool is_one(const Coeffs& a)
{
    return a.size() == 1 && a[0] == 1;
}

Coeffs add(const FqCtx& F, const Coeffs& a, const Coeffs& b)
{
    Coeffs c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(c);
    return c;
}

Coeffs sub(const FqCtx& F, const Coeffs& a, const Coeffs& b)
{
    Coeffs c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(c);
    return c;
}

Coeffs mul(const FqCtx& F, const Coeffs& a, const Coeffs& b)
{
    if (a.empty() || b.empty())
        return {};
    Coeffs c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    trim(c);
    return c;
}

Coeffs scale(const FqCtx& F, const Coeffs& a, Elem c)
{
    Coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = F.mul(a[i], c);
    trim(r);
    return r;
}

void divmod(const FqCtx& F, const Coeffs& a, const Coeffs& b, Coeffs& quot, Coeffs& rem)
{
    if (b.empty())
        throw DomainError("polynomial division by zero");
    rem = a;
    trim(rem);
    int db = degree(b);
    if (degree(rem) < db) {
        quot.clear();
        return;
    }
    quot.assign(rem.size() - b.size() + 1, 0);
    Elem lead_inv = F.inv(b.back());
    for (int i = degree(rem); i >= db; --i) {
        Elem c = rem[i];
        if (c == 0)
            continue;
        if (lead_inv != 1)
            c = F.mul(c, lead_inv);
        quot[i - db] = c;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b[j]));
    }
    trim(rem);
    trim(quot);
}

Coeffs mod(const FqCtx& F, const Coeffs& a, const Coeffs& b)
{
    Coeffs quot, rem;
    divmod(F, a, b, quot, rem);
    return rem;
}

Coeffs divexact(const FqCtx& F, const Coeffs& a, const Coeffs& b)
{
    Coeffs quot, rem;
    divmod(F, a, b, quot, rem);
    if (!rem.empty())
        throw ConsistencyError("polynomial division is not exact");
    return quot;
}

Coeffs monic(const FqCtx& F, const Coeffs& a)
{
    if (a.empty() || a.back() == 1)
        return a;
    return scale(F, a, F.inv(a.back()));
}

Coeffs gcd(const FqCtx& F, Coeffs a, Coeffs b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

Coeffs derivative(const FqCtx& F, const Coeffs& a)
{
    if (a.size() <= 1)
        return {};
    Coeffs d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        d[i - 1] = F.mul(a[i], F.from_int(static_cast<std::int64_t>(i % F.p())));
    trim(d);
    return d;
}

Coeffs mulmod(const FqCtx& F, const Coeffs& a, const Coeffs& b, const Coeffs& m)
{
    return mod(F, mul(F, a, b), m);
}

Coeffs powmod(const FqCtx& F, Coeffs base, const BigInt& e, const Coeffs& m)
{
    if (e < 0)
        throw DomainError("negative exponent in powmod");
    Coeffs result = mod(F, Coeffs{1}, m);
    base = mod(F, base, m);
    std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(F, result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = mulmod(F, result, base, m);
    }
    return result;
}

Coeffs pow(const FqCtx& F, const Coeffs& a, unsigned e)
{
    Coeffs result{1};
    Coeffs base = a;
    while (e) {
        if (e & 1)
            result = mul(F, result, base);
        e >>= 1;
        if (e)
            base = mul(F, base, base);
    }
    return result;
}

bool is_irreducible(const FqCtx& F, const Coeffs& f_in)
{
    Coeffs f = f_in;
    trim(f);
    int d = degree(f);
    if (d < 1)
        return false;
    if (d == 1)
        return true;
    f = monic(F, f);
    BigInt q(F.q());
    // frob[i] = x^(q^i) mod f
    std::vector<Coeffs> frob(d + 1);
    frob[0] = mod(F, Coeffs{0, 1}, f);
    for (int i = 1; i <= d; ++i)
        frob[i] = powmod(F, frob[i - 1], q, f);
    if (frob[d] != frob[0])
        return false;
    for (auto r : nt::prime_divisors(static_cast<std::uint64_t>(d))) {
        Coeffs t = sub(F, frob[d / r], Coeffs{0, 1});
        if (!is_one(gcd(F, t, f)))
            return false;
    }
    return true;
}

} // namespace poly

MonicPoly::MonicPoly(std::shared_ptr<const FqCtx> ctx, Coeffs coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs))
{
    if (!ctx_)
        throw DomainError("MonicPoly needs a field");
    if (coeffs_.size() < 2 || coeffs_.back() != 1)
        throw DomainError("MonicPoly must be monic of degree >= 1");
    for (Elem c : coeffs_)
        if (c >= ctx_->q())
            throw DomainError("coefficient outside F_q");
}

BigInt MonicPoly::encoding() const
{
    BigInt e = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        e = e * ctx_->q() + coeffs_[i];
    return e;
}

std::string MonicPoly::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(coeffs_[i]);
    }
    return s + "]";
}

nlohmann::json MonicPoly::to_json() const
{
    return nlohmann::json(coeffs_);
}

std::strong_ordering operator<=>(const MonicPoly& a, const MonicPoly& b)
{
    if (auto c = a.ctx_->q() <=> b.ctx_->q(); c != 0)
        return c;
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0)
        return c;
    for (std::size_t i = a.coeffs_.size(); i-- > 0;)
        if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

MonicPoly operator*(const MonicPoly& a, const MonicPoly& b)
{
    if (a.ctx().q() != b.ctx().q())
        throw DomainError("polynomials over different fields");
    return MonicPoly(a.ctx_ptr(), poly::mul(a.ctx(), a.coeffs(), b.coeffs()));
}

MonicPoly pow(const MonicPoly& a, unsigned e)
{
    if (e == 0)
        throw DomainError("MonicPoly power must be positive");
    return MonicPoly(a.ctx_ptr(), poly::pow(a.ctx(), a.coeffs(), e));
}

BigInt count_irreducibles(std::uint64_t q, int d)
{
    if (d < 1)
        throw DomainError("count_irreducibles: degree must be >= 1");
    BigInt total = 0;
    for (auto e : nt::divisors(static_cast<std::uint64_t>(d))) {
        int mu = nt::moebius(static_cast<std::uint64_t>(d) / e);
        if (mu != 0)
            total += mu * pow_ui(q, e);
    }
    if (!mpz_divisible_ui_p(total.get_mpz_t(), static_cast<unsigned long>(d)))
        throw ConsistencyError("necklace count not divisible by degree");
    total /= d;
    if (d == 1)
        total -= 1;
    return total;
}

std::vector<MonicPoly> enumerate_irreducibles(const std::shared_ptr<const FqCtx>& ctx, int d, std::uint64_t scan_cap)
{
    if (d < 1)
        throw DomainError("enumerate_irreducibles: degree must be >= 1");
    std::uint64_t cap = enumeration_cap(scan_cap ? scan_cap : kDefaultPolyScanCap);
    const FqCtx& F = *ctx;
    BigInt scans = pow_ui(F.q(), static_cast<unsigned long>(d));
    if (scans > BigInt(std::to_string(cap)))
        throw ResourceError("enumerate_irreducibles: q^" + std::to_string(d) + " = " + glqv::to_string(scans) +
                            " candidates exceeds the scan cap " + std::to_string(cap));
    std::uint64_t total = scans.get_ui();
    std::vector<MonicPoly> out;
    Coeffs c(static_cast<std::size_t>(d) + 1, 0);
    c[d] = 1;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t x = code;
        for (int i = 0; i < d; ++i) {
            c[i] = static_cast<Elem>(x % F.q());
            x /= F.q();
        }
        if (c[0] != 0 && poly::is_irreducible(F, c))
            out.emplace_back(ctx, c);
    }
    if (BigInt(static_cast<unsigned long>(out.size())) != count_irreducibles(F, d))
        throw ConsistencyError("irreducible enumeration disagrees with the Moebius count");
    return out;
}

namespace {

using Factors = std::vector<std::pair<Coeffs, int>>;

// Yun-style squarefree split valid in characteristic p: pairs (g_i, i) with
// f = prod g_i^i, each g_i squarefree.
void squarefree(const FqCtx& F, const Coeffs& f, int scale, Factors& out)
{
    if (poly::degree(f) < 1)
        return;
    Coeffs c = poly::gcd(F, f, poly::derivative(F, f));
    Coeffs w = poly::divexact(F, f, c);
    int i = 1;
    while (poly::degree(w) > 0) {
        Coeffs y = poly::gcd(F, w, c);
        Coeffs z = poly::divexact(F, w, y);
        if (poly::degree(z) > 0)
            out.emplace_back(z, i * scale);
        ++i;
        w = y;
        c = poly::divexact(F, c, y);
    }
    if (poly::degree(c) > 0) {
        // c is a polynomial in x^p: take the p-th root coefficientwise.
        Coeffs root(static_cast<std::size_t>(poly::degree(c)) / F.p() + 1, 0);
        for (std::size_t j = 0; j < root.size(); ++j)
            root[j] = F.pth_root(c[j * F.p()]);
        squarefree(F, root, scale * static_cast<int>(F.p()), out);
    }
}

// Distinct-degree split of a squarefree monic g: pairs (product of all
// degree-d factors, d).
Factors distinct_degree(const FqCtx& F, Coeffs g)
{
    Factors out;
    BigInt q(F.q());
    Coeffs x{0, 1};
    Coeffs h = poly::mod(F, x, g);
    for (int d = 1; 2 * d <= poly::degree(g); ++d) {
        h = poly::powmod(F, h, q, g);
        Coeffs t = poly::gcd(F, g, poly::sub(F, h, x));
        if (poly::degree(t) > 0) {
            out.emplace_back(t, d);
            g = poly::divexact(F, g, t);
            h = poly::mod(F, h, g);
        }
    }
    if (poly::degree(g) > 0)
        out.emplace_back(g, poly::degree(g));
    return out;
}

void equal_degree(const FqCtx& F, const Coeffs& g, int d, std::mt19937_64& rng, std::vector<Coeffs>& out)
{
    int n = poly::degree(g);
    if (n == d) {
        out.push_back(g);
        return;
    }
    std::uniform_int_distribution<Elem> coeff(0, F.q() - 1);
    BigInt half;
    if (F.p() != 2)
        half = (pow_ui(F.q(), static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        Coeffs a(static_cast<std::size_t>(n));
        for (auto& c : a)
            c = coeff(rng);
        poly::trim(a);
        if (poly::degree(a) < 1)
            continue;
        Coeffs b;
        if (F.p() != 2) {
            b = poly::sub(F, poly::powmod(F, a, half, g), Coeffs{1});
        } else {
            // Absolute trace to F_2: a + a^2 + ... + a^(2^(k d - 1)).
            Coeffs t = a;
            b = a;
            for (std::uint32_t i = 1; i < F.k() * static_cast<std::uint32_t>(d); ++i) {
                t = poly::mulmod(F, t, t, g);
                b = poly::add(F, b, t);
            }
        }
        Coeffs u = poly::gcd(F, g, b);
        int du = poly::degree(u);
        if (du > 0 && du < n) {
            equal_degree(F, u, d, rng, out);
            equal_degree(F, poly::divexact(F, g, u), d, rng, out);
            return;
        }
    }
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v)
{
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

std::vector<PolyFactor> factor_poly(const MonicPoly& f)
{
    const FqCtx& F = f.ctx();
    std::uint64_t seed = fnv1a(0xcbf29ce484222325ULL, F.q());
    for (Elem c : f.coeffs())
        seed = fnv1a(seed, c);
    std::mt19937_64 rng(seed);

    Factors sqf;
    squarefree(F, f.coeffs(), 1, sqf);
    std::vector<PolyFactor> out;
    for (const auto& [g, mult] : sqf)
        for (const auto& [h, d] : distinct_degree(F, g)) {
            std::vector<Coeffs> pieces;
            equal_degree(F, h, d, rng, pieces);
            for (auto& piece : pieces)
                out.push_back({MonicPoly(f.ctx_ptr(), std::move(piece)), mult});
        }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return a.factor < b.factor; });
    // One entry per irreducible, whatever layer it came from.
    std::vector<PolyFactor> merged;
    for (auto& pf : out) {
        if (!merged.empty() && merged.back().factor == pf.factor)
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(std::move(pf));
    }
    return merged;
}

int factor_count(const MonicPoly& f)
{
    int total = 0;
    for (const auto& pf : factor_poly(f))
        total += pf.multiplicity;
    return total;
}

BigInt count_repeated_factor_polys(std::uint64_t q, int n, int m)
{
    if (n < 1 || m < 1)
        throw DomainError("count_repeated_factor_polys: need n, m >= 1");
    if (!nt::prime_power(q))
        throw DomainError(std::to_string(q) + " is not a prime power");
    auto count = [q](int d) { return count_irreducibles(q, d); };
    auto all = series::graded_product<BigInt>(n, count, [](int, int max_size) {
        return series::Series<BigInt>(static_cast<std::size_t>(max_size) + 1, BigInt(1));
    });
    auto clean = series::graded_product<BigInt>(n, count, [m](int d, int max_size) {
        if (d < m)
            return series::Series<BigInt>(static_cast<std::size_t>(max_size) + 1, BigInt(1));
        return series::Series<BigInt>{BigInt(1), BigInt(1)};
    });
    BigInt total = pow_ui(q, n) - pow_ui(q, n - 1);
    if (all[n] != total)
        throw ConsistencyError("monic polynomial count with nonzero constant term is not q^n - q^(n-1)");
    return all[n] - clean[n];
}

Report verify_repeated_factor_bound(std::uint64_t q, int n_max)
{
    Report r("repeated-factor polynomial counts, q=" + std::to_string(q));
    for (int n = 1; n <= n_max; ++n)
        for (int m = 1; m <= n; ++m) {
            BigInt c = count_repeated_factor_polys(q, n, m);
            BigInt bound = 2 * pow_ui(q, n - m);
            r.expect(c < bound, "n=" + std::to_string(n) + ",m=" + std::to_string(m),
                     glqv::to_string(c) + " < " + glqv::to_string(bound));
        }
    return r;
}

Report verify_irreducible_counts(std::uint64_t q, int d_max)
{
    Report r("irreducible counts, q=" + std::to_string(q));
    for (int D = 1; D <= d_max; ++D) {
        BigInt sum = 0;
        for (auto d : nt::divisors(static_cast<std::uint64_t>(D))) {
            BigInt with_x = count_irreducibles(q, static_cast<int>(d)) + (d == 1 ? 1 : 0);
            sum += BigInt(static_cast<unsigned long>(d)) * with_x;
        }
        BigInt qD = pow_ui(q, D);
        r.expect(sum == qD, "necklace D=" + std::to_string(D), glqv::to_string(sum) + " vs " + glqv::to_string(qD));
        BigInt N = count_irreducibles(q, D);
        r.expect(N * D < qD, "N_m < q^m/m, m=" + std::to_string(D), glqv::to_string(N));
    }
    return r;
}

Report verify_field(const FqCtx& F, std::uint64_t seed)
{
    Report r("field axioms, q=" + std::to_string(F.q()));
    r.expect(poly::is_irreducible(*FqCtx::make(F.p()), F.modulus()) || F.k() == 1, "modulus irreducible");
    const std::uint32_t q = F.q();
    auto check_triple = [&](Elem a, Elem b, Elem c) {
        bool ok = F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)) && F.add(F.add(a, b), c) == F.add(a, F.add(b, c)) &&
                  F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c));
        if (!ok)
            r.record("triple " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c), Verdict::fail);
        return ok;
    };
    std::size_t bad = 0;
    for (Elem a = 0; a < q; ++a) {
        if (F.add(a, 0) != a || F.mul(a, 1) != a || F.add(a, F.neg(a)) != 0)
            ++bad;
        if (a != 0 && F.mul(a, F.inv(a)) != 1)
            ++bad;
    }
    r.expect(bad == 0, "identities and inverses");
    if (q <= 16) {
        bool ok = true;
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                ok = ok && F.mul(a, b) == F.mul(b, a) && F.add(a, b) == F.add(b, a);
                for (Elem c = 0; c < q; ++c)
                    ok = check_triple(a, b, c) && ok;
            }
        r.expect(ok, "full tables");
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Elem> pick(0, q - 1);
        bool ok = true;
        for (int i = 0; i < 20000; ++i)
            ok = check_triple(pick(rng), pick(rng), pick(rng)) && ok;
        r.expect(ok, "sampled triples");
    }
    Elem g = F.primitive_element();
    bool generator = true;
    for (auto pr : nt::prime_divisors(q - 1 > 1 ? q - 1 : 1))
        if (q > 2 && F.pow(g, (q - 1) / pr) == 1)
            generator = false;
    r.expect(generator, "primitive element generates");
    return r;
}

Report verify_factorization(const std::shared_ptr<const FqCtx>& ctx, int max_degree, int samples, std::uint64_t seed)
{
    const FqCtx& F = *ctx;
    Report r("factorization, q=" + std::to_string(F.q()));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> coeff(0, F.q() - 1);
    std::uniform_int_distribution<int> deg(1, max_degree);
    for (int s = 0; s < samples; ++s) {
        int d = deg(rng);
        Coeffs c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c)
            x = coeff(rng);
        c[d] = 1;
        // Force repeated factors now and then.
        MonicPoly f(ctx, c);
        if (s % 3 == 0 && 2 * d <= max_degree)
            f = f * f;
        auto factors = factor_poly(f);
        Coeffs prod{1};
        bool irreducible = true;
        for (const auto& pf : factors) {
            prod = poly::mul(F, prod, poly::pow(F, pf.factor.coeffs(), static_cast<unsigned>(pf.multiplicity)));
            irreducible = irreducible && poly::is_irreducible(F, pf.factor.coeffs());
        }
        r.expect(prod == f.coeffs() && irreducible, "sample " + std::to_string(s), f.to_string());
    }
    return r;
}

} // namespace glqv
