#include "glqv/glnq.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "glqv/numtheory.hpp"
#include "glqv/series.hpp"
#include "glqv/sqrt5.hpp"

namespace glqv {

namespace {

std::string nq_tag(int n, std::uint64_t q)
{
    return "n=" + std::to_string(n) + ",q=" + std::to_string(q);
}

std::shared_ptr<const FqCtx> field(std::uint64_t q)
{
    return FqCtx::make(q);
}

} // namespace

NuMap::NuMap(std::shared_ptr<const FqCtx> ctx, std::vector<NuEntry> entries, bool trusted)
    : ctx_(std::move(ctx)), entries_(std::move(entries))
{
    if (!trusted) {
        std::sort(entries_.begin(), entries_.end(),
                  [](const NuEntry& a, const NuEntry& b) { return a.poly < b.poly; });
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& e = entries_[i];
            if (e.poly.ctx().q() != ctx_->q())
                throw DomainError("nu-map entry over a different field");
            if (e.lambda.empty())
                throw DomainError("nu-map entries need nonempty partitions");
            if (!e.poly.nonzero_constant())
                throw DomainError("nu-map polynomial " + e.poly.to_string() + " has zero constant term");
            if (!poly::is_irreducible(*ctx_, e.poly.coeffs()))
                throw DomainError("nu-map polynomial " + e.poly.to_string() + " is not irreducible");
            if (i > 0 && entries_[i - 1].poly == e.poly)
                throw DomainError("nu-map polynomial " + e.poly.to_string() + " repeated");
        }
    }
    for (const auto& e : entries_)
        degree_ += e.poly.degree() * e.lambda.size();
}

nlohmann::json NuMap::to_json() const
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries_)
        out.push_back({{"poly", e.poly.to_json()}, {"partition", e.lambda.parts()}});
    return out;
}

std::string NuMap::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ", ";
        s += entries_[i].poly.to_string() + "->" + entries_[i].lambda.to_string();
    }
    return s + "}";
}

const std::vector<MonicPoly>& irreducible_catalog(const std::shared_ptr<const FqCtx>& ctx, int d)
{
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<std::vector<MonicPoly>>> cache;
    auto key = std::make_pair(ctx->q(), d);
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    auto list = std::make_unique<std::vector<MonicPoly>>(enumerate_irreducibles(ctx, d));
    std::lock_guard lock(mutex);
    return *cache.emplace(key, std::move(list)).first->second;
}

BigInt group_order(int n, std::uint64_t q)
{
    if (n < 1)
        throw DomainError("group_order: n must be >= 1");
    BigInt qn = pow_ui(q, n);
    BigInt a = 1;
    for (int i = 0; i < n; ++i)
        a *= qn - pow_ui(q, i);
    BigInt b = pow_ui(q, static_cast<unsigned long>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        b *= pow_ui(q, i) - 1;
    if (a != b)
        throw ConsistencyError("the two forms of |GL(n,q)| disagree");
    return a;
}

BigInt count_numaps(int n, std::uint64_t q)
{
    if (n < 0)
        throw DomainError("count_numaps: n must be >= 0");
    if (!nt::prime_power(q))
        throw DomainError(std::to_string(q) + " is not a prime power");
    auto p = partition_numbers(n);
    auto gf = series::graded_product<BigInt>(
        n, [q](int d) { return count_irreducibles(q, d); },
        [&p](int, int max_size) { return series::Series<BigInt>(p.begin(), p.begin() + max_size + 1); });
    return gf[static_cast<std::size_t>(n)];
}

void for_each_numap(int n, const std::shared_ptr<const FqCtx>& ctx, const std::function<void(const NuMap&)>& visit,
                    std::uint64_t cap)
{
    if (n < 1)
        throw DomainError("for_each_numap: n must be >= 1");
    std::uint64_t limit = enumeration_cap(cap ? cap : kDefaultNuMapCap);
    BigInt qn = pow_ui(ctx->q(), n);
    if (qn > BigInt(std::to_string(limit)))
        throw ResourceError("nu-map enumeration for " + nq_tag(n, ctx->q()) + " exceeds the cap q^n <= " +
                            std::to_string(limit) + "; use sampling mode");
    std::vector<const MonicPoly*> polys;
    for (int d = 1; d <= n; ++d)
        for (const auto& f : irreducible_catalog(ctx, d))
            polys.push_back(&f);
    std::vector<std::vector<Partition>> parts(static_cast<std::size_t>(n) + 1);
    for (int s = 1; s <= n; ++s)
        parts[s] = enumerate_partitions(s);

    std::vector<NuEntry> stack;
    std::function<void(std::size_t, int)> dfs = [&](std::size_t start, int remaining) {
        if (remaining == 0) {
            visit(NuMap(ctx, stack, true));
            return;
        }
        for (std::size_t i = start; i < polys.size(); ++i) {
            int d = polys[i]->degree();
            if (d > remaining)
                break;
            for (int s = 1; s * d <= remaining; ++s)
                for (const auto& lambda : parts[s]) {
                    stack.push_back({*polys[i], lambda});
                    dfs(i + 1, remaining - s * d);
                    stack.pop_back();
                }
        }
    };
    dfs(0, n);
}

std::vector<NuMap> enumerate_numaps(int n, const std::shared_ptr<const FqCtx>& ctx, std::uint64_t cap)
{
    std::vector<NuMap> out;
    for_each_numap(n, ctx, [&out](const NuMap& nu) { out.push_back(nu); }, cap);
    return out;
}

BigInt centralizer_factor(const Partition& lambda, const BigInt& Q)
{
    long exponent = lambda.size() + 2 * n_stat(lambda);
    BigInt prod = 1;
    for (const auto& [part, mult] : lambda.multiplicities()) {
        exponent -= static_cast<long>(mult) * (mult + 1) / 2;
        BigInt Qk = 1;
        for (int k = 1; k <= mult; ++k) {
            Qk *= Q;
            prod *= Qk - 1;
        }
    }
    if (exponent < 0)
        throw ConsistencyError("negative exponent in centralizer formula");
    return prod * pow(Q, static_cast<unsigned long>(exponent));
}

ClassData class_data(const NuMap& nu)
{
    const FqCtx& F = nu.ctx();
    int n = nu.degree();
    BigInt G = group_order(n, F.q());
    BigInt cent = 1;
    Coeffs cp{1};
    int fact = 0;
    for (const auto& e : nu.entries()) {
        cent *= centralizer_factor(e.lambda, pow_ui(F.q(), e.poly.degree()));
        cp = poly::mul(F, cp, poly::pow(F, e.poly.coeffs(), static_cast<unsigned>(e.lambda.size())));
        fact += e.lambda.size();
    }
    if (!mpz_divisible_p(G.get_mpz_t(), cent.get_mpz_t()))
        throw ConsistencyError("centralizer order does not divide |G| for " + nu.to_string());
    BigInt size = G / cent;
    return ClassData{nu, cent, size, MonicPoly(nu.ctx_ptr(), std::move(cp)), fact};
}

int deficiency(const NuMap& nu)
{
    int best = 0;
    for (const auto& e : nu.entries())
        best = std::max(best, e.poly.degree() * (e.lambda.size() - 1));
    return best;
}

CharData char_degree(const NuMap& nu)
{
    const std::uint64_t q = nu.ctx().q();
    int n = nu.degree();
    long N = 0;
    BigInt den = 1;
    for (const auto& e : nu.entries()) {
        N += e.poly.degree() * n_stat(e.lambda);
        for (int h : hooks(e.lambda))
            den *= pow_ui(q, static_cast<unsigned long>(h) * e.poly.degree()) - 1;
    }
    if (N < 0)
        throw ConsistencyError("negative q-exponent");
    BigInt num = pow_ui(q, static_cast<unsigned long>(N));
    for (int i = 1; i <= n; ++i)
        num *= pow_ui(q, i) - 1;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw ConsistencyError("degree formula division not exact for " + nu.to_string());
    BigInt d = num / den;
    BigInt G = group_order(n, q);
    if (d < 1 || !mpz_divisible_p(G.get_mpz_t(), d.get_mpz_t()))
        throw ConsistencyError("character degree does not divide |G| for " + nu.to_string());
    return CharData{nu, d, N, deficiency(nu)};
}

BigInt sum_degree_squares(int n, std::uint64_t q)
{
    BigInt sum = 0;
    for_each_numap(n, field(q), [&sum](const NuMap& nu) {
        BigInt d = char_degree(nu).degree;
        sum += d * d;
    });
    return sum;
}

Report verify_degree_formula(int n, std::uint64_t q)
{
    Report r("degree formula " + nq_tag(n, q));
    BigInt G = group_order(n, q);
    BigInt sum = 0;
    std::uint64_t count = 0;
    bool formula_ok = true;
    std::string first_bad;
    for_each_numap(n, field(q), [&](const NuMap& nu) {
        ++count;
        try {
            BigInt d = char_degree(nu).degree;
            sum += d * d;
        } catch (const ConsistencyError& e) {
            if (formula_ok)
                first_bad = e.what();
            formula_ok = false;
        }
    });
    r.expect(formula_ok, "exact division and d | |G|", first_bad);
    r.expect(sum == G, "sum of squared degrees = |G|",
             "sum " + glqv::to_string(sum) + " over " + std::to_string(count) + " characters, |G| = " +
                 glqv::to_string(G));
    return r;
}

Report verify_class_equation(int n, std::uint64_t q)
{
    Report r("class equation " + nq_tag(n, q));
    BigInt G = group_order(n, q);
    BigInt sum = 0;
    std::uint64_t count = 0;
    bool shape_ok = true, fact_ok = true;
    for_each_numap(n, field(q), [&](const NuMap& nu) {
        ++count;
        ClassData c = class_data(nu);
        sum += c.class_size;
        shape_ok = shape_ok && c.char_poly.degree() == n && c.char_poly.nonzero_constant() &&
                   c.class_size * c.centralizer_order == G;
        fact_ok = fact_ok && factor_count(c.char_poly) == c.fact;
    });
    r.expect(sum == G, "sum of class sizes = |G|", glqv::to_string(sum) + " vs " + glqv::to_string(G));
    r.expect(shape_ok, "characteristic polynomial degree n, nonzero constant term, size * centralizer = |G|");
    r.expect(fact_ok, "Fact(char poly) from factorization = sum |lambda(f)|");
    BigInt k = count_numaps(n, q);
    r.expect(k == count, "enumerated count = DP count", std::to_string(count) + " vs " + glqv::to_string(k));
    return r;
}

Report verify_class_count_bounds(int n_max, const std::vector<std::uint64_t>& qs)
{
    Report r("class-count bounds");
    for (auto q : qs)
        for (int n = 1; n <= n_max; ++n) {
            BigInt k = count_numaps(n, q);
            BigInt qn = pow_ui(q, n);
            r.expect(2 * k >= qn && k <= qn, nq_tag(n, q), glqv::to_string(k));
        }
    return r;
}

BigInt count_high_deficiency(int n, std::uint64_t q, int N)
{
    if (N < 1)
        throw DomainError("count_high_deficiency: N must be positive");
    auto p = partition_numbers(n);
    auto count = [q](int d) { return count_irreducibles(q, d); };
    auto all = series::graded_product<BigInt>(n, count, [&p](int, int max_size) {
        return series::Series<BigInt>(p.begin(), p.begin() + max_size + 1);
    });
    // Complement: every f has deg(f) (|lambda| - 1) < N.
    auto low = series::graded_product<BigInt>(n, count, [&p, N](int d, int max_size) {
        series::Series<BigInt> s(p.begin(), p.begin() + max_size + 1);
        for (int size = 1; size <= max_size; ++size)
            if (d * (size - 1) >= N)
                s[size] = 0;
        return s;
    });
    return all[n] - low[n];
}

bool high_deficiency_bound_holds(const BigInt& count, int n, std::uint64_t q, int N)
{
    QuadSqrt5 gamma = QuadSqrt5::phi() * BigRat(1, 2);
    QuadSqrt5 one(BigInt(1));
    QuadSqrt5 gap = one - gamma;
    QuadSqrt5 rhs = gamma.pow(static_cast<unsigned long>(N)) * BigRat(2 * pow_ui(q, n) * N) / (gap * gap);
    return (rhs - QuadSqrt5(count)).sign() > 0;
}

BigInt count_degree_m_single_box(int n, std::uint64_t q, int m)
{
    if (m < 1)
        throw DomainError("count_degree_m_single_box: m must be positive");
    if (m > n)
        return 0;
    auto p = partition_numbers(n);
    auto count = [q](int d) { return count_irreducibles(q, d); };
    auto all = series::graded_product<BigInt>(n, count, [&p](int, int max_size) {
        return series::Series<BigInt>(p.begin(), p.begin() + max_size + 1);
    });
    auto none = series::graded_product<BigInt>(n, count, [&p, m](int d, int max_size) {
        series::Series<BigInt> s(p.begin(), p.begin() + max_size + 1);
        if (d == m)
            s[1] = 0; // the only partition of 1 is the single box
        return s;
    });
    return all[n] - none[n];
}

Report verify_counting_bounds(int n_max, const std::vector<std::uint64_t>& qs, int N_lo, int N_hi)
{
    Report r("deficiency and degree-m counts");
    for (auto q : qs)
        for (int n = 1; n <= n_max; ++n) {
            BigInt qn = pow_ui(q, n);
            for (int N = N_lo; N <= N_hi; ++N) {
                BigInt c = count_high_deficiency(n, q, N);
                r.expect(high_deficiency_bound_holds(c, n, q, N), "deficiency " + nq_tag(n, q) + ",N=" + std::to_string(N),
                         glqv::to_string(c));
            }
            for (int m = 1; m <= n; ++m) {
                BigInt c = count_degree_m_single_box(n, q, m);
                r.expect(c * m < qn, "degree-m " + nq_tag(n, q) + ",m=" + std::to_string(m), glqv::to_string(c));
            }
        }
    return r;
}

namespace {

std::optional<OrdEll> ord_ell_from(const NuMap& nu, const BigInt& degree, int m, const BigInt& ell, const BigInt& P)
{
    int n = nu.degree();
    if (ell * m <= n || P % ell != 0 || 2 * deficiency(nu) >= m)
        return std::nullopt;
    long e = nt::ord_prime(ell, P);
    long divisible = 0;
    for (const auto& entry : nu.entries())
        if (entry.poly.degree() % m == 0)
            ++divisible;
    OrdEll out;
    out.formula = e * (n / m) - e * divisible;
    out.direct = nt::ord_prime(ell, degree);
    out.via_group = static_cast<long>(nt::ord_prime(ell, group_order(n, nu.ctx().q()))) - e * divisible;
    return out;
}

} // namespace

std::optional<OrdEll> ord_ell_degree(const NuMap& nu, int m, const BigInt& ell)
{
    if (m < 1)
        throw DomainError("ord_ell_degree: m must be positive");
    BigInt P = nt::split_primitive_part(static_cast<std::uint64_t>(m), nu.ctx().q()).p_part;
    return ord_ell_from(nu, char_degree(nu).degree, m, ell, P);
}

Report verify_ord_ell(int n, std::uint64_t q)
{
    Report r("ord_l degree formula " + nq_tag(n, q));
    std::vector<CharData> chars;
    for_each_numap(n, field(q), [&chars](const NuMap& nu) { chars.push_back(char_degree(nu)); });
    for (int m = 1; m <= n; ++m) {
        std::string tag = nq_tag(n, q) + ",m=" + std::to_string(m);
        BigInt ell;
        try {
            ell = nt::smallest_prime_factor_primitive(static_cast<std::uint64_t>(m), q);
        } catch (const nt::NoPrimitivePrime&) {
            r.skip(tag, "P_m(q) = 1");
            continue;
        } catch (const ResourceError& e) {
            r.unverified(tag, e.what());
            continue;
        }
        BigInt P = nt::split_primitive_part(static_cast<std::uint64_t>(m), q).p_part;
        std::size_t qualifying = 0;
        std::string mismatch;
        for (const auto& c : chars) {
            auto res = ord_ell_from(c.nu, c.degree, m, ell, P);
            if (!res)
                continue;
            ++qualifying;
            if (mismatch.empty() && (res->formula != res->direct || res->formula != res->via_group))
                mismatch = c.nu.to_string() + ": formula " + std::to_string(res->formula) + ", direct " +
                           std::to_string(res->direct) + ", via |G| " + std::to_string(res->via_group);
        }
        if (qualifying == 0)
            r.skip(tag, "no qualifying characters (l=" + glqv::to_string(ell) + ")");
        else
            r.expect(mismatch.empty(), tag,
                     mismatch.empty() ? std::to_string(qualifying) + " characters, l=" + glqv::to_string(ell) : mismatch);
    }
    return r;
}

BigRat prob_order_equality(int n, std::uint64_t q, int m, const BigInt& ell)
{
    if (m < 1)
        throw DomainError("prob_order_equality: m must be positive");
    BigInt P = nt::split_primitive_part(static_cast<std::uint64_t>(m), q).p_part;
    if (ell < 2 || P % ell != 0)
        throw DomainError("prob_order_equality: l = " + glqv::to_string(ell) + " does not divide P_m(q) = " +
                          glqv::to_string(P));
    unsigned target = nt::ord_prime(ell, group_order(n, q));
    std::uint64_t good = 0, total = 0;
    for_each_numap(n, field(q), [&](const NuMap& nu) {
        ++total;
        if (nt::ord_prime(ell, char_degree(nu).degree) == target)
            ++good;
    });
    BigRat r(BigInt(std::to_string(good)), BigInt(std::to_string(total)));
    r.canonicalize();
    return r;
}

std::map<int, BigInt> fact_distribution(int n, std::uint64_t q)
{
    std::map<int, BigInt> out;
    for_each_numap(n, field(q), [&out](const NuMap& nu) {
        ClassData c = class_data(nu);
        out[c.fact] += c.class_size;
    });
    return out;
}

BigRat repeated_factor_probability(int n, std::uint64_t q, int m)
{
    if (n < 1 || m < 1)
        throw DomainError("repeated_factor_probability: need n, m >= 1");
    std::vector<std::vector<Partition>> parts(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s)
        parts[s] = enumerate_partitions(s);
    auto weights = [&parts, q](int d, int max_size) {
        BigInt Q = pow_ui(q, d);
        series::Series<BigRat> s(static_cast<std::size_t>(max_size) + 1, BigRat(0));
        s[0] = 1;
        for (int size = 1; size <= max_size; ++size)
            for (const auto& lambda : parts[size])
                s[size] += BigRat(BigInt(1), centralizer_factor(lambda, Q));
        return s;
    };
    auto count = [q](int d) { return count_irreducibles(q, d); };
    auto all = series::graded_product<BigRat>(n, count, weights);
    auto clean = series::graded_product<BigRat>(n, count, [&](int d, int max_size) {
        auto s = weights(d, max_size);
        if (d >= m && s.size() > 2)
            s.resize(2);
        return s;
    });
    if (all[n] != 1)
        throw ConsistencyError("class-size weights do not sum to 1 for " + nq_tag(n, q));
    return 1 - clean[n];
}

BigRat repeated_factor_probability_enumerated(int n, std::uint64_t q, int m)
{
    BigInt hit = 0;
    for_each_numap(n, field(q), [&](const NuMap& nu) {
        for (const auto& e : nu.entries())
            if (e.poly.degree() >= m && e.lambda.size() >= 2) {
                hit += class_data(nu).class_size;
                return;
            }
    });
    BigRat r(hit, group_order(n, q));
    r.canonicalize();
    return r;
}

BigRat log_upper_bound(int n)
{
    if (n < 1)
        throw DomainError("log_upper_bound: n must be positive");
    const double scale = 1e12;
    double up = std::ceil((std::log(static_cast<double>(n)) + 1e-9) * scale);
    BigRat r(BigInt(static_cast<unsigned long>(up)), BigInt(static_cast<unsigned long>(scale)));
    r.canonicalize();
    return r;
}

bool ratio_at_least(const BigInt& d, const BigInt& s, const BigRat& eps)
{
    BigInt g = gcd(d, s);
    return g * eps.get_den() >= eps.get_num() * d;
}

RReport build_R_set(int n, std::uint64_t q, const BigRat& k_factor, const BigRat& eps)
{
    if (n < 2)
        throw DomainError("build_R_set: n must be >= 2");
    if (eps <= 0 || k_factor <= 0)
        throw DomainError("build_R_set: k and eps must be positive");
    RReport out;
    out.n = n;
    out.q = q;
    out.k_factor = k_factor;
    out.eps = eps;
    out.checks = Report("R-set n=" + std::to_string(n) + ",q=" + std::to_string(q));
    Report& r = out.checks;
    BigInt G = group_order(n, q);
    BigRat fact_limit = k_factor * log_upper_bound(n);

    std::vector<NuMap> maps = enumerate_numaps(n, field(q));
    std::vector<BigInt> degrees;
    for (const auto& nu : maps)
        degrees.push_back(char_degree(nu).degree);

    for (const auto& nu : maps) {
        ClassData c = class_data(nu);
        RClass rc{nu, c.class_size, c.fact, false, {}, 0, {}, false};
        const MonicPoly* chosen = nullptr;
        bool repeated_large = false;
        for (const auto& e : nu.entries()) {
            int d = e.poly.degree();
            if (d * d < n)
                continue;
            if (e.lambda.size() >= 2)
                repeated_large = true;
            else if (!chosen || d > chosen->degree())
                chosen = &e.poly;
        }
        if (BigRat(c.fact) > fact_limit)
            rc.exclusion = "Fact(p_g) > k log n";
        else if (repeated_large)
            rc.exclusion = "repeated factor of degree >= sqrt n";
        else if (!chosen)
            rc.exclusion = "no simple factor of degree >= sqrt n";
        else {
            rc.m_g = chosen->degree();
            try {
                rc.ell_g = nt::smallest_prime_factor_primitive(static_cast<std::uint64_t>(rc.m_g), q);
                rc.in_X = true;
            } catch (const nt::NoPrimitivePrime&) {
                rc.exclusion = "P_m(q) = 1";
            } catch (const ResourceError& e) {
                rc.exclusion = "factorization budget exceeded";
                r.unverified("l_g for " + nu.to_string(), e.what());
            }
        }
        if (rc.in_X) {
            rc.m_exceeds_inv_eps = eps * rc.m_g > 1;
            r.expect(rc.ell_g % rc.m_g == 1 % rc.m_g && rc.ell_g > rc.m_g, "l_g = 1 mod m_g, l_g > m_g: " + nu.to_string(),
                     "m_g=" + std::to_string(rc.m_g) + ", l_g=" + glqv::to_string(rc.ell_g));
        }
        out.classes.push_back(std::move(rc));
    }

    BigInt r_weight = 0;
    for (const auto& rc : out.classes) {
        if (!rc.in_X) {
            r_weight += rc.class_size * static_cast<unsigned long>(degrees.size());
            continue;
        }
        unsigned g_ord = nt::ord_prime(rc.ell_g, G);
        unsigned s_ord = nt::ord_prime(rc.ell_g, rc.class_size);
        std::size_t off = 0;
        bool ok = true;
        for (const auto& d : degrees) {
            unsigned d_ord = nt::ord_prime(rc.ell_g, d);
            if (d_ord != g_ord) {
                r_weight += rc.class_size;
                continue;
            }
            ++off;
            BigInt g = gcd(d, rc.class_size);
            BigRat ratio(g, d);
            ratio.canonicalize();
            ok = ok && s_ord < d_ord && nt::ord_prime(rc.ell_g, g) == s_ord && ratio.get_den() % rc.ell_g == 0;
        }
        out.off_r_pairs += off;
        if (off > 0)
            r.expect(ok && s_ord < g_ord, "off-R pairs at " + rc.nu.to_string(),
                     std::to_string(off) + " characters; ord_l(s_g)=" + std::to_string(s_ord) +
                         " < ord_l|G|=" + std::to_string(g_ord));
    }
    out.empty_X = std::none_of(out.classes.begin(), out.classes.end(), [](const RClass& c) { return c.in_X; });
    if (out.empty_X)
        r.note("empty_X", "true");
    out.r_measure = BigRat(r_weight, G * static_cast<unsigned long>(degrees.size()));
    out.r_measure.canonicalize();
    return out;
}

nlohmann::json RReport::to_json() const
{
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& c : classes) {
        nlohmann::json j{{"nu", c.nu.to_json()},
                         {"class_size", glqv::to_string(c.class_size)},
                         {"fact", c.fact},
                         {"in_X", c.in_X}};
        if (c.in_X) {
            j["m_g"] = c.m_g;
            j["ell_g"] = glqv::to_string(c.ell_g);
            j["m_g_exceeds_1_over_eps"] = c.m_exceeds_inv_eps;
        } else {
            j["exclusion"] = c.exclusion;
        }
        cls.push_back(std::move(j));
    }
    return {{"n", n},
            {"q", q},
            {"k", glqv::to_string(k_factor)},
            {"eps", glqv::to_string(eps)},
            {"classes", cls},
            {"r_measure", glqv::to_string(r_measure)},
            {"off_r_pairs", off_r_pairs},
            {"empty_X", empty_X},
            {"checks", checks.to_json()}};
}

PairStats ratio_statistic_exact(int n, std::uint64_t q, const BigRat& eps)
{
    if (eps <= 0)
        throw DomainError("ratio_statistic: eps must be positive");
    std::map<BigInt, std::uint64_t> degree_count;
    std::map<BigInt, BigInt> size_weight;
    std::uint64_t k = 0;
    for_each_numap(n, field(q), [&](const NuMap& nu) {
        ++k;
        ++degree_count[char_degree(nu).degree];
        BigInt s = class_data(nu).class_size;
        size_weight[s] += s;
    });
    BigInt hit = 0;
    for (const auto& [d, cnt] : degree_count)
        for (const auto& [s, w] : size_weight)
            if (ratio_at_least(d, s, eps))
                hit += w * static_cast<unsigned long>(cnt);
    PairStats out;
    out.n = n;
    out.q = q;
    out.eps = eps;
    out.Q = BigRat(hit, group_order(n, q) * static_cast<unsigned long>(k));
    out.Q.canonicalize();
    return out;
}

nlohmann::json PairStats::to_json() const
{
    nlohmann::json j{{"n", n}, {"q", q}, {"eps", glqv::to_string(eps)}, {"Q", glqv::to_string(Q)},
                     {"mode", exact ? "exact" : "sample"}};
    if (!exact) {
        j["samples"] = samples;
        j["seed"] = seed;
        j["hits"] = hits;
    }
    return j;
}

} // namespace glqv
