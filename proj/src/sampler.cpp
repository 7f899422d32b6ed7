#include "glqv/sampler.hpp"

#include <algorithm>
#include <set>

#include <boost/math/distributions/chi_squared.hpp>

#include "glqv/series.hpp"

namespace glqv {

BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng)
{
    if (bound <= 0)
        throw DomainError("uniform_below: bound must be positive");
    std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    std::size_t words = (bits + 63) / 64;
    for (;;) {
        BigInt x = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t r = rng();
            if (w == 0 && bits % 64 != 0)
                r &= (std::uint64_t{1} << (bits % 64)) - 1;
            x <<= 64;
            BigInt chunk;
            mpz_import(chunk.get_mpz_t(), 1, 1, sizeof r, 0, 0, &r);
            x += chunk;
        }
        if (x < bound)
            return x;
    }
}

std::size_t pick_weighted(const std::vector<BigRat>& weights, std::mt19937_64& rng)
{
    BigInt den = 1;
    for (const auto& w : weights) {
        if (w < 0)
            throw DomainError("pick_weighted: negative weight");
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den_mpz_t());
    }
    std::vector<BigInt> scaled;
    BigInt total = 0;
    for (const auto& w : weights) {
        scaled.push_back(w.get_num() * (den / w.get_den()));
        total += scaled.back();
    }
    if (total == 0)
        throw ConsistencyError("pick_weighted: all weights are zero");
    BigInt u = uniform_below(total, rng);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        if (u < scaled[i])
            return i;
        u -= scaled[i];
    }
    throw ConsistencyError("pick_weighted fell off the end");
}

namespace {

BigRat binomial(const BigInt& N, int r)
{
    BigInt b = 1;
    for (int i = 0; i < r; ++i)
        b *= N - i;
    BigInt f = 1;
    for (int i = 2; i <= r; ++i)
        f *= i;
    return BigRat(b / f);
}

} // namespace

NuMapSampler::NuMapSampler(int n, std::shared_ptr<const FqCtx> ctx, SampleMode mode)
    : n_(n), ctx_(std::move(ctx)), mode_(mode)
{
    if (n < 1)
        throw DomainError("sampler: n must be >= 1");
    layers_.resize(static_cast<std::size_t>(n) + 1);
    prefix_.assign(1, std::vector<BigRat>(static_cast<std::size_t>(n) + 1, BigRat(0)));
    prefix_[0][0] = 1;
    for (int d = 1; d <= n; ++d) {
        Layer& L = layers_[d];
        int smax = n / d;
        L.count = count_irreducibles(ctx_->q(), d);
        BigInt Q = pow_ui(ctx_->q(), d);
        L.parts.resize(static_cast<std::size_t>(smax) + 1);
        L.part_weight.resize(static_cast<std::size_t>(smax) + 1);
        std::vector<BigRat> W(static_cast<std::size_t>(smax) + 1, BigRat(0));
        for (int s = 1; s <= smax; ++s) {
            L.parts[s] = enumerate_partitions(s);
            for (const auto& lambda : L.parts[s]) {
                BigRat w = mode == SampleMode::uniform ? BigRat(1) : BigRat(BigInt(1), centralizer_factor(lambda, Q));
                L.part_weight[s].push_back(w);
                W[s] += w;
            }
        }
        // Powers W^r, r <= smax (W has no constant term, so W^r starts at x^r).
        L.w_pow.assign(static_cast<std::size_t>(smax) + 1, std::vector<BigRat>(static_cast<std::size_t>(smax) + 1, BigRat(0)));
        L.w_pow[0][0] = 1;
        for (int r = 1; r <= smax; ++r)
            L.w_pow[r] = series::mul(L.w_pow[r - 1], W, static_cast<std::size_t>(smax));
        L.total.assign(static_cast<std::size_t>(smax) + 1, BigRat(0));
        for (int r = 0; r <= smax; ++r) {
            if (L.count < r)
                break;
            BigRat c = binomial(L.count, r);
            for (int s = 0; s <= smax; ++s)
                L.total[s] += c * L.w_pow[r][s];
        }
        prefix_.push_back(series::mul(prefix_.back(), series::stretch(L.total, static_cast<std::size_t>(d),
                                                                      static_cast<std::size_t>(n)),
                                      static_cast<std::size_t>(n)));
    }
    if (prefix_.back()[n] == 0)
        throw ConsistencyError("sampler: empty support");
}

MonicPoly NuMapSampler::random_irreducible(int d, std::mt19937_64& rng) const
{
    const FqCtx& F = *ctx_;
    std::uniform_int_distribution<Elem> any(0, F.q() - 1);
    std::uniform_int_distribution<Elem> nonzero(1, F.q() - 1);
    Coeffs c(static_cast<std::size_t>(d) + 1);
    for (;;) {
        c[0] = nonzero(rng);
        for (int i = 1; i < d; ++i)
            c[i] = any(rng);
        c[d] = 1;
        if (poly::is_irreducible(F, c))
            return MonicPoly(ctx_, c);
    }
}

NuMap NuMapSampler::sample(std::mt19937_64& rng) const
{
    std::vector<NuEntry> entries;
    int remaining = n_;
    for (int d = n_; d >= 1; --d) {
        const Layer& L = layers_[d];
        std::vector<BigRat> w;
        for (int s = 0; s * d <= remaining; ++s)
            w.push_back(L.total[s] * prefix_[d - 1][remaining - s * d]);
        int s = static_cast<int>(pick_weighted(w, rng));
        remaining -= s * d;
        if (s == 0)
            continue;

        std::vector<BigRat> wr(static_cast<std::size_t>(s) + 1, BigRat(0));
        for (int r = 1; r <= s; ++r)
            if (L.count >= r)
                wr[r] = binomial(L.count, r) * L.w_pow[r][s];
        int r = static_cast<int>(pick_weighted(wr, rng));

        std::vector<Partition> seq;
        int left = s;
        for (int slot = r; slot >= 1; --slot) {
            std::vector<BigRat> wl;
            std::vector<const Partition*> options;
            for (int j = 1; j <= left - (slot - 1); ++j) {
                const BigRat& rest = L.w_pow[slot - 1][left - j];
                for (std::size_t i = 0; i < L.parts[j].size(); ++i) {
                    wl.push_back(L.part_weight[j][i] * rest);
                    options.push_back(&L.parts[j][i]);
                }
            }
            const Partition& chosen = *options[pick_weighted(wl, rng)];
            seq.push_back(chosen);
            left -= chosen.size();
        }

        std::set<MonicPoly> chosen_polys;
        while (static_cast<int>(chosen_polys.size()) < r)
            chosen_polys.insert(random_irreducible(d, rng));
        std::size_t i = 0;
        for (const auto& f : chosen_polys)
            entries.push_back({f, seq[i++]});
    }
    std::sort(entries.begin(), entries.end(), [](const NuEntry& a, const NuEntry& b) { return a.poly < b.poly; });
    return NuMap(ctx_, std::move(entries), true);
}

PairStats ratio_statistic_sampled(int n, std::uint64_t q, const BigRat& eps, std::uint64_t samples,
                                  std::uint64_t seed)
{
    if (eps <= 0)
        throw DomainError("ratio_statistic: eps must be positive");
    if (samples == 0)
        throw DomainError("ratio_statistic: sample count must be positive");
    auto ctx = FqCtx::make(q);
    NuMapSampler chars(n, ctx, SampleMode::uniform);
    NuMapSampler classes(n, ctx, SampleMode::class_weighted);
    std::mt19937_64 rng(seed);
    PairStats out;
    out.n = n;
    out.q = q;
    out.eps = eps;
    out.exact = false;
    out.samples = samples;
    out.seed = seed;
    for (std::uint64_t i = 0; i < samples; ++i) {
        BigInt d = char_degree(chars.sample(rng)).degree;
        BigInt s = class_data(classes.sample(rng)).class_size;
        if (ratio_at_least(d, s, eps))
            ++out.hits;
    }
    out.Q = BigRat(BigInt(std::to_string(out.hits)), BigInt(std::to_string(samples)));
    out.Q.canonicalize();
    return out;
}

Report verify_sampler_chi_square(int n, std::uint64_t q, std::uint64_t samples, std::uint64_t seed)
{
    Report r("weighted sampler chi-square n=" + std::to_string(n) + ",q=" + std::to_string(q));
    auto ctx = FqCtx::make(q);
    std::vector<NuMap> maps = enumerate_numaps(n, ctx);
    BigInt G = group_order(n, q);
    std::vector<double> expected;
    for (const auto& nu : maps)
        expected.push_back(BigRat(class_data(nu).class_size * samples, G).get_d());
    std::vector<std::uint64_t> observed(maps.size(), 0);
    NuMapSampler sampler(n, ctx, SampleMode::class_weighted);
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        NuMap nu = sampler.sample(rng);
        auto it = std::find(maps.begin(), maps.end(), nu);
        if (it == maps.end()) {
            r.record("sample outside the enumerated maps", Verdict::fail, nu.to_string());
            return r;
        }
        ++observed[static_cast<std::size_t>(it - maps.begin())];
    }
    double stat = 0;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        double diff = static_cast<double>(observed[i]) - expected[i];
        stat += diff * diff / expected[i];
    }
    double df = static_cast<double>(maps.size() - 1);
    double quantile = df > 0 ? boost::math::quantile(boost::math::chi_squared(df), 0.999) : 0;
    r.note("statistic", std::to_string(stat));
    r.note("quantile_0.999", std::to_string(quantile));
    r.note("df", std::to_string(maps.size() - 1));
    r.expect(stat < quantile || df == 0, "chi-square below the 0.999 quantile",
             std::to_string(stat) + " < " + std::to_string(quantile));
    return r;
}

} // namespace glqv
