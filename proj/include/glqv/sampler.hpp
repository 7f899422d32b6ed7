#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "glqv/common.hpp"
#include "glqv/glnq.hpp"
#include "glqv/report.hpp"

namespace glqv {

enum class SampleMode { uniform, class_weighted };

// Uniform integer in [0, bound), bound > 0, from whole 64-bit draws with rejection.
BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng);

// Index i with probability weights[i] / sum(weights); weights are exact and
// non-negative with a positive sum.
std::size_t pick_weighted(const std::vector<BigRat>& weights, std::mt19937_64& rng);

// Exact sampler over degree-n maps. Uniform mode draws each map with
// probability 1/k(G); weighted mode with probability |class| / |G|.
//
// Layer d of the generating function is (1 + W_d(x))^(N_d) with W_d the
// per-polynomial weight series (p(j) or sum_{|lambda|=j} 1/c_lambda(q^d)).
// A draw fixes the size carried by each layer from the top degree down, then
// the number r of supporting polynomials via C(N_d, r) [x^s] W_d^r, then the
// partitions in sequence, and finally r distinct random irreducibles.
class NuMapSampler {
public:
    NuMapSampler(int n, std::shared_ptr<const FqCtx> ctx, SampleMode mode);

    NuMap sample(std::mt19937_64& rng) const;
    int n() const { return n_; }
    SampleMode mode() const { return mode_; }

private:
    struct Layer {
        BigInt count;                              // N_d
        std::vector<std::vector<BigRat>> w_pow;     // w_pow[r][s] = [x^s] W_d^r
        std::vector<BigRat> total;                  // [x^s] (1 + W_d)^(N_d)
        std::vector<std::vector<Partition>> parts;  // partitions by size
        std::vector<std::vector<BigRat>> part_weight;
    };

    MonicPoly random_irreducible(int d, std::mt19937_64& rng) const;

    int n_;
    std::shared_ptr<const FqCtx> ctx_;
    SampleMode mode_;
    std::vector<Layer> layers_;                  // index d, 1..n
    std::vector<std::vector<BigRat>> prefix_;    // prefix_[d][j] = [x^j] prod_{d' <= d} layer(x^d')
};

// Chi-square statistic of `samples` weighted draws at (n, q) against exact
// class-size probabilities; passes below the 0.999 quantile.
Report verify_sampler_chi_square(int n, std::uint64_t q, std::uint64_t samples, std::uint64_t seed);

} // namespace glqv
