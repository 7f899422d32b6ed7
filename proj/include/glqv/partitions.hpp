#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "glqv/common.hpp"
#include "glqv/report.hpp"

namespace glqv {

// Integer partition stored as a weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    // Throws DomainError unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    // (part, multiplicity) pairs, largest part first.
    std::vector<std::pair<int, int>> multiplicities() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// p(0), ..., p(n_max) from the pentagonal recurrence.
std::vector<BigInt> partition_numbers(int n_max);
BigInt count_partitions(int n);

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
// Throws ResourceError when n exceeds `cap` (default 60, GLQV_CAP overrides).
std::vector<Partition> enumerate_partitions(int n, int cap = -1);

// The |lambda| hook lengths, in row-major cell order.
std::vector<int> hooks(const Partition& lambda);

// n(lambda) = sum_i (i-1) lambda_i.
long n_stat(const Partition& lambda);

// p(n) <= 2^(n-1), p(n) <= phi^n (exact in Q(sqrt5)) and monotonicity for
// 1 <= n <= n_max; plus the q = 2 "rare" inequality p(b) / 2^(a(b-1)) < 2 gamma^N
// for every a(b-1) <= rare_max and 0 <= N <= a(b-1), gamma = phi/2.
// rare_max < 0 means rare_max = n_max.
Report verify_partition_bounds(int n_max, int rare_max = -1);

// The single "rare" comparison p(b) 2^N < 2 phi^N 2^(a(b-1)), exact.
bool rare_bound_holds(int a, int b, int N);

} // namespace glqv
