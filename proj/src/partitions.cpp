#include "glqv/partitions.hpp"

#include <algorithm>
#include <sstream>

#include "glqv/sqrt5.hpp"

namespace glqv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const
{
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.assign(static_cast<std::size_t>(parts_.front()), 0);
        for (int part : parts_)
            for (int j = 0; j < part; ++j)
                ++conj[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(conj));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const
{
    std::vector<std::pair<int, int>> out;
    for (int part : parts_) {
        if (!out.empty() && out.back().first == part)
            ++out.back().second;
        else
            out.emplace_back(part, 1);
    }
    return out;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

std::vector<BigInt> partition_numbers(int n_max)
{
    if (n_max < 0)
        throw DomainError("partition_numbers: negative argument");
    std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        BigInt acc = 0;
        // Generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2; signs + + - - + + ...
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            if (g1 > n)
                break;
            int g2 = k * (3 * k + 1) / 2;
            bool plus = (k % 2) == 1;
            const BigInt& t1 = p[static_cast<std::size_t>(n - g1)];
            if (plus)
                acc += t1;
            else
                acc -= t1;
            if (g2 <= n) {
                const BigInt& t2 = p[static_cast<std::size_t>(n - g2)];
                if (plus)
                    acc += t2;
                else
                    acc -= t2;
            }
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

BigInt count_partitions(int n)
{
    return partition_numbers(n).back();
}

std::vector<Partition> enumerate_partitions(int n, int cap)
{
    if (n < 0)
        throw DomainError("enumerate_partitions: negative argument");
    if (cap < 0)
        cap = static_cast<int>(enumeration_cap(kDefaultPartitionCap));
    if (n > cap)
        throw ResourceError("enumerate_partitions: n = " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(cap));
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a{n};
    while (true) {
        out.emplace_back(a);
        // Rightmost part larger than one.
        int k = static_cast<int>(a.size()) - 1;
        while (k >= 0 && a[static_cast<std::size_t>(k)] == 1)
            --k;
        if (k < 0)
            break;
        int rem = static_cast<int>(a.size()) - k; // ones after position k, plus the unit taken from a[k]
        int v = --a[static_cast<std::size_t>(k)];
        a.resize(static_cast<std::size_t>(k) + 1);
        while (rem > 0) {
            int part = std::min(v, rem);
            a.push_back(part);
            rem -= part;
        }
    }
    return out;
}

std::vector<int> hooks(const Partition& lambda)
{
    const auto& rows = lambda.parts();
    Partition conj = lambda.conjugate();
    const auto& cols = conj.parts();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j) {
            int arm = rows[i] - j - 1;
            int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            out.push_back(arm + leg + 1);
        }
    return out;
}

long n_stat(const Partition& lambda)
{
    long s = 0;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += static_cast<long>(i) * parts[i];
    return s;
}

namespace {

// p(b) 2^N < 2 phi^N 2^m with everything exact.
bool rare_holds(const BigInt& pb, int m, int N, const QuadSqrt5& phi_N)
{
    BigInt lhs = pb * pow_ui(2, static_cast<unsigned long>(N));
    QuadSqrt5 rhs = phi_N * BigRat(pow_ui(2, static_cast<unsigned long>(m) + 1));
    return QuadSqrt5(lhs) < rhs;
}

} // namespace

bool rare_bound_holds(int a, int b, int N)
{
    if (a < 1 || b < 1 || N < 0)
        throw DomainError("rare_bound_holds: need a, b >= 1 and N >= 0");
    return rare_holds(count_partitions(b), a * (b - 1), N, QuadSqrt5::phi().pow(static_cast<unsigned long>(N)));
}

Report verify_partition_bounds(int n_max, int rare_max)
{
    if (n_max < 1)
        throw DomainError("verify_partition_bounds: n_max must be >= 1");
    if (rare_max < 0)
        rare_max = n_max;
    Report report("partition bounds");
    auto p = partition_numbers(std::max(n_max, rare_max + 1));

    QuadSqrt5 phi = QuadSqrt5::phi();
    std::vector<QuadSqrt5> phi_pow{QuadSqrt5(BigInt(1))};
    for (int i = 1; i <= std::max(n_max, rare_max); ++i)
        phi_pow.push_back(phi_pow.back() * phi);

    for (int n = 1; n <= n_max; ++n) {
        const BigInt& pn = p[static_cast<std::size_t>(n)];
        std::string tag = "n=" + std::to_string(n);
        report.expect(pn <= pow_ui(2, static_cast<unsigned long>(n - 1)), "p(n)<=2^(n-1) " + tag,
                      "p(n)=" + to_string(pn));
        report.expect(QuadSqrt5(pn) <= phi_pow[static_cast<std::size_t>(n)], "p(n)<=phi^n " + tag,
                      "p(n)=" + to_string(pn));
        report.expect(p[static_cast<std::size_t>(n)] >= p[static_cast<std::size_t>(n - 1)], "monotone " + tag);
    }

    // m = a(b-1) = 0 is the degenerate b = 1 case: p(1) = 1 < 2.
    report.expect(rare_holds(p[1], 0, 0, phi_pow[0]), "rare a=1 b=1");
    for (int m = 1; m <= rare_max; ++m) {
        for (int bm1 = 1; bm1 <= m; ++bm1) {
            if (m % bm1 != 0)
                continue;
            int a = m / bm1;
            int b = bm1 + 1;
            int bad = -1;
            for (int N = 0; N <= m; ++N)
                if (!rare_holds(p[static_cast<std::size_t>(b)], m, N, phi_pow[static_cast<std::size_t>(N)])) {
                    bad = N;
                    break;
                }
            report.expect(bad < 0, "rare a=" + std::to_string(a) + " b=" + std::to_string(b),
                          bad < 0 ? std::string() : "fails at N=" + std::to_string(bad));
        }
    }
    report.note("n_max", std::to_string(n_max));
    report.note("rare_max", std::to_string(rare_max));
    return report;
}

} // namespace glqv
