// Acceptance suite: one line per criterion, nonzero exit if any criterion fails
// or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "glqv/fqpoly.hpp"
#include "glqv/gl2.hpp"
#include "glqv/glnq.hpp"
#include "glqv/numtheory.hpp"
#include "glqv/oracle.hpp"
#include "glqv/partitions.hpp"
#include "glqv/sampler.hpp"

using namespace glqv;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> body;
};

// Folds reports into an outcome, keeping the first failure and the totals.
struct Tally {
    Outcome out;
    std::size_t reports = 0, checks = 0, unverified = 0, skipped = 0;

    void add(const Report& r)
    {
        ++reports;
        checks += r.total();
        unverified += r.count(Verdict::unverified);
        skipped += r.count(Verdict::skip);
        if (!r.ok() && out.pass) {
            out.pass = false;
            auto f = r.first_failure();
            out.detail = r.title() + ": " + f->name + (f->detail.empty() ? "" : " (" + f->detail + ")");
        }
    }
    void require(bool cond, const std::string& what)
    {
        ++checks;
        if (!cond && out.pass) {
            out.pass = false;
            out.detail = what;
        }
    }
    Outcome finish(const std::string& extra = {})
    {
        if (out.pass) {
            std::ostringstream os;
            os << reports << " reports, " << checks << " checks";
            if (unverified)
                os << ", " << unverified << " unverified";
            if (skipped)
                os << ", " << skipped << " skipped";
            if (!extra.empty())
                os << "; " << extra;
            out.detail = os.str();
        }
        return out;
    }
};

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= limit; ++q)
        if (nt::prime_power(q))
            out.push_back(q);
    return out;
}

Outcome degree_formula()
{
    Tally t;
    std::vector<std::pair<int, std::uint64_t>> cases;
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t q : {2, 3, 4, 5})
            cases.emplace_back(n, q);
    cases.insert(cases.end(), {{5, 2}, {6, 2}, {5, 3}});
    for (auto [n, q] : cases) {
        t.require(sum_degree_squares(n, q) == group_order(n, q),
                  "sum of d^2 != |G| at n=" + std::to_string(n) + ",q=" + std::to_string(q));
        t.add(verify_degree_formula(n, q));
    }
    return t.finish(std::to_string(cases.size()) + " groups");
}

Outcome class_certificate()
{
    Tally t;
    for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {2, 5}}) {
        t.add(verify_class_equation(n, q));
        MatrixGroupSnapshot snap = snapshot(n, q);
        t.add(match_parametrization(snap));
    }
    return t.finish();
}

Outcome class_count_bounds()
{
    Tally t;
    const std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9};
    t.add(verify_class_count_bounds(20, qs));
    return t.finish();
}

Outcome partition_suite()
{
    Tally t;
    t.add(verify_partition_bounds(1000, 200));
    auto p = partition_numbers(40);
    for (int n = 0; n <= 40; ++n)
        t.require(BigInt(static_cast<unsigned long>(enumerate_partitions(n).size())) == p[n],
                  "p(" + std::to_string(n) + ") differs from enumeration");
    return t.finish();
}

Outcome cyclotomic_suite()
{
    Tally t;
    t.add(nt::verify_product_identity(200, {2, 3, 5, 10}));
    t.add(nt::verify_big_factor(3, 100, {2, 3, 4, 5}));
    t.add(nt::verify_big_factor_ord(20, 60, {2, 3}));
    t.add(nt::verify_cong_sweep(500, 20261018));
    return t.finish();
}

Outcome ord_ell_suite()
{
    Tally t;
    std::size_t groups = 0;
    for (int n = 1; n <= 10; ++n)
        for (auto q : prime_powers_up_to(1024)) {
            if (pow_ui(q, static_cast<unsigned long>(n)) > 1024)
                break;
            t.add(verify_ord_ell(n, q));
            ++groups;
        }
    return t.finish(std::to_string(groups) + " (n,q) pairs");
}

Outcome counting_bounds()
{
    Tally t;
    t.add(verify_counting_bounds(12, {2, 3}, 2, 8));
    return t.finish();
}

Outcome gl2_tables()
{
    Tally t;
    const std::vector<BigRat> grid{BigRat(1, 20), BigRat(1, 10), BigRat(1, 5), BigRat(1, 4), BigRat(1, 2), BigRat(1)};
    auto qs = prime_powers_up_to(25);
    for (auto q : qs) {
        Gl2Table table = Gl2Table::build(q);
        t.add(verify_orthogonality(table));
        t.add(verify_lemma_A(table, grid));
    }
    return t.finish(std::to_string(qs.size()) + " tables");
}

Outcome burnside_chain()
{
    Tally t;
    for (auto q : prime_powers_up_to(9))
        t.add(verify_burnside_chain(Gl2Table::build(q)));
    return t.finish();
}

Outcome r_set()
{
    Tally t;
    std::uint64_t off = 0;
    for (int n : {3, 4})
        for (const BigRat& k : {BigRat(1), BigRat(100)})
            for (const BigRat& eps : {BigRat(1, 2), BigRat(1, 10)}) {
                RReport r = build_R_set(n, 2, k, eps);
                t.add(r.checks);
                off += r.off_r_pairs;
            }
    t.require(off > 0, "no off-R pairs were exercised");
    return t.finish(std::to_string(off) + " off-R pairs");
}

Outcome sampler_fidelity()
{
    Tally t;
    Report r = verify_sampler_chi_square(3, 2, 100000, 20261018);
    t.add(r);
    return t.finish("statistic " + r.notes().at("statistic") + " < " + r.notes().at("quantile_0.999"));
}

Outcome nearly_squarefree()
{
    Tally t;
    for (std::uint64_t q : {2, 3})
        t.add(verify_repeated_factor_bound(q, 12));
    return t.finish();
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "degree formula: sum d^2 = |GL(n,q)|", 120, degree_formula},
        {2, "class certificate against brute-force orbits", 60, class_certificate},
        {3, "q^n/2 <= k(GL(n,q)) <= q^n, n <= 20", 60, class_count_bounds},
        {4, "partition bounds, rare inequality, recurrence vs enumeration", 30, partition_suite},
        {5, "product identity, big-factor (i)-(iv), congruence lemma", 120, cyclotomic_suite},
        {6, "ord_l degree formula vs direct valuation", 120, ord_ell_suite},
        {7, "deficiency and degree-m counting bounds", 120, counting_bounds},
        {8, "GL(2,q) orthogonality and P <= Q(eps) + eps^2, q <= 25", 180, gl2_tables},
        {9, "Burnside chain, q <= 9", 180, burnside_chain},
        {10, "R-set mechanics at (3,2) and (4,2)", 60, r_set},
        {11, "weighted sampler chi-square at (3,2)", 60, sampler_fidelity},
        {12, "repeated-factor count < 2 q^(n-m)", 60, nearly_squarefree},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs < c.limit_seconds;
        bool pass = o.pass && in_time;
        failed += !pass;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.limit_seconds);
        std::cout << "criterion " << (c.id < 10 ? " " : "") << c.id << ": " << (pass ? "PASS" : "FAIL") << "  "
                  << c.name << "  [" << timing << (in_time ? "" : ", over the time limit") << "]  " << o.detail
                  << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all 12 criteria passed") << std::endl;
    return failed ? 1 : 0;
}
