#include "glqv/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "glqv/cycloring.hpp"
#include "glqv/fqpoly.hpp"
#include "glqv/gl2.hpp"
#include "glqv/glnq.hpp"
#include "glqv/numtheory.hpp"
#include "glqv/oracle.hpp"
#include "glqv/partitions.hpp"
#include "glqv/sampler.hpp"

namespace glqv::cli {

namespace {

std::string csv_cell(const nlohmann::json& v)
{
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::uint64_t parse_prime_power(const std::string& text)
{
    std::uint64_t q = 0;
    try {
        std::size_t used = 0;
        q = std::stoull(text, &used);
        if (used != text.size())
            throw DomainError("");
    } catch (const std::exception&) {
        throw DomainError("not an integer: '" + text + "'");
    }
    if (!nt::prime_power(q))
        throw DomainError(text + " is not a prime power");
    return q;
}

BigRat parse_positive(const std::string& text)
{
    BigRat x = parse_fraction(text);
    if (x <= 0)
        throw DomainError("expected a positive fraction, got '" + text + "'");
    return x;
}

std::uint64_t single_q(const RunConfig& c)
{
    if (c.qs.size() != 1)
        throw DomainError(c.subcommand + " needs exactly one --q");
    return c.qs.front();
}

void need_n(const RunConfig& c)
{
    if (c.n < 1)
        throw DomainError(c.subcommand + " needs --n >= 1");
}

std::vector<BigRat> default_eps_grid()
{
    return {BigRat(1, 20), BigRat(1, 10), BigRat(1, 5), BigRat(1, 4), BigRat(1, 2), BigRat(1)};
}

nlohmann::json numstr(const BigInt& x)
{
    return to_string(x);
}

nlohmann::json numstr(const BigRat& x)
{
    return to_string(x);
}

Table pfun_table(const RunConfig& c)
{
    if (c.max < 0)
        throw DomainError("pfun needs --max >= 0");
    Table t{{"n", "p"}, {}};
    auto p = partition_numbers(c.max);
    for (int n = 0; n <= c.max; ++n)
        t.rows.push_back({std::to_string(n), numstr(p[n])});
    return t;
}

Table cyclo_table(const RunConfig& c)
{
    if (c.max < 1)
        throw DomainError("cyclo needs --max >= 1");
    if (c.a < 2)
        throw DomainError("cyclo needs --a >= 2");
    Table t{{"n", "phi_n"}, {}};
    if (c.split) {
        t.columns.push_back("P_n");
        t.columns.push_back("R_n");
    }
    for (int n = 1; n <= c.max; ++n) {
        auto f = nt::split_primitive_part(static_cast<std::uint64_t>(n), c.a);
        std::vector<nlohmann::json> row{std::to_string(n), numstr(f.phi_value)};
        if (c.split) {
            row.push_back(numstr(f.p_part));
            row.push_back(numstr(f.r_part));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table classes_table(const RunConfig& c)
{
    need_n(c);
    auto ctx = FqCtx::make(single_q(c));
    Table t{{"nu", "char_poly", "class_size", "centralizer_order", "fact"}, {}};
    for_each_numap(c.n, ctx, [&](const NuMap& nu) {
        ClassData d = class_data(nu);
        t.rows.push_back({nu.to_json(), d.char_poly.coeffs(), numstr(d.class_size), numstr(d.centralizer_order),
                          std::to_string(d.fact)});
    });
    return t;
}

Table chars_table(const RunConfig& c)
{
    need_n(c);
    auto ctx = FqCtx::make(single_q(c));
    Table t{{"nu", "degree", "q_exponent", "deficiency"}, {}};
    for_each_numap(c.n, ctx, [&](const NuMap& nu) {
        CharData d = char_degree(nu);
        t.rows.push_back({nu.to_json(), numstr(d.degree), std::to_string(d.q_exponent), std::to_string(d.deficiency)});
    });
    return t;
}

Table pairstats_table(const RunConfig& c)
{
    need_n(c);
    std::uint64_t q = single_q(c);
    PairStats s;
    if (c.samples > 0) {
        if (!c.seed)
            throw DomainError("--sample requires --seed");
        s = ratio_statistic_sampled(c.n, q, c.eps, c.samples, *c.seed);
    } else {
        s = ratio_statistic_exact(c.n, q, c.eps);
    }
    Table t{{"n", "q", "eps", "Q", "exact", "samples", "seed", "hits"}, {}};
    t.rows.push_back({std::to_string(s.n), std::to_string(s.q), numstr(s.eps), numstr(s.Q), s.exact ? "true" : "false",
                      std::to_string(s.samples), std::to_string(s.seed), std::to_string(s.hits)});
    return t;
}

Table rset_table(const RunConfig& c, Report& checks, nlohmann::json& summary)
{
    need_n(c);
    RReport r = build_R_set(c.n, single_q(c), c.k, c.eps);
    checks = r.checks;
    summary = {{"r_measure", numstr(r.r_measure)},
               {"off_r_pairs", std::to_string(r.off_r_pairs)},
               {"empty_X", r.empty_X}};
    Table t{{"nu", "class_size", "fact", "in_X", "exclusion", "m_g", "ell_g", "m_exceeds_inv_eps"}, {}};
    for (const auto& rc : r.classes)
        t.rows.push_back({rc.nu.to_json(), numstr(rc.class_size), std::to_string(rc.fact), rc.in_X ? "true" : "false",
                          rc.exclusion, std::to_string(rc.m_g), rc.in_X ? numstr(rc.ell_g) : nlohmann::json(""),
                          rc.m_exceeds_inv_eps ? "true" : "false"});
    return t;
}

Table gl2_table(const RunConfig& c, bool& all_hold)
{
    Gl2Table table = Gl2Table::build(single_q(c));
    if (!c.dump_table.empty()) {
        std::ofstream f(c.dump_table);
        if (!f)
            throw DomainError("cannot write " + c.dump_table);
        f << table.to_json(true).dump() << "\n";
    }
    Table t{{"eps", "P", "Q", "Q_plus_eps_sq", "pass"}, {}};
    all_hold = true;
    for (const auto& row : lemma_A_rows(table, c.eps_grid.empty() ? default_eps_grid() : c.eps_grid)) {
        all_hold = all_hold && row.holds;
        t.rows.push_back({numstr(row.eps), numstr(row.P), numstr(row.Q), numstr(row.bound), row.holds ? "true" : "false"});
    }
    return t;
}

Table report_table(const RunConfig& c)
{
    int max_n = c.max > 0 ? c.max : 2;
    auto grid = c.eps_grid.empty() ? default_eps_grid() : c.eps_grid;
    Table t{{"n", "q", "eps", "P", "P_source", "Q", "Q_plus_eps_sq", "holds"}, {}};
    for (auto q : c.qs)
        for (int n = 1; n <= max_n; ++n) {
            std::optional<BigRat> P;
            std::string source = "not computed (values of GL(n,q) for n >= 3 out of scope)";
            if (n == 1) {
                P = BigRat(1);
                source = "abelian group";
            } else if (n == 2 && q <= kMaxGl2Order) {
                P = vanishing_proportion(Gl2Table::build(q));
                source = "GL(2,q) character table";
            }
            for (const auto& eps : grid) {
                BigRat Q = ratio_statistic_exact(n, q, eps).Q;
                BigRat bound = Q + eps * eps;
                t.rows.push_back({std::to_string(n), std::to_string(q), numstr(eps), P ? numstr(*P) : nlohmann::json(""),
                                  source, numstr(Q), numstr(bound),
                                  P ? nlohmann::json(*P <= bound ? "true" : "false") : nlohmann::json("")});
            }
        }
    return t;
}

// --- verify suites -----------------------------------------------------------

using Suite = std::vector<Report>;

void suite_partitions(Suite& s)
{
    s.push_back(verify_partition_bounds(1000, 200));
}

void suite_numtheory(Suite& s, std::uint64_t seed)
{
    s.push_back(nt::verify_product_identity(200, {2, 3, 5, 10}));
    s.push_back(nt::verify_quarter_bound(200, {2, 3, 5, 10}));
    s.push_back(nt::verify_big_factor(3, 60, {2, 3, 4, 5}));
    s.push_back(nt::verify_big_factor_ord(12, 40, {2, 3}));
    s.push_back(nt::verify_cong_sweep(200, seed));
}

void suite_fqpoly(Suite& s, const RunConfig& c, std::uint64_t seed)
{
    for (auto q : c.qs) {
        auto ctx = FqCtx::make(q);
        s.push_back(verify_field(*ctx, seed));
        s.push_back(verify_irreducible_counts(q, 8));
        s.push_back(verify_factorization(ctx, 8, 40, seed));
        s.push_back(verify_repeated_factor_bound(q, 10));
    }
}

void suite_cycloring(Suite& s, std::uint64_t seed)
{
    s.push_back(verify_cycloring({1, 2, 3, 4, 5, 8, 12, 15, 24, 48}, 20, seed));
}

void suite_glnq(Suite& s, const RunConfig& c, int max_n)
{
    for (auto q : c.qs)
        for (int n = 1; n <= max_n; ++n) {
            s.push_back(verify_degree_formula(n, q));
            s.push_back(verify_class_equation(n, q));
            if (pow_ui(q, static_cast<unsigned long>(n)) <= 1024)
                s.push_back(verify_ord_ell(n, q));
            if (n >= 2) {
                RReport r = build_R_set(n, q, c.k, c.eps);
                s.push_back(r.checks);
            }
        }
    s.push_back(verify_class_count_bounds(std::max(max_n, 12), c.qs));
    s.push_back(verify_counting_bounds(std::max(max_n, 8), c.qs, 2, 8));
}

void suite_gl2(Suite& s, const RunConfig& c)
{
    for (auto q : c.qs) {
        if (q > kMaxGl2Order)
            continue;
        Gl2Table t = Gl2Table::build(q);
        s.push_back(verify_orthogonality(t));
        s.push_back(verify_zero_counts(t));
        s.push_back(verify_galois_rows(t));
        s.push_back(verify_lemma_A(t, c.eps_grid.empty() ? default_eps_grid() : c.eps_grid));
        if (q <= 9)
            s.push_back(verify_burnside_chain(t));
        s.push_back(crosscheck_with_glnq(t));
    }
}

void suite_oracle(Suite& s, const RunConfig& c, int max_n)
{
    for (auto q : c.qs)
        for (int n = 2; n <= max_n; ++n) {
            if (group_order(n, q) > BigInt(std::to_string(enumeration_cap(kMaxSnapshotOrder)))) {
                Report r("oracle GL(" + std::to_string(n) + "," + std::to_string(q) + ")");
                r.skip("snapshot", "group order above the snapshot cap");
                s.push_back(r);
                continue;
            }
            MatrixGroupSnapshot snap = snapshot(n, q);
            s.push_back(match_parametrization(snap));
            if (n == 2 && q == 2) {
                Report r("GL(2,2) = S_3 character table");
                BigRat direct = nonvanishing_proportion(gl22_character_table(snap));
                BigRat table = vanishing_proportion(Gl2Table::build(2));
                r.expect(direct == table, "P from permutation characters = P from the GL(2,q) table",
                         to_string(direct) + " vs " + to_string(table));
                s.push_back(r);
            }
        }
}

void suite_sampler(Suite& s, const RunConfig& c, int max_n, std::uint64_t seed)
{
    s.push_back(verify_sampler_chi_square(std::min(max_n, 3), c.qs.front(), 20000, seed));
}

Suite run_suite(const RunConfig& c)
{
    const int max_n = c.max > 0 ? c.max : 3;
    const std::uint64_t seed = c.seed.value_or(1);
    const std::string& w = c.suite;
    bool all = w == "all";
    Suite s;
    if (all || w == "partitions")
        suite_partitions(s);
    if (all || w == "numtheory")
        suite_numtheory(s, seed);
    if (all || w == "fqpoly")
        suite_fqpoly(s, c, seed);
    if (all || w == "cycloring")
        suite_cycloring(s, seed);
    if (all || w == "glnq")
        suite_glnq(s, c, max_n);
    if (all || w == "gl2")
        suite_gl2(s, c);
    if (all || w == "oracle")
        suite_oracle(s, c, max_n);
    if (all || w == "sampler")
        suite_sampler(s, c, max_n, seed);
    if (s.empty())
        throw DomainError("unknown suite '" + w + "'");
    return s;
}

std::string render(const Table& t, const std::string& format, const nlohmann::json& extra = nullptr)
{
    if (format == "csv")
        return to_csv(t);
    nlohmann::json j = to_json(t);
    if (!extra.is_null())
        j = nlohmann::json{{"rows", j}, {"summary", extra}};
    return j.dump(2) + "\n";
}

} // namespace

std::string to_csv(const Table& t)
{
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out += (i ? "," : "") + csv_cell(t.columns[i]);
    out += "\r\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out += (i ? "," : "") + csv_cell(row[i]);
        out += "\r\n";
    }
    return out;
}

nlohmann::json to_json(const Table& t)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < t.columns.size() && i < row.size(); ++i)
            obj[t.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    return rows;
}

BigRat parse_eps(const std::string& text)
{
    BigRat e = parse_fraction(text);
    if (e <= 0 || e > 1)
        throw DomainError("eps must satisfy 0 < eps <= 1, got '" + text + "'");
    return e;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    if (c.format != "csv" && c.format != "json")
        throw DomainError("format must be csv or json");
    std::string artifact;
    int status = kPass;
    const std::string& cmd = c.subcommand;
    if (cmd == "pfun") {
        artifact = render(pfun_table(c), c.format);
    } else if (cmd == "cyclo") {
        artifact = render(cyclo_table(c), c.format);
    } else if (cmd == "classes") {
        artifact = render(classes_table(c), c.format);
    } else if (cmd == "chars") {
        artifact = render(chars_table(c), c.format);
    } else if (cmd == "pairstats") {
        artifact = render(pairstats_table(c), c.format);
    } else if (cmd == "rset") {
        Report checks;
        nlohmann::json summary;
        Table t = rset_table(c, checks, summary);
        summary["checks"] = checks.to_json();
        artifact = render(t, c.format, summary);
        if (!checks.ok()) {
            err << "R-set check failed: " << checks.first_failure()->name << "\n";
            status = kVerificationFailed;
        }
    } else if (cmd == "gl2") {
        bool holds = true;
        artifact = render(gl2_table(c, holds), c.format);
        if (!holds)
            status = kVerificationFailed;
    } else if (cmd == "report") {
        artifact = render(report_table(c), c.format);
    } else if (cmd == "verify") {
        Suite suite = run_suite(c);
        bool ok = true;
        Table t{{"title", "pass", "fail", "skip", "unverified", "first_failure"}, {}};
        nlohmann::json reports = nlohmann::json::array();
        for (const auto& r : suite) {
            ok = ok && r.ok();
            auto f = r.first_failure();
            t.rows.push_back({r.title(), std::to_string(r.count(Verdict::pass)), std::to_string(r.count(Verdict::fail)),
                              std::to_string(r.count(Verdict::skip)), std::to_string(r.count(Verdict::unverified)),
                              f ? f->name + (f->detail.empty() ? "" : ": " + f->detail) : ""});
            reports.push_back(r.to_json());
            if (!r.ok())
                err << "FAIL " << r.summary() << "\n";
        }
        if (c.format == "csv")
            artifact = to_csv(t);
        else
            artifact = nlohmann::json{{"suite", c.suite}, {"ok", ok}, {"reports", reports}}.dump(2) + "\n";
        status = ok ? kPass : kVerificationFailed;
    } else {
        throw DomainError("unknown subcommand '" + cmd + "'");
    }
    if (c.output.empty()) {
        out << artifact;
    } else {
        std::ofstream f(c.output, std::ios::binary);
        if (!f)
            throw DomainError("cannot write " + c.output);
        f << artifact;
    }
    return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of character-vanishing ingredients for GL(n,q)"};
    app.require_subcommand(1);
    RunConfig c;
    std::string q_text, eps_text, k_text, grid_text;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output,-o", c.output, "write to a file instead of stdout");
        sub->add_option("--threads", c.threads, "parallelism budget");
    };
    auto* pfun = app.add_subcommand("pfun", "partition numbers p(0..max)");
    pfun->add_option("--max", c.max)->required();
    common(pfun);

    auto* cyclo = app.add_subcommand("cyclo", "cyclotomic values and primitive parts");
    cyclo->add_option("--a", c.a)->required();
    cyclo->add_option("--max", c.max)->required();
    cyclo->add_flag("--split", c.split);
    common(cyclo);

    for (const char* name : {"classes", "chars"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + " of GL(n,q) by nu-map");
        sub->add_option("--n", c.n)->required();
        sub->add_option("--q", q_text)->required();
        common(sub);
    }

    auto* pairs = app.add_subcommand("pairstats", "ratio statistic Q(eps)");
    pairs->add_option("--n", c.n)->required();
    pairs->add_option("--q", q_text)->required();
    pairs->add_option("--eps", eps_text)->required();
    pairs->add_option("--sample", c.samples, "Monte-Carlo sample count");
    pairs->add_option("--seed", c.seed);
    common(pairs);

    auto* rset = app.add_subcommand("rset", "R-set construction");
    rset->add_option("--n", c.n)->required();
    rset->add_option("--q", q_text)->required();
    rset->add_option("--k", k_text)->required();
    rset->add_option("--eps", eps_text)->required();
    common(rset);

    auto* gl2 = app.add_subcommand("gl2", "GL(2,q) character table and Lemma A rows");
    gl2->add_option("--q", q_text)->required();
    gl2->add_option("--eps-grid", grid_text);
    gl2->add_option("--dump-table", c.dump_table);
    common(gl2);

    auto* verify = app.add_subcommand("verify", "run verifier suites");
    verify->add_option("--suite", c.suite)
        ->check(CLI::IsMember({"all", "partitions", "numtheory", "fqpoly", "cycloring", "glnq", "gl2", "oracle", "sampler"}));
    verify->add_option("--max-n", c.max);
    verify->add_option("--q", q_text);
    verify->add_option("--eps", eps_text);
    verify->add_option("--k", k_text);
    verify->add_option("--eps-grid", grid_text);
    verify->add_option("--seed", c.seed);
    common(verify);

    auto* report = app.add_subcommand("report", "P versus Q(eps) + eps^2 per (n, q)");
    report->add_option("--max-n", c.max);
    report->add_option("--q", q_text)->required();
    report->add_option("--eps-grid", grid_text);
    common(report);

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e, out, err);
            return code == 0 ? kPass : kInputError;
        }
        c.subcommand = app.get_subcommands().front()->get_name();
        if (q_text.empty())
            q_text = "2,3";
        for (const auto& item : split_list(q_text))
            c.qs.push_back(parse_prime_power(item));
        if (c.qs.empty())
            throw DomainError("--q is empty");
        if (!eps_text.empty())
            c.eps = parse_eps(eps_text);
        if (!k_text.empty())
            c.k = parse_positive(k_text);
        for (const auto& item : split_list(grid_text))
            c.eps_grid.push_back(parse_eps(item));
        if (c.threads == 0)
            throw DomainError("--threads must be >= 1");
        return run(c, out, err);
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const ResourceError& e) {
        err << "resource cap: " << e.what() << "\n";
        return kResourceCap;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kVerificationFailed;
    }
}

} // namespace glqv::cli
