#include "glqv/gl2.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "glqv/fqpoly.hpp"
#include "glqv/glnq.hpp"
#include "glqv/numtheory.hpp"

namespace glqv {

namespace {

const char* kind_name(Gl2ClassKind k)
{
    switch (k) {
    case Gl2ClassKind::central: return "central";
    case Gl2ClassKind::nonsemisimple: return "nonsemisimple";
    case Gl2ClassKind::split: return "split";
    case Gl2ClassKind::elliptic: return "elliptic";
    }
    return "?";
}

const char* kind_name(Gl2CharKind k)
{
    switch (k) {
    case Gl2CharKind::U: return "U";
    case Gl2CharKind::V: return "V";
    case Gl2CharKind::W: return "W";
    case Gl2CharKind::X: return "X";
    }
    return "?";
}

Gl2Entry term1(std::int64_t c, std::uint64_t e)
{
    Gl2Entry out;
    if (c != 0) {
        out.terms = 1;
        out.coeff[0] = c;
        out.exponent[0] = static_cast<std::uint32_t>(e);
    }
    return out;
}

Gl2Entry term2(std::int64_t c1, std::uint64_t e1, std::int64_t c2, std::uint64_t e2)
{
    if (e1 == e2)
        return term1(c1 + c2, e1);
    if (e2 < e1) {
        std::swap(c1, c2);
        std::swap(e1, e2);
    }
    Gl2Entry out;
    out.terms = 2;
    out.coeff[0] = c1;
    out.coeff[1] = c2;
    out.exponent[0] = static_cast<std::uint32_t>(e1);
    out.exponent[1] = static_cast<std::uint32_t>(e2);
    return out;
}

// F_{q^2} = F_q[y] / (y^2 + m1 y + m0).
struct QuadExt {
    const FqCtx& F;
    Elem m0, m1;

    std::pair<Elem, Elem> mul(std::pair<Elem, Elem> a, std::pair<Elem, Elem> b) const
    {
        Elem c0 = F.mul(a.first, b.first);
        Elem c1 = F.add(F.mul(a.first, b.second), F.mul(a.second, b.first));
        Elem c2 = F.mul(a.second, b.second);
        // y^2 = -m1 y - m0
        return {F.sub(c0, F.mul(c2, m0)), F.sub(c1, F.mul(c2, m1))};
    }

    std::pair<Elem, Elem> pow(std::pair<Elem, Elem> a, std::uint64_t e) const
    {
        std::pair<Elem, Elem> r{1, 0};
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

bool vanishes(GroupRingAccumulator& acc, const Gl2Entry& e)
{
    if (e.terms == 0)
        return true;
    acc.clear();
    for (int t = 0; t < e.terms; ++t)
        acc.add(e.exponent[t], e.coeff[t]);
    return acc.vanishes();
}

BigInt big(std::uint64_t x)
{
    return BigInt(std::to_string(x));
}

} // namespace

std::string Gl2Class::label() const
{
    switch (kind) {
    case Gl2ClassKind::central: return "a_" + std::to_string(i);
    case Gl2ClassKind::nonsemisimple: return "b_" + std::to_string(i);
    case Gl2ClassKind::split: return "c_" + std::to_string(i) + "," + std::to_string(j);
    case Gl2ClassKind::elliptic: return "d_" + std::to_string(i);
    }
    return "?";
}

std::string Gl2Char::label() const
{
    switch (kind) {
    case Gl2CharKind::U: return "U_" + std::to_string(a);
    case Gl2CharKind::V: return "V_" + std::to_string(a);
    case Gl2CharKind::W: return "W_" + std::to_string(a) + "," + std::to_string(b);
    case Gl2CharKind::X: return "X_" + std::to_string(a);
    }
    return "?";
}

Gl2Table Gl2Table::build(std::uint64_t q)
{
    if (!nt::prime_power(q))
        throw DomainError(std::to_string(q) + " is not a prime power");
    if (q > kMaxGl2Order)
        throw DomainError("GL(2,q) tables are limited to q <= 64");
    Gl2Table t;
    t.q_ = q;
    t.M_ = static_cast<std::uint32_t>(q * q - 1);
    t.group_order_ = q * (q - 1) * (q - 1) * (q + 1);
    t.field_ = FqCtx::make(q);
    const FqCtx& F = *t.field_;
    t.ext_modulus_ = enumerate_irreducibles(t.field_, 2).front().coeffs();
    QuadExt E{F, t.ext_modulus_[0], t.ext_modulus_[1]};

    const std::uint64_t M = t.M_;
    auto order_primes = nt::prime_divisors(M);
    bool found = false;
    for (std::uint64_t code = 1; code < q * q && !found; ++code) {
        std::pair<Elem, Elem> g{static_cast<Elem>(code % q), static_cast<Elem>(code / q)};
        bool primitive = true;
        for (auto r : order_primes)
            if (E.pow(g, M / r) == std::pair<Elem, Elem>{1, 0}) {
                primitive = false;
                break;
            }
        if (primitive && E.pow(g, M) == std::pair<Elem, Elem>{1, 0}) {
            t.generator_ = g;
            found = true;
        }
    }
    if (!found)
        throw ConsistencyError("no generator of F_{q^2}^x found");

    const std::uint64_t Q1 = q + 1;
    auto canonical = [&](std::uint64_t s) { return std::min(s, s * q % M); };
    for (std::uint32_t i = 0; i + 1 < q; ++i)
        t.classes_.push_back({Gl2ClassKind::central, i, 0, 1});
    for (std::uint32_t i = 0; i + 1 < q; ++i)
        t.classes_.push_back({Gl2ClassKind::nonsemisimple, i, 0, q * q - 1});
    for (std::uint32_t i = 0; i + 1 < q; ++i)
        for (std::uint32_t j = i + 1; j + 1 < q; ++j)
            t.classes_.push_back({Gl2ClassKind::split, i, j, q * q + q});
    for (std::uint32_t s = 1; s < M; ++s)
        if (s % Q1 != 0 && canonical(s) == s)
            t.classes_.push_back({Gl2ClassKind::elliptic, s, 0, q * q - q});

    for (std::uint32_t a = 0; a + 1 < q; ++a)
        t.chars_.push_back({Gl2CharKind::U, a, 0, 1});
    for (std::uint32_t a = 0; a + 1 < q; ++a)
        t.chars_.push_back({Gl2CharKind::V, a, 0, q});
    for (std::uint32_t a = 0; a + 1 < q; ++a)
        for (std::uint32_t b = a + 1; b + 1 < q; ++b)
            t.chars_.push_back({Gl2CharKind::W, a, b, q + 1});
    for (std::uint32_t s = 1; s < M; ++s)
        if (s % Q1 != 0 && canonical(s) == s)
            t.chars_.push_back({Gl2CharKind::X, s, 0, q - 1});

    const auto qi = static_cast<std::int64_t>(q);
    t.entries_.resize(t.chars_.size() * t.classes_.size());
    for (std::size_t x = 0; x < t.chars_.size(); ++x) {
        const Gl2Char& chi = t.chars_[x];
        const std::uint64_t a = chi.a, b = chi.b;
        for (std::size_t y = 0; y < t.classes_.size(); ++y) {
            const Gl2Class& g = t.classes_[y];
            const std::uint64_t i = g.i, j = g.j, s = g.i;
            Gl2Entry e;
            switch (chi.kind) {
            case Gl2CharKind::U:
            case Gl2CharKind::V: {
                bool V = chi.kind == Gl2CharKind::V;
                switch (g.kind) {
                case Gl2ClassKind::central: e = term1(V ? qi : 1, 2 * Q1 * a * i % M); break;
                case Gl2ClassKind::nonsemisimple: e = V ? Gl2Entry{} : term1(1, 2 * Q1 * a * i % M); break;
                case Gl2ClassKind::split: e = term1(1, Q1 * a * (i + j) % M); break;
                case Gl2ClassKind::elliptic: e = term1(V ? -1 : 1, Q1 * a * s % M); break;
                }
                break;
            }
            case Gl2CharKind::W:
                switch (g.kind) {
                case Gl2ClassKind::central: e = term1(qi + 1, Q1 * (a + b) * i % M); break;
                case Gl2ClassKind::nonsemisimple: e = term1(1, Q1 * (a + b) * i % M); break;
                case Gl2ClassKind::split: e = term2(1, Q1 * (a * i + b * j) % M, 1, Q1 * (a * j + b * i) % M); break;
                case Gl2ClassKind::elliptic: break;
                }
                break;
            case Gl2CharKind::X: {
                const std::uint64_t th = chi.a;
                switch (g.kind) {
                case Gl2ClassKind::central: e = term1(qi - 1, th * Q1 * i % M); break;
                case Gl2ClassKind::nonsemisimple: e = term1(-1, th * Q1 * i % M); break;
                case Gl2ClassKind::split: break;
                case Gl2ClassKind::elliptic: e = term2(-1, th * s % M, -1, th * s % M * q % M); break;
                }
                break;
            }
            }
            t.entries_[x * t.classes_.size() + y] = e;
        }
    }
    return t;
}

std::pair<Elem, Elem> Gl2Table::ext_power(std::uint64_t s) const
{
    QuadExt E{*field_, ext_modulus_[0], ext_modulus_[1]};
    return E.pow(generator_, s % M_);
}

CycloElem Gl2Table::value(std::size_t chi, std::size_t g) const
{
    const Gl2Entry& e = entry(chi, g);
    std::vector<std::int64_t> terms(M_, 0);
    for (int t = 0; t < e.terms; ++t)
        terms[e.exponent[t]] += e.coeff[t];
    return CycloElem::from_group_ring(M_, terms);
}

bool Gl2Table::is_zero(std::size_t chi, std::size_t g) const
{
    GroupRingAccumulator acc(M_);
    return vanishes(acc, entry(chi, g));
}

nlohmann::json Gl2Table::to_json(bool with_values) const
{
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& c : classes_) {
        nlohmann::json j{{"label", c.label()}, {"kind", kind_name(c.kind)}, {"size", std::to_string(c.size)}};
        j["params"] = c.kind == Gl2ClassKind::split ? nlohmann::json{c.i, c.j} : nlohmann::json{c.i};
        cls.push_back(std::move(j));
    }
    nlohmann::json chs = nlohmann::json::array();
    for (const auto& c : chars_) {
        nlohmann::json j{{"label", c.label()}, {"kind", kind_name(c.kind)}, {"degree", std::to_string(c.degree)}};
        j["params"] = c.kind == Gl2CharKind::W ? nlohmann::json{c.a, c.b} : nlohmann::json{c.a};
        chs.push_back(std::move(j));
    }
    nlohmann::json out{{"q", q_},
                       {"M", M_},
                       {"group_order", std::to_string(group_order_)},
                       {"field_modulus", field_->modulus()},
                       {"ext_modulus", ext_modulus_},
                       {"ext_generator", {generator_.first, generator_.second}},
                       {"classes", cls},
                       {"characters", chs}};
    if (with_values) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t x = 0; x < chars_.size(); ++x) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t y = 0; y < classes_.size(); ++y)
                row.push_back(value(x, y).coeffs());
            rows.push_back(std::move(row));
        }
        out["values"] = std::move(rows);
    }
    return out;
}

VanishingCount vanishing_count(const Gl2Table& table)
{
    const auto& classes = table.classes();
    const auto& chars = table.chars();
    GroupRingAccumulator acc(table.M());
    VanishingCount out;
    out.zero_weight = 0;
    for (std::size_t x = 0; x < chars.size(); ++x)
        for (std::size_t y = 0; y < classes.size(); ++y)
            if (vanishes(acc, table.entry(x, y)))
                out.zero_weight += big(classes[y].size);

    // Second count from the parametrization alone: structural blocks
    // (V on b, W on d, X on c) plus sporadic zeros of W on c and X on d.
    const std::uint64_t q = table.q(), M = table.M();
    BigInt indep = 0;
    for (const auto& chi : chars)
        for (const auto& g : classes) {
            bool zero = false;
            if (chi.kind == Gl2CharKind::V && g.kind == Gl2ClassKind::nonsemisimple)
                zero = true;
            else if (chi.kind == Gl2CharKind::W && g.kind == Gl2ClassKind::elliptic)
                zero = true;
            else if (chi.kind == Gl2CharKind::X && g.kind == Gl2ClassKind::split)
                zero = true;
            else if (q % 2 == 1 && chi.kind == Gl2CharKind::W && g.kind == Gl2ClassKind::split)
                // zeta^((q+1)(a-b)(i-j)) = -1
                zero = (chi.b - chi.a) * static_cast<std::uint64_t>(g.j - g.i) % (q - 1) == (q - 1) / 2;
            else if (q % 2 == 1 && chi.kind == Gl2CharKind::X && g.kind == Gl2ClassKind::elliptic)
                // zeta^(t s (q-1)) = -1
                zero = static_cast<std::uint64_t>(chi.a) * g.i % M * (q - 1) % M == M / 2;
            if (zero)
                indep += big(g.size);
        }
    out.independent_zero_weight = indep;
    BigInt total = big(chars.size()) * big(table.group_order());
    out.proportion = BigRat(total - out.zero_weight, total);
    out.proportion.canonicalize();
    return out;
}

BigRat vanishing_proportion(const Gl2Table& table)
{
    return vanishing_count(table).proportion;
}

BigRat table_ratio_statistic(const Gl2Table& table, const BigRat& eps)
{
    BigInt hit = 0;
    for (const auto& chi : table.chars())
        for (const auto& g : table.classes())
            if (ratio_at_least(big(chi.degree), big(g.size), eps))
                hit += big(g.size);
    BigRat Q(hit, big(table.chars().size()) * big(table.group_order()));
    Q.canonicalize();
    return Q;
}

std::vector<LemmaARow> lemma_A_rows(const Gl2Table& table, const std::vector<BigRat>& eps_grid)
{
    BigRat P = vanishing_proportion(table);
    std::vector<LemmaARow> rows;
    for (const auto& eps : eps_grid) {
        if (eps <= 0)
            throw DomainError("eps must be positive");
        LemmaARow row;
        row.eps = eps;
        row.P = P;
        row.Q = table_ratio_statistic(table, eps);
        row.bound = row.Q + eps * eps;
        row.holds = row.P <= row.bound;
        rows.push_back(row);
    }
    return rows;
}

Report verify_lemma_A(const Gl2Table& table, const std::vector<BigRat>& eps_grid)
{
    Report r("Lemma A, q=" + std::to_string(table.q()));
    for (const auto& row : lemma_A_rows(table, eps_grid))
        r.expect(row.holds, "eps=" + to_string(row.eps),
                 "P=" + to_string(row.P) + " <= Q+eps^2=" + to_string(row.bound));
    return r;
}

Report verify_orthogonality(const Gl2Table& table)
{
    Report r("orthogonality, q=" + std::to_string(table.q()));
    const auto& classes = table.classes();
    const auto& chars = table.chars();
    const std::size_t k = chars.size();
    const std::int64_t G = static_cast<std::int64_t>(table.group_order());
    GroupRingAccumulator acc(table.M());
    auto conj_exp = [M = table.M()](std::uint32_t e) { return e == 0 ? 0u : M - e; };
    auto settle = [&acc]() {
        for (auto c : acc.terms())
            if (c != 0)
                return acc.vanishes();
        return true;
    };

    std::size_t row_bad = 0;
    std::string first_row;
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t x2 = x; x2 < k; ++x2) {
            acc.clear();
            for (std::size_t y = 0; y < classes.size(); ++y) {
                const Gl2Entry& e1 = table.entry(x, y);
                const Gl2Entry& e2 = table.entry(x2, y);
                if (e1.terms == 0 || e2.terms == 0)
                    continue;
                std::int64_t size = static_cast<std::int64_t>(classes[y].size);
                for (int s = 0; s < e1.terms; ++s)
                    for (int t = 0; t < e2.terms; ++t)
                        acc.add(static_cast<std::int64_t>(e1.exponent[s]) + conj_exp(e2.exponent[t]),
                                size * e1.coeff[s] * e2.coeff[t]);
            }
            if (x == x2)
                acc.add(0, -G);
            if (!settle()) {
                if (row_bad++ == 0)
                    first_row = chars[x].label() + " vs " + chars[x2].label();
            }
        }
    r.expect(row_bad == 0, "first orthogonality (rows)",
             row_bad ? std::to_string(row_bad) + " bad pairs, first " + first_row
                     : std::to_string(k * (k + 1) / 2) + " pairs");

    std::size_t col_bad = 0;
    std::string first_col;
    for (std::size_t y = 0; y < classes.size(); ++y)
        for (std::size_t y2 = y; y2 < classes.size(); ++y2) {
            acc.clear();
            for (std::size_t x = 0; x < k; ++x) {
                const Gl2Entry& e1 = table.entry(x, y);
                const Gl2Entry& e2 = table.entry(x, y2);
                for (int s = 0; s < e1.terms; ++s)
                    for (int t = 0; t < e2.terms; ++t)
                        acc.add(static_cast<std::int64_t>(e1.exponent[s]) + conj_exp(e2.exponent[t]),
                                e1.coeff[s] * e2.coeff[t]);
            }
            if (y == y2)
                acc.add(0, -G / static_cast<std::int64_t>(classes[y].size));
            if (!settle()) {
                if (col_bad++ == 0)
                    first_col = classes[y].label() + " vs " + classes[y2].label();
            }
        }
    r.expect(col_bad == 0, "second orthogonality (columns)",
             col_bad ? std::to_string(col_bad) + " bad pairs, first " + first_col
                     : std::to_string(classes.size() * (classes.size() + 1) / 2) + " pairs");
    return r;
}

Report verify_zero_counts(const Gl2Table& table)
{
    Report r("zero counts, q=" + std::to_string(table.q()));
    VanishingCount v = vanishing_count(table);
    r.note("P", to_string(v.proportion));
    r.expect(v.zero_weight == v.independent_zero_weight, "exact zero tests = structural + sporadic count",
             to_string(v.zero_weight) + " vs " + to_string(v.independent_zero_weight));
    return r;
}

Report verify_galois_rows(const Gl2Table& table, std::size_t max_units)
{
    Report r("Galois action on rows, q=" + std::to_string(table.q()));
    const std::uint32_t M = table.M();
    const std::size_t k = table.chars().size(), ncls = table.classes().size();
    auto row_key = [&](std::size_t x, std::uint64_t j) {
        std::vector<std::int64_t> key;
        key.reserve(ncls * 4);
        for (std::size_t y = 0; y < ncls; ++y) {
            const Gl2Entry& e = table.entry(x, y);
            std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
            for (int t = 0; t < e.terms; ++t)
                terms.emplace_back(static_cast<std::uint32_t>(e.exponent[t] * j % M), e.coeff[t]);
            std::sort(terms.begin(), terms.end());
            key.push_back(static_cast<std::int64_t>(terms.size()));
            for (const auto& [ex, c] : terms) {
                key.push_back(ex);
                key.push_back(c);
            }
        }
        return key;
    };
    std::map<std::vector<std::int64_t>, std::size_t> rows;
    for (std::size_t x = 0; x < k; ++x)
        rows.emplace(row_key(x, 1), x);

    std::vector<std::uint64_t> units;
    if (M > 2)
        units.push_back(M - 1);
    for (std::uint64_t j = 2; j < M && units.size() < max_units; ++j)
        if (std::gcd<std::uint64_t>(j, M) == 1 && j != M - 1)
            units.push_back(j);
    for (auto j : units) {
        std::vector<bool> hit(k, false);
        bool ok = true;
        for (std::size_t x = 0; x < k && ok; ++x) {
            auto it = rows.find(row_key(x, j));
            if (it == rows.end() || hit[it->second] || table.chars()[it->second].degree != table.chars()[x].degree)
                ok = false;
            else
                hit[it->second] = true;
        }
        r.expect(ok, "sigma_" + std::to_string(j) + " permutes rows");
    }
    return r;
}

Report verify_burnside_chain(const Gl2Table& table)
{
    Report r("Burnside chain, q=" + std::to_string(table.q()));
    const auto& classes = table.classes();
    const auto& chars = table.chars();
    const BigInt G = big(table.group_order());
    const std::uint32_t M = table.M();
    BigRat total_primed = 0;
    std::size_t nonintegral = 0, small_norm = 0, pairs = 0;
    std::string first_problem;
    for (std::size_t x = 0; x < chars.size(); ++x) {
        const BigInt d = big(chars[x].degree);
        CycloElem norm_sum(M);
        BigRat averaged = 0;
        BigRat primed = 0;
        for (std::size_t y = 0; y < classes.size(); ++y) {
            ++pairs;
            const BigInt s = big(classes[y].size);
            const BigInt g = gcd(d, s);
            CycloElem v = table.value(x, y);
            norm_sum = norm_sum + static_cast<std::int64_t>(classes[y].size) * (v * v.conj());
            auto alpha = divide_by_integer(g.get_si() * v, d.get_si());
            if (!alpha) {
                if (nonintegral++ == 0 && first_problem.empty())
                    first_problem = "non-integral alpha at " + chars[x].label() + ", " + classes[y].label();
                continue;
            }
            if (alpha->is_zero())
                continue;
            BigRat n_alpha = average_galois_norm(*alpha);
            if (n_alpha < 1 && small_norm++ == 0 && first_problem.empty())
                first_problem = "average norm < 1 at " + chars[x].label() + ", " + classes[y].label();
            BigInt ratio = d / g;
            averaged += BigRat(s * ratio * ratio) * n_alpha;
            primed += BigRat(s * ratio * ratio);
        }
        const std::string tag = chars[x].label();
        r.expect(norm_sum == CycloElem::from_integer(M, G.get_si()), tag + ": sum_g |chi(g)|^2 = |G|");
        r.expect(averaged == BigRat(G), tag + ": sum_g (d/(d,s))^2 avg|sigma alpha|^2 = |G|", to_string(averaged));
        r.expect(primed <= BigRat(G), tag + ": restricted sum (d/(d,s))^2 <= |G|", to_string(primed));
        total_primed += primed;
    }
    r.expect(nonintegral == 0, "alpha = chi(g)(d,s)/d integral for all pairs",
             nonintegral ? first_problem : std::to_string(pairs) + " pairs");
    r.expect(small_norm == 0, "Galois-average norm >= 1 for nonzero alpha", small_norm ? first_problem : "");
    BigRat bound = BigRat(G * big(chars.size()));
    r.expect(total_primed <= bound, "summed over characters <= k(G)|G|",
             to_string(total_primed) + " <= " + to_string(bound));
    return r;
}

Report crosscheck_with_glnq(const Gl2Table& table)
{
    Report r("GL(2,q) table vs nu-parametrization, q=" + std::to_string(table.q()));
    const auto& ctx = table.field();
    const FqCtx& F = *ctx;
    const std::uint64_t q = table.q();
    auto h_pow = [&](std::uint64_t i) {
        auto z = table.ext_power((q + 1) * i);
        if (z.second != 0)
            throw ConsistencyError("g2^(q+1) does not lie in F_q");
        return z.first;
    };
    auto linear = [&](Elem root) { return MonicPoly(ctx, Coeffs{F.neg(root), 1}); };

    std::vector<NuMap> mapped;
    bool sizes_ok = true;
    std::string first_bad;
    for (const auto& c : table.classes()) {
        std::vector<NuEntry> entries;
        switch (c.kind) {
        case Gl2ClassKind::central: entries.push_back({linear(h_pow(c.i)), Partition({1, 1})}); break;
        case Gl2ClassKind::nonsemisimple: entries.push_back({linear(h_pow(c.i)), Partition({2})}); break;
        case Gl2ClassKind::split:
            entries.push_back({linear(h_pow(c.i)), Partition({1})});
            entries.push_back({linear(h_pow(c.j)), Partition({1})});
            break;
        case Gl2ClassKind::elliptic: {
            auto z = table.ext_power(c.i);
            auto zq = table.ext_power(static_cast<std::uint64_t>(c.i) * q);
            QuadExt E{F, table.ext_modulus()[0], table.ext_modulus()[1]};
            auto tr = std::make_pair(F.add(z.first, zq.first), F.add(z.second, zq.second));
            auto nm = E.mul(z, zq);
            if (tr.second != 0 || nm.second != 0)
                throw ConsistencyError("trace or norm outside F_q");
            entries.push_back({MonicPoly(ctx, Coeffs{nm.first, F.neg(tr.first), 1}), Partition({1})});
            break;
        }
        }
        NuMap nu(ctx, std::move(entries));
        ClassData cd = class_data(nu);
        if (cd.class_size != big(c.size) || cd.centralizer_order * big(c.size) != big(table.group_order())) {
            if (sizes_ok)
                first_bad = c.label() + " <-> " + nu.to_string();
            sizes_ok = false;
        }
        mapped.push_back(std::move(nu));
    }
    r.expect(sizes_ok, "class sizes and centralizers agree", first_bad);

    std::vector<NuMap> all = enumerate_numaps(2, ctx);
    auto key = [](const NuMap& nu) { return nu.to_string(); };
    std::vector<std::string> a, b;
    for (const auto& nu : mapped)
        a.push_back(key(nu));
    for (const auto& nu : all)
        b.push_back(key(nu));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    r.expect(a == b, "class map is a bijection onto degree-2 nu-maps",
             std::to_string(a.size()) + " classes, " + std::to_string(b.size()) + " maps");

    std::vector<BigInt> table_degrees, formula_degrees;
    for (const auto& chi : table.chars())
        table_degrees.push_back(big(chi.degree));
    for (const auto& nu : all)
        formula_degrees.push_back(char_degree(nu).degree);
    std::sort(table_degrees.begin(), table_degrees.end());
    std::sort(formula_degrees.begin(), formula_degrees.end());
    r.expect(table_degrees == formula_degrees, "degree multisets agree");

    for (const BigRat& eps : {BigRat(1, 2), BigRat(1, 5)}) {
        BigRat a_q = table_ratio_statistic(table, eps);
        BigRat b_q = ratio_statistic_exact(2, q, eps).Q;
        r.expect(a_q == b_q, "Q(" + to_string(eps) + ") from table = from nu-maps",
                 to_string(a_q) + " vs " + to_string(b_q));
    }
    return r;
}

} // namespace glqv
