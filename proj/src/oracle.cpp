#include "glqv/oracle.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace glqv {

namespace {

std::uint64_t encode(const Matrix& a, std::uint64_t q)
{
    std::uint64_t code = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        code = code * q + *it;
    return code;
}

// Rank of a rows x cols matrix by Gaussian elimination.
int rank_rows(const FqCtx& F, int rows, int cols, Matrix a)
{
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r * cols + c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        for (int k = 0; k < cols; ++k)
            std::swap(a[rank * cols + k], a[pivot * cols + k]);
        Elem inv = F.inv(a[rank * cols + c]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r * cols + c] == 0)
                continue;
            Elem factor = F.mul(a[r * cols + c], inv);
            for (int k = c; k < cols; ++k)
                a[r * cols + k] = F.sub(a[r * cols + k], F.mul(factor, a[rank * cols + k]));
        }
        ++rank;
    }
    return rank;
}

Matrix identity(int n)
{
    Matrix I(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        I[i * n + i] = 1;
    return I;
}

Matrix mat_inverse(const FqCtx& F, int n, const Matrix& a)
{
    // Gauss-Jordan on [a | I].
    int w = 2 * n;
    Matrix aug(static_cast<std::size_t>(n * w), 0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            aug[r * w + c] = a[r * n + c];
        aug[r * w + n + r] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (aug[r * w + c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw ConsistencyError("singular matrix in the group");
        for (int k = 0; k < w; ++k)
            std::swap(aug[c * w + k], aug[pivot * w + k]);
        Elem inv = F.inv(aug[c * w + c]);
        for (int k = 0; k < w; ++k)
            aug[c * w + k] = F.mul(aug[c * w + k], inv);
        for (int r = 0; r < n; ++r) {
            if (r == c || aug[r * w + c] == 0)
                continue;
            Elem factor = aug[r * w + c];
            for (int k = 0; k < w; ++k)
                aug[r * w + k] = F.sub(aug[r * w + k], F.mul(factor, aug[c * w + k]));
        }
    }
    Matrix out(static_cast<std::size_t>(n * n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out[r * n + c] = aug[r * w + n + c];
    return out;
}

// Determinant of a matrix of polynomials by cofactor expansion along row 0.
Coeffs poly_det(const FqCtx& F, const std::vector<Coeffs>& m, int n)
{
    if (n == 1)
        return m[0];
    Coeffs det;
    for (int c = 0; c < n; ++c) {
        std::vector<Coeffs> minor;
        for (int r = 1; r < n; ++r)
            for (int k = 0; k < n; ++k)
                if (k != c)
                    minor.push_back(m[r * n + k]);
        Coeffs term = poly::mul(F, m[c], poly_det(F, minor, n - 1));
        det = c % 2 == 0 ? poly::add(F, det, term) : poly::sub(F, det, term);
    }
    poly::trim(det);
    return det;
}

Matrix evaluate(const FqCtx& F, int n, const Coeffs& f, const Matrix& g)
{
    Matrix B(static_cast<std::size_t>(n * n), 0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        B = mat_mul(F, n, B, g);
        for (int i = 0; i < n; ++i)
            B[i * n + i] = F.add(B[i * n + i], *it);
    }
    return B;
}

BigInt big(std::uint64_t x)
{
    return BigInt(std::to_string(x));
}

} // namespace

Matrix mat_mul(const FqCtx& F, int n, const Matrix& a, const Matrix& b)
{
    Matrix c(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Elem x = a[i * n + k];
            if (x == 0)
                continue;
            for (int j = 0; j < n; ++j)
                c[i * n + j] = F.add(c[i * n + j], F.mul(x, b[k * n + j]));
        }
    return c;
}

int mat_rank(const FqCtx& F, int n, Matrix a)
{
    return rank_rows(F, n, n, std::move(a));
}

Coeffs char_poly(const FqCtx& F, int n, const Matrix& a)
{
    std::vector<Coeffs> m(static_cast<std::size_t>(n * n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Coeffs e{F.neg(a[r * n + c])};
            if (r == c)
                e.push_back(1);
            poly::trim(e);
            m[r * n + c] = e;
        }
    return poly_det(F, m, n);
}

Partition jordan_partition(const FqCtx& F, int n, const Matrix& g, const Coeffs& f, int multiplicity)
{
    const int d = poly::degree(f);
    Matrix B = evaluate(F, n, f, g);
    Matrix P = identity(n);
    std::vector<int> at_least; // blocks of size >= j
    int prev_nullity = 0;
    for (int j = 1; j <= multiplicity; ++j) {
        P = mat_mul(F, n, P, B);
        int nullity = n - mat_rank(F, n, P);
        int step = nullity - prev_nullity;
        if (step % d != 0)
            throw ConsistencyError("nullity increment not a multiple of deg f");
        if (step == 0)
            break;
        at_least.push_back(step / d);
        prev_nullity = nullity;
    }
    if (prev_nullity != d * multiplicity)
        throw ConsistencyError("generalized eigenspace has the wrong dimension");
    return Partition(at_least).conjugate();
}

NuMap nu_of_matrix(const MatrixGroupSnapshot& snap, const Matrix& g)
{
    const FqCtx& F = *snap.ctx;
    MonicPoly p(snap.ctx, char_poly(F, snap.n, g));
    std::vector<NuEntry> entries;
    for (const auto& pf : factor_poly(p))
        entries.push_back({pf.factor, jordan_partition(F, snap.n, g, pf.factor.coeffs(), pf.multiplicity)});
    return NuMap(snap.ctx, std::move(entries));
}

MatrixGroupSnapshot snapshot(int n, std::uint64_t q)
{
    if (n < 1)
        throw DomainError("snapshot: n must be >= 1");
    BigInt order = group_order(n, q);
    std::uint64_t cap = enumeration_cap(kMaxSnapshotOrder);
    if (order > big(cap))
        throw ResourceError("|GL(" + std::to_string(n) + "," + std::to_string(q) + ")| = " + to_string(order) +
                            " exceeds the snapshot cap " + std::to_string(cap));
    MatrixGroupSnapshot s;
    s.n = n;
    s.q = q;
    s.ctx = FqCtx::make(q);
    const FqCtx& F = *s.ctx;

    std::uint64_t vectors = 1;
    for (int i = 0; i < n; ++i)
        vectors *= q;
    Matrix rows;
    // Row by row, keeping only rows independent of those above.
    auto extend = [&](auto&& self, int r) -> void {
        if (r == n) {
            s.elements.push_back(rows);
            return;
        }
        for (std::uint64_t v = 0; v < vectors; ++v) {
            std::uint64_t x = v;
            for (int c = 0; c < n; ++c) {
                rows.push_back(static_cast<Elem>(x % q));
                x /= q;
            }
            if (rank_rows(F, r + 1, n, rows) == r + 1)
                self(self, r + 1);
            rows.resize(rows.size() - static_cast<std::size_t>(n));
        }
    };
    extend(extend, 0);
    if (big(s.elements.size()) != order)
        throw ConsistencyError("enumerated " + std::to_string(s.elements.size()) + " matrices, expected " +
                               to_string(order));

    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(s.elements.size() * 2);
    for (std::size_t i = 0; i < s.elements.size(); ++i)
        index.emplace(encode(s.elements[i], q), i);
    std::vector<Matrix> inverses;
    inverses.reserve(s.elements.size());
    for (const auto& g : s.elements)
        inverses.push_back(mat_inverse(F, n, g));

    const std::size_t none = s.elements.size();
    s.class_of.assign(s.elements.size(), none);
    for (std::size_t x = 0; x < s.elements.size(); ++x) {
        if (s.class_of[x] != none)
            continue;
        const std::size_t id = s.classes.size();
        OracleClass c;
        c.representative = x;
        const Matrix& X = s.elements[x];
        for (std::size_t g = 0; g < s.elements.size(); ++g) {
            Matrix gx = mat_mul(F, n, s.elements[g], X);
            if (gx == mat_mul(F, n, X, s.elements[g]))
                ++c.centralizer_order;
            std::size_t y = index.at(encode(mat_mul(F, n, gx, inverses[g]), q));
            if (s.class_of[y] == none) {
                s.class_of[y] = id;
                ++c.size;
            } else if (s.class_of[y] != id) {
                throw ConsistencyError("conjugation orbits overlap");
            }
        }
        c.char_poly = char_poly(F, n, X);
        s.classes.push_back(std::move(c));
    }
    return s;
}

nlohmann::json MatrixGroupSnapshot::to_json() const
{
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& c : classes)
        cls.push_back({{"representative", elements[c.representative]},
                       {"size", std::to_string(c.size)},
                       {"centralizer_order", std::to_string(c.centralizer_order)},
                       {"char_poly", c.char_poly},
                       {"nu", nu_of_matrix(*this, elements[c.representative]).to_json()}});
    return {{"n", n}, {"q", q}, {"order", std::to_string(elements.size())}, {"classes", cls}};
}

Report match_parametrization(const MatrixGroupSnapshot& snap)
{
    Report r("oracle GL(" + std::to_string(snap.n) + "," + std::to_string(snap.q) + ")");
    const BigInt G = group_order(snap.n, snap.q);
    BigInt total = 0;
    std::set<std::string> seen;
    bool distinct = true;
    for (const auto& c : snap.classes) {
        const Matrix& g = snap.elements[c.representative];
        total += big(c.size);
        NuMap nu = nu_of_matrix(snap, g);
        ClassData cd = class_data(nu);
        std::string tag = "class of " + nlohmann::json(g).dump() + " <-> " + nu.to_string();
        r.expect(big(c.size) * big(c.centralizer_order) == G, tag + ": orbit size * centralizer = |G|");
        r.expect(cd.class_size == big(c.size), tag + ": class size",
                 std::to_string(c.size) + " vs " + to_string(cd.class_size));
        r.expect(cd.centralizer_order == big(c.centralizer_order), tag + ": centralizer order",
                 std::to_string(c.centralizer_order) + " vs " + to_string(cd.centralizer_order));
        r.expect(cd.char_poly.coeffs() == c.char_poly, tag + ": characteristic polynomial");
        r.expect(factor_count(MonicPoly(snap.ctx, c.char_poly)) == cd.fact, tag + ": Fact(p_g) = sum |lambda(f)|");
        distinct = seen.insert(nu.to_string()).second && distinct;
    }
    r.expect(total == G, "sum of orbit sizes = |G|", to_string(total));
    r.expect(distinct, "distinct classes give distinct nu-maps");
    BigInt dp = count_numaps(snap.n, snap.q);
    r.expect(dp == big(snap.classes.size()), "orbit count = count_numaps",
             std::to_string(snap.classes.size()) + " vs " + to_string(dp));
    std::set<std::string> enumerated;
    for (const auto& nu : enumerate_numaps(snap.n, snap.ctx))
        enumerated.insert(nu.to_string());
    r.expect(enumerated == seen, "matched nu-maps = enumerated nu-maps");
    return r;
}

SmallCharTable gl22_character_table(const MatrixGroupSnapshot& snap)
{
    if (snap.n != 2 || snap.q != 2)
        throw DomainError("gl22_character_table needs the GL(2,2) snapshot");
    const FqCtx& F = *snap.ctx;
    const std::vector<std::pair<Elem, Elem>> points{{1, 0}, {0, 1}, {1, 1}};
    SmallCharTable t;
    t.values.assign(3, {});
    for (const auto& c : snap.classes) {
        const Matrix& g = snap.elements[c.representative];
        std::vector<int> perm;
        for (const auto& [x, y] : points) {
            std::pair<Elem, Elem> img{F.add(F.mul(g[0], x), F.mul(g[1], y)), F.add(F.mul(g[2], x), F.mul(g[3], y))};
            perm.push_back(static_cast<int>(std::find(points.begin(), points.end(), img) - points.begin()));
        }
        int fixed = 0, inversions = 0;
        for (int i = 0; i < 3; ++i) {
            fixed += perm[i] == i;
            for (int j = i + 1; j < 3; ++j)
                inversions += perm[i] > perm[j];
        }
        t.class_sizes.push_back(c.size);
        t.values[0].push_back(1);
        t.values[1].push_back(inversions % 2 == 0 ? 1 : -1);
        t.values[2].push_back(fixed - 1);
    }
    return t;
}

BigRat nonvanishing_proportion(const SmallCharTable& table)
{
    BigInt order = 0;
    for (auto s : table.class_sizes)
        order += big(s);
    BigInt nonzero = 0;
    for (const auto& row : table.values)
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0)
                nonzero += big(table.class_sizes[j]);
    BigRat p(nonzero, order * big(table.values.size()));
    p.canonicalize();
    return p;
}

} // namespace glqv
