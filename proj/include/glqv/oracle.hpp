#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <json.hpp>

#include "glqv/common.hpp"
#include "glqv/fqpoly.hpp"
#include "glqv/glnq.hpp"
#include "glqv/report.hpp"

namespace glqv {

inline constexpr std::uint64_t kMaxSnapshotOrder = 100000;

// n x n matrix over F_q, row-major.
using Matrix = std::vector<Elem>;

struct OracleClass {
    std::size_t representative = 0; // index into elements
    std::uint64_t size = 0;
    std::uint64_t centralizer_order = 0; // by commutation counting
    Coeffs char_poly;                    // det(xI - g), ascending
};

// Every element of GL(n,q), with conjugacy classes found by brute force.
struct MatrixGroupSnapshot {
    int n = 0;
    std::uint64_t q = 0;
    std::shared_ptr<const FqCtx> ctx;
    std::vector<Matrix> elements;
    std::vector<std::size_t> class_of; // per element
    std::vector<OracleClass> classes;

    nlohmann::json to_json() const;
};

// Throws ResourceError when |GL(n,q)| exceeds the cap (10^5, GLQV_CAP overrides).
MatrixGroupSnapshot snapshot(int n, std::uint64_t q);

Matrix mat_mul(const FqCtx& F, int n, const Matrix& a, const Matrix& b);
int mat_rank(const FqCtx& F, int n, Matrix a);
Coeffs char_poly(const FqCtx& F, int n, const Matrix& a);

// Jordan profile of f in g: block sizes from nullity increments of f(g)^j.
Partition jordan_partition(const FqCtx& F, int n, const Matrix& g, const Coeffs& f, int multiplicity);

// The nu-map of the class of g, from its characteristic polynomial and rank sequences.
NuMap nu_of_matrix(const MatrixGroupSnapshot& snap, const Matrix& g);

// Class sizes, centralizers, Fact and the class count against the
// nu-parametrization.
Report match_parametrization(const MatrixGroupSnapshot& snap);

// Character table of GL(2,2) = S_3 from its permutation action on the three
// nonzero vectors: trivial, sign, and (fixed points - 1). Columns follow
// snap.classes.
struct SmallCharTable {
    std::vector<std::uint64_t> class_sizes;
    std::vector<std::vector<std::int64_t>> values;
};
SmallCharTable gl22_character_table(const MatrixGroupSnapshot& snap);

// Class-size weighted proportion of nonzero entries.
BigRat nonvanishing_proportion(const SmallCharTable& table);

} // namespace glqv
