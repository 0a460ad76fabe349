// Exact linear algebra over GF(q): RREF, spans, duals, and deterministic
// enumeration of projective representatives and subspace points.
//
// Vectors are rows of element codes. All orderings are lexicographic with
// the leftmost coordinate most significant, so every enumeration here is
// reproducible bit for bit.

#ifndef SPREADCODE_LINALG_HPP
#define SPREADCODE_LINALG_HPP

#include <vector>

#include "spreadcode/field.hpp"

namespace spreadcode {

using Vec = std::vector<felem>;

struct Mat {
    int rows = 0, cols = 0;
    std::vector<felem> a;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

    felem& at(int r, int c) { return a[(size_t)r * cols + c]; }
    felem at(int r, int c) const { return a[(size_t)r * cols + c]; }

    Vec row(int r) const;
    std::vector<Vec> to_rows() const;
    static Mat from_rows(const std::vector<Vec>& rows, int cols);
    static Mat identity(int n);

    bool operator==(const Mat& other) const = default;
};

struct RrefResult {
    Mat mat;
    int rank = 0;
    std::vector<int> pivots;  // pivot column per nonzero row
};

// A subspace of GF(q)^m held as its canonical reduced-row-echelon basis.
// Two subspaces are equal iff their representations are equal.
struct Subspace {
    int m = 0;
    Mat basis;  // RREF, one row per dimension

    int dim() const { return basis.rows; }
    bool operator==(const Subspace& other) const = default;

    // Canonicalizes an arbitrary spanning set (zero rows dropped).
    static Subspace from_rows(const Field& F, const std::vector<Vec>& rows, int m);
};

felem dot(const Field& F, const Vec& x, const Vec& y);

// Reduced row-echelon form with deterministic pivoting: leftmost nonzero
// column, topmost available row.
RrefResult rref(const Field& F, Mat A);

int span_dim(const Field& F, const std::vector<Vec>& vectors);

// Basis of { v : v s^T = 0 for all s in S }, canonical RREF. Empty S is the
// full space. dim Span(S) + dim nullspace(S) = m.
Subspace nullspace(const Field& F, const std::vector<Vec>& vectors, int m);

Subspace dual(const Field& F, const Subspace& U);

int intersection_dim(const Field& F, const Subspace& U, const Subspace& V);

// Canonical basis of U ∩ V (dual of the union of the duals).
Subspace intersection(const Field& F, const Subspace& U, const Subspace& V);

bool subspace_contains(const Field& F, const Subspace& U, const Vec& v);

bool proportional(const Field& F, const Vec& x, const Vec& y);

// One representative per scalar class of nonzero vectors, first nonzero
// coordinate normalized to 1, in ascending lexicographic order. Exactly
// (q^m - 1)/(q - 1) vectors.
std::vector<Vec> projective_representatives(const Field& F, int m);
long long projective_count(const Field& F, int m);

// All q^dim points of U as combinations of the basis rows, in lexicographic
// order of the coefficient tuple (first coefficient most significant).
// Includes the zero vector (first).
std::vector<Vec> enumerate_subspace(const Field& F, const Subspace& U);

}  // namespace spreadcode

#endif
