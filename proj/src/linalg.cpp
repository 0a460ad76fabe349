#include "spreadcode/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace spreadcode {

Vec Mat::row(int r) const {
    Vec out(cols);
    for (int c = 0; c < cols; ++c) out[c] = at(r, c);
    return out;
}

std::vector<Vec> Mat::to_rows() const {
    std::vector<Vec> out;
    out.reserve(rows);
    for (int r = 0; r < rows; ++r) out.push_back(row(r));
    return out;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
    Mat m((int)rows.size(), cols);
    for (int r = 0; r < m.rows; ++r) {
        if ((int)rows[r].size() != cols)
            throw std::invalid_argument("row length mismatch");
        for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

felem dot(const Field& F, const Vec& x, const Vec& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("dot: dimension mismatch");
    felem acc = 0;
    for (size_t i = 0; i < x.size(); ++i) acc = F.add(acc, F.mul(x[i], y[i]));
    return acc;
}

RrefResult rref(const Field& F, Mat A) {
    RrefResult res;
    int cur = 0;
    for (int col = 0; col < A.cols && cur < A.rows; ++col) {
        int pivot = -1;
        for (int r = cur; r < A.rows; ++r) {
            if (A.at(r, col) != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != cur)
            for (int c = 0; c < A.cols; ++c) std::swap(A.at(pivot, c), A.at(cur, c));
        felem inv = F.inv(A.at(cur, col));
        for (int c = col; c < A.cols; ++c) A.at(cur, c) = F.mul(A.at(cur, c), inv);
        for (int r = 0; r < A.rows; ++r) {
            if (r == cur || A.at(r, col) == 0) continue;
            felem factor = A.at(r, col);
            for (int c = col; c < A.cols; ++c)
                A.at(r, c) = F.sub(A.at(r, c), F.mul(factor, A.at(cur, c)));
        }
        res.pivots.push_back(col);
        ++cur;
    }
    res.rank = cur;
    res.mat = std::move(A);
    return res;
}

Subspace Subspace::from_rows(const Field& F, const std::vector<Vec>& rows, int m) {
    RrefResult r = rref(F, Mat::from_rows(rows, m));
    Mat basis(r.rank, m);
    for (int i = 0; i < r.rank; ++i)
        for (int c = 0; c < m; ++c) basis.at(i, c) = r.mat.at(i, c);
    return Subspace{m, std::move(basis)};
}

int span_dim(const Field& F, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return 0;
    return rref(F, Mat::from_rows(vectors, (int)vectors[0].size())).rank;
}

Subspace nullspace(const Field& F, const std::vector<Vec>& vectors, int m) {
    if (vectors.empty()) {
        return Subspace{m, Mat::identity(m)};
    }
    RrefResult r = rref(F, Mat::from_rows(vectors, m));
    std::vector<bool> is_pivot(m, false);
    for (int c : r.pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int fc = 0; fc < m; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(m, 0);
        v[fc] = 1;
        for (int i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = F.neg(r.mat.at(i, fc));
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Subspace{m, Mat(0, m)};
    return Subspace::from_rows(F, basis, m);
}

Subspace dual(const Field& F, const Subspace& U) {
    return nullspace(F, U.basis.to_rows(), U.m);
}

int intersection_dim(const Field& F, const Subspace& U, const Subspace& V) {
    if (U.m != V.m) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Vec> stacked = U.basis.to_rows();
    for (auto& row : V.basis.to_rows()) stacked.push_back(row);
    int sum_dim = stacked.empty() ? 0 : span_dim(F, stacked);
    return U.dim() + V.dim() - sum_dim;
}

Subspace intersection(const Field& F, const Subspace& U, const Subspace& V) {
    if (U.m != V.m) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Vec> duals = dual(F, U).basis.to_rows();
    for (auto& row : dual(F, V).basis.to_rows()) duals.push_back(row);
    return nullspace(F, duals, U.m);
}

bool subspace_contains(const Field& F, const Subspace& U, const Vec& v) {
    if ((int)v.size() != U.m) throw std::invalid_argument("dimension mismatch");
    std::vector<Vec> rows = U.basis.to_rows();
    rows.push_back(v);
    return span_dim(F, rows) == U.dim();
}

bool proportional(const Field& F, const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    std::vector<Vec> rows{x, y};
    return span_dim(F, rows) <= 1;
}

long long projective_count(const Field& F, int m) {
    long long qm = 1;
    for (int i = 0; i < m; ++i) qm *= F.q();
    return (qm - 1) / (F.q() - 1);
}

std::vector<Vec> projective_representatives(const Field& F, int m) {
    if (m < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    const int q = F.q();
    std::vector<Vec> out;
    out.reserve((size_t)projective_count(F, m));
    for (int first = m - 1; first >= 0; --first) {
        int tail = m - first - 1;
        long long count = 1;
        for (int i = 0; i < tail; ++i) count *= q;
        for (long long t = 0; t < count; ++t) {
            Vec v(m, 0);
            v[first] = 1;
            long long rem = t;
            for (int i = tail - 1; i >= 0; --i) {
                v[first + 1 + i] = (felem)(rem % q);
                rem /= q;
            }
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<Vec> enumerate_subspace(const Field& F, const Subspace& U) {
    const int q = F.q();
    const int k = U.dim();
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= q;

    std::vector<Vec> out;
    out.reserve((size_t)count);
    for (long long idx = 0; idx < count; ++idx) {
        Vec v(U.m, 0);
        long long rem = idx;
        for (int i = k - 1; i >= 0; --i) {
            felem lambda = (felem)(rem % q);
            rem /= q;
            if (lambda == 0) continue;
            for (int c = 0; c < U.m; ++c)
                v[c] = F.add(v[c], F.mul(lambda, U.basis.at(i, c)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace spreadcode
