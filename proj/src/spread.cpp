#include "spreadcode/spread.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spreadcode {

namespace {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

long long pow_ll(int base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

std::string vec_to_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

PartialSpread validate_spread(FieldPtr field, std::vector<Subspace> members) {
    if (!field) throw std::invalid_argument("spread: missing field");
    const int s = (int)members.size();
    if (s < 2) throw std::invalid_argument("spread needs at least 2 members");

    const int m = members[0].m;
    if (m < 2 || m % 2 != 0) {
        std::ostringstream os;
        os << "ambient dimension must be even and positive, got " << m;
        throw std::invalid_argument(os.str());
    }
    const int k = m / 2;

    for (int i = 0; i < s; ++i) {
        if (members[i].m != m) {
            std::ostringstream os;
            os << "member " << i << " lives in dimension " << members[i].m
               << ", expected " << m;
            throw std::invalid_argument(os.str());
        }
        if (members[i].dim() != k) {
            std::ostringstream os;
            os << "member " << i << " has dimension " << members[i].dim()
               << ", expected " << k;
            throw std::invalid_argument(os.str());
        }
    }

    long long bound = pow_ll(field->q(), k) + 1;
    if (s > bound) {
        std::ostringstream os;
        os << "spread size " << s << " exceeds q^k+1 = " << bound;
        throw std::invalid_argument(os.str());
    }

    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            if (intersection_dim(*field, members[i], members[j]) != 0) {
                Subspace common = intersection(*field, members[i], members[j]);
                std::ostringstream os;
                os << "members " << i << " and " << j
                   << " intersect nontrivially, common vector "
                   << vec_to_string(common.basis.row(0));
                throw std::invalid_argument(os.str());
            }
        }
    }

    return PartialSpread{std::move(field), k, m, std::move(members)};
}

PartialSpread scalar_graph_family(FieldPtr field, int k, std::vector<felem> subset) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw std::invalid_argument("scalar subset contains duplicates");
    if ((int)subset.size() < 2)
        throw std::invalid_argument("scalar subset needs at least 2 elements");
    for (felem b : subset)
        if (b >= field->q()) throw std::invalid_argument("scalar code out of range");

    const int m = 2 * k;
    std::vector<Subspace> members;
    members.reserve(subset.size());
    for (felem b : subset) {
        std::vector<Vec> rows;
        for (int i = 0; i < k; ++i) {
            Vec v(m, 0);
            v[i] = 1;
            v[k + i] = b;
            rows.push_back(std::move(v));
        }
        members.push_back(Subspace::from_rows(*field, rows, m));
    }
    return validate_spread(std::move(field), std::move(members));
}

Mat companion_matrix(const Field& F, const Poly& f) {
    int k = poly_degree(f);
    if (k < 1 || f[k] != 1) throw std::invalid_argument("companion: need monic f, deg >= 1");
    Mat M(k, k);
    for (int i = 0; i + 1 < k; ++i) M.at(i, i + 1) = 1;
    for (int j = 0; j < k; ++j) M.at(k - 1, j) = F.neg(f[j]);
    return M;
}

namespace {

// Row i = coordinates of t^i * lambda in GF(q)[t]/(f), basis 1, t, ..., t^(k-1).
Mat multiplication_matrix(const Field& F, const Poly& f, const Poly& lambda) {
    int k = poly_degree(f);
    Mat M(k, k);
    Poly cur = poly_mod(F, lambda, f);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j <= poly_degree(cur); ++j) M.at(i, j) = cur[j];
        cur.insert(cur.begin(), 0);  // multiply by t
        cur = poly_mod(F, cur, f);
    }
    return M;
}

Subspace graph_member(const Field& F, const Mat& M, int k) {
    const int m = 2 * k;
    std::vector<Vec> rows;
    for (int i = 0; i < k; ++i) {
        Vec v(m, 0);
        v[i] = 1;
        for (int j = 0; j < k; ++j) v[k + j] = M.at(i, j);
        rows.push_back(std::move(v));
    }
    return Subspace::from_rows(F, rows, m);
}

Subspace infinity_member(const Field& F, int k) {
    const int m = 2 * k;
    std::vector<Vec> rows;
    for (int i = 0; i < k; ++i) {
        Vec v(m, 0);
        v[k + i] = 1;
        rows.push_back(std::move(v));
    }
    return Subspace::from_rows(F, rows, m);
}

}  // namespace

PartialSpread desarguesian_spread(FieldPtr field, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const Field& F = *field;
    Poly f = find_irreducible(F, k);

    const long long total = pow_ll(F.q(), k);
    std::vector<Subspace> members;
    members.reserve((size_t)total + 1);
    for (long long code = 0; code < total; ++code) {
        Poly lambda;
        long long rem = code;
        for (int i = 0; i < k; ++i) { lambda.push_back((felem)(rem % F.q())); rem /= F.q(); }
        members.push_back(graph_member(F, multiplication_matrix(F, f, lambda), k));
    }
    members.push_back(infinity_member(F, k));
    return validate_spread(std::move(field), std::move(members));
}

PartialSpread companion_spread(FieldPtr field, int k) {
    if (k < 2) throw std::invalid_argument("companion spread needs k >= 2");
    const Field& F = *field;
    const int m = 2 * k;

    Poly f = find_irreducible(F, k);
    Mat M = companion_matrix(F, f);

    std::vector<Subspace> members;
    // (x, 0)
    {
        std::vector<Vec> rows;
        for (int i = 0; i < k; ++i) {
            Vec v(m, 0);
            v[i] = 1;
            rows.push_back(std::move(v));
        }
        members.push_back(Subspace::from_rows(F, rows, m));
    }
    // (0, x)
    members.push_back(infinity_member(F, k));
    // (x, x)
    members.push_back(graph_member(F, Mat::identity(k), k));
    // (x, xM)
    members.push_back(graph_member(F, M, k));
    return validate_spread(std::move(field), std::move(members));
}

PartialSpread dual_spread(const PartialSpread& spread) {
    std::vector<Subspace> duals;
    duals.reserve(spread.members.size());
    for (const auto& member : spread.members)
        duals.push_back(dual(*spread.field, member));
    return validate_spread(spread.field, std::move(duals));
}

PartialSpread random_partial_spread(FieldPtr field, int k, int s, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    long long bound = pow_ll(field->q(), k) + 1;
    if (s < 2 || s > bound) {
        std::ostringstream os;
        os << "target size " << s << " outside [2, q^k+1] = [2, " << bound << "]";
        throw std::invalid_argument(os.str());
    }

    const Field& F = *field;
    const int m = 2 * k;
    SplitMix64 rng(seed);

    std::vector<Subspace> accepted;
    int consecutive_rejections = 0;
    while ((int)accepted.size() < s) {
        std::vector<Vec> rows(k, Vec(m, 0));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < m; ++c)
                rows[r][c] = (felem)(rng.next() % F.q());

        Subspace cand = Subspace::from_rows(F, rows, m);
        bool ok = cand.dim() == k;
        if (ok) {
            for (const auto& member : accepted) {
                if (intersection_dim(F, member, cand) != 0) { ok = false; break; }
            }
        }
        if (ok) {
            accepted.push_back(std::move(cand));
            consecutive_rejections = 0;
        } else if (++consecutive_rejections >= 10000) {
            std::ostringstream os;
            os << "target s not reached: " << accepted.size() << " of " << s
               << " members after 10000 consecutive rejections";
            throw SpreadBuildError(os.str(), (int)accepted.size());
        }
    }
    return validate_spread(std::move(field), std::move(accepted));
}

PartialSpread subfamily(const PartialSpread& spread, const std::vector<int>& indices) {
    if ((int)indices.size() < 2)
        throw std::invalid_argument("subfamily needs at least 2 indices");
    std::set<int> seen;
    std::vector<Subspace> members;
    for (int idx : indices) {
        if (idx < 0 || idx >= spread.size()) {
            std::ostringstream os;
            os << "index " << idx << " out of range [0, " << spread.size() << ")";
            throw std::invalid_argument(os.str());
        }
        if (!seen.insert(idx).second) {
            std::ostringstream os;
            os << "duplicate index " << idx;
            throw std::invalid_argument(os.str());
        }
        members.push_back(spread.members[idx]);
    }
    return validate_spread(spread.field, std::move(members));
}

}  // namespace spreadcode
