#include "spreadcode/minimality.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <stdexcept>

#include "parallel_util.hpp"

namespace spreadcode {

namespace {

constexpr long long kBruteForceGuard = 1LL << 20;

bool is_zero_vec(const Vec& v) {
    for (felem c : v)
        if (c != 0) return false;
    return true;
}

void require_full_rank(const DefiningSet& D, const char* what) {
    if (D.rank != D.m) {
        std::ostringstream os;
        os << what << " requires r(D) = m, got r(D) = " << D.rank << " with m = " << D.m;
        throw std::invalid_argument(os.str());
    }
}

long long ambient_size(const DefiningSet& D) {
    long long qm = 1;
    for (int i = 0; i < D.m; ++i) {
        qm *= D.field->q();
        if (qm > (1LL << 40)) return qm;  // beyond any guard already
    }
    return qm;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Minimal: return "Minimal";
        case Verdict::NotMinimal: return "NotMinimal";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Geometric: return "geometric";
        case Method::BruteForce: return "bruteforce";
        case Method::AbBound: return "ab_bound";
    }
    return "?";
}

HyperplaneRestriction restriction(const Vec& y, const DefiningSet& D) {
    if ((int)y.size() != D.m) throw std::invalid_argument("restriction: length mismatch");
    if (is_zero_vec(y)) throw std::invalid_argument("restriction: y must be nonzero");

    HyperplaneRestriction h;
    h.y = y;
    for (int i = 0; i < D.n(); ++i) {
        if (dot(*D.field, y, D.points[i]) == 0) {
            h.indices.push_back(i);
            h.members.push_back(D.points[i]);
        }
    }
    h.v_dim = span_dim(*D.field, h.members);
    return h;
}

bool is_codeword_minimal(const Vec& y, const DefiningSet& D) {
    require_full_rank(D, "is_codeword_minimal");
    return restriction(y, D).v_dim == D.m - 1;
}

Vec covering_certificate(const Vec& y0, const DefiningSet& D) {
    require_full_rank(D, "covering_certificate");
    HyperplaneRestriction h = restriction(y0, D);
    if (h.v_dim >= D.m - 1)
        throw std::invalid_argument("covering_certificate: restriction spans a hyperplane");

    const Field& F = *D.field;
    Subspace perp = nullspace(F, h.members, D.m);

    // y0 itself lies in perp and dim perp >= 2, so a non-proportional
    // candidate always exists.
    std::optional<Vec> best;
    for (const auto& x : enumerate_subspace(F, perp)) {
        if (is_zero_vec(x) || proportional(F, x, y0)) continue;
        if (!best || x < *best) best = x;
    }
    if (!best) throw std::logic_error("covering_certificate: no candidate found");

    if (!covers(codeword(*best, D), codeword(y0, D)) || proportional(F, *best, y0))
        throw std::logic_error("covering_certificate: replay validation failed");
    return *best;
}

MinimalityReport check_geometric(const DefiningSet& D, int threads) {
    require_full_rank(D, "check_geometric");
    const Field& F = *D.field;
    const auto reps = projective_representatives(F, D.m);
    const long long total = (long long)reps.size();
    const int hyperplane_dim = D.m - 1;

    // First failing index wins regardless of schedule; workers skip past it.
    std::atomic<long long> first_fail(total);
    struct ChunkStats {
        long long checked = 0;
        int min_vdim = -1, max_vdim = -1;
    };
    std::vector<ChunkStats> chunk_stats((size_t)std::max(1, threads));

    detail::run_chunked(total, threads, [&](long long begin, long long end, int chunk) {
        ChunkStats local;
        for (long long i = begin; i < end; ++i) {
            if (i > first_fail.load(std::memory_order_relaxed)) break;
            int v_dim = restriction(reps[i], D).v_dim;
            ++local.checked;
            if (local.min_vdim < 0 || v_dim < local.min_vdim) local.min_vdim = v_dim;
            if (v_dim > local.max_vdim) local.max_vdim = v_dim;
            if (v_dim != hyperplane_dim) {
                long long cur = first_fail.load();
                while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {}
                break;
            }
        }
        chunk_stats[(size_t)chunk] = local;
    });

    MinimalityReport report;
    report.method = Method::Geometric;

    long long fail = first_fail.load();
    if (fail == total) {
        report.verdict = Verdict::Minimal;
        ReportStats stats;
        for (const auto& cs : chunk_stats) {
            stats.checked += cs.checked;
            if (cs.checked == 0) continue;
            if (stats.min_vdim < 0 || cs.min_vdim < stats.min_vdim)
                stats.min_vdim = cs.min_vdim;
            if (cs.max_vdim > stats.max_vdim) stats.max_vdim = cs.max_vdim;
        }
        report.stats = stats;
        return report;
    }

    // Recompute stats over the serial prefix [0, fail] so the report does
    // not depend on the schedule.
    ReportStats stats;
    for (long long i = 0; i <= fail; ++i) {
        int v_dim = restriction(reps[i], D).v_dim;
        ++stats.checked;
        if (stats.min_vdim < 0 || v_dim < stats.min_vdim) stats.min_vdim = v_dim;
        if (v_dim > stats.max_vdim) stats.max_vdim = v_dim;
    }
    report.verdict = Verdict::NotMinimal;
    report.witness = reps[fail];
    report.certificate = covering_certificate(reps[fail], D);
    report.stats = stats;
    return report;
}

MinimalityReport check_bruteforce(const DefiningSet& D) {
    require_full_rank(D, "check_bruteforce");
    if (ambient_size(D) > kBruteForceGuard)
        throw std::invalid_argument("check_bruteforce: q^m exceeds 2^20");

    const Field& F = *D.field;
    const auto reps = projective_representatives(F, D.m);

    std::vector<Codeword> words;
    words.reserve(reps.size());
    for (const auto& y : reps) words.push_back(codeword(y, D));

    MinimalityReport report;
    report.method = Method::BruteForce;
    report.stats.checked = (long long)reps.size();

    for (size_t yi = 0; yi < reps.size(); ++yi) {
        for (size_t xi = 0; xi < reps.size(); ++xi) {
            if (xi == yi) continue;
            if (covers(words[xi], words[yi])) {
                report.verdict = Verdict::NotMinimal;
                report.witness = reps[yi];
                report.certificate = reps[xi];
                report.stats.checked = (long long)yi + 1;
                return report;
            }
        }
    }
    report.verdict = Verdict::Minimal;
    return report;
}

MinimalityReport ab_bound(const WeightDistribution& dist, const Field& F) {
    long long w_min = -1, w_max = -1;
    for (const auto& [w, count] : dist) {
        if (w <= 0 || count <= 0) continue;
        if (w_min < 0) w_min = w;
        w_max = w;
    }
    if (w_min < 0)
        throw std::invalid_argument("ab_bound: no nonzero weights in distribution");

    MinimalityReport report;
    report.method = Method::AbBound;
    report.verdict = (long long)F.q() * w_min > (long long)(F.q() - 1) * w_max
                         ? Verdict::Minimal
                         : Verdict::Inconclusive;
    return report;
}

bool submultiset(const DefiningSet& D1, const DefiningSet& D2) {
    if (D1.m != D2.m) return false;
    std::map<Vec, int> counts;
    for (const auto& v : D2.points) ++counts[v];
    for (const auto& v : D1.points) {
        auto it = counts.find(v);
        if (it == counts.end() || it->second == 0) return false;
        --it->second;
    }
    return true;
}

bool monotonicity_check(const DefiningSet& D1, const DefiningSet& D2) {
    if (!Field::same(*D1.field, *D2.field))
        throw std::invalid_argument("monotonicity_check: field mismatch");
    if (!submultiset(D1, D2))
        throw std::invalid_argument("monotonicity_check: D1 is not a sub-multiset of D2");
    require_full_rank(D1, "monotonicity_check");
    require_full_rank(D2, "monotonicity_check");

    Verdict v1 = check_geometric(D1).verdict;
    Verdict v2 = check_geometric(D2).verdict;
    return !(v1 == Verdict::Minimal && v2 != Verdict::Minimal);
}

}  // namespace spreadcode
