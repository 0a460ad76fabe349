// Minimality deciders for C(D).
//
// A nonzero codeword c(y) is minimal iff dim Span(D ∩ H(y)) = m - 1, where
// H(y) is the hyperplane orthogonal to y. The geometric checker decides the
// whole code from that criterion; the brute-force checker decides it from
// pairwise support coverings; the weight-ratio bound is a sufficient test
// only. NotMinimal verdicts always carry a witness y0 with a deficient
// restriction and a replayable covering certificate x0.

#ifndef SPREADCODE_MINIMALITY_HPP
#define SPREADCODE_MINIMALITY_HPP

#include <optional>
#include <string>

#include "spreadcode/code.hpp"

namespace spreadcode {

struct HyperplaneRestriction {
    Vec y;
    std::vector<int> indices;   // positions i with y d_i^T = 0
    std::vector<Vec> members;   // the points D[i] at those positions
    int v_dim = 0;              // dim Span(members)
};

enum class Verdict { Minimal, NotMinimal, Inconclusive };
enum class Method { Geometric, BruteForce, AbBound };

std::string to_string(Verdict v);
std::string to_string(Method m);

struct ReportStats {
    long long checked = 0;  // messages examined (projective representatives)
    int min_vdim = -1;      // over examined messages; -1 when none examined
    int max_vdim = -1;
};

struct MinimalityReport {
    Verdict verdict = Verdict::Inconclusive;
    Method method = Method::Geometric;
    std::optional<Vec> witness;
    std::optional<Vec> certificate;
    ReportStats stats;
};

// H(y, D) with its span dimension. y must be nonzero.
HyperplaneRestriction restriction(const Vec& y, const DefiningSet& D);

// Requires y != 0 and r(D) = m.
bool is_codeword_minimal(const Vec& y, const DefiningSet& D);

// Scans projective representatives in their deterministic order; Minimal iff
// every restriction spans a hyperplane. On failure, the witness is the
// first deficient representative and the certificate comes from
// covering_certificate. Stats cover the examined prefix only and do not
// depend on the thread count.
MinimalityReport check_geometric(const DefiningSet& D, int threads = 1);

// For a deficient y0 (dim V(y0,D) <= m-2): the lexicographically smallest
// x0 in V(y0,D)^perp that is not a scalar multiple of y0. The returned
// vector is revalidated by replaying covers(c(x0), c(y0)).
Vec covering_certificate(const Vec& y0, const DefiningSet& D);

// Pairwise support comparison over projective representatives. Requires
// q^m <= 2^20.
MinimalityReport check_bruteforce(const DefiningSet& D);

// Sufficient weight-ratio test: Minimal when q * w_min > (q-1) * w_max,
// Inconclusive otherwise.
MinimalityReport ab_bound(const WeightDistribution& dist, const Field& F);

// For defining multisets D1 ⊆ D2 with full rank: checks that the geometric
// verdicts respect "C(D1) minimal implies C(D2) minimal" (equivalently,
// C(D2) not minimal implies C(D1) not minimal). Returns the consistency.
bool monotonicity_check(const DefiningSet& D1, const DefiningSet& D2);

// Multiset inclusion of defining sets (used by monotonicity_check).
bool submultiset(const DefiningSet& D1, const DefiningSet& D2);

}  // namespace spreadcode

#endif
