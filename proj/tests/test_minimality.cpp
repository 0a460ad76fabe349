#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "spreadcode/minimality.hpp"

using namespace spreadcode;

namespace {

PartialSpread desarg_prefix(FieldPtr F, int k, int s) {
    auto full = desarguesian_spread(F, k);
    std::vector<int> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    return subfamily(full, idx);
}

Vec unit(int m, int i) {
    Vec v(m, 0);
    v[i] = 1;
    return v;
}

std::vector<Vec> all_nonzero(const Field& F, int m) {
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= F.q();
    std::vector<Vec> out;
    for (long long code = 1; code < total; ++code) {
        Vec v(m);
        long long rem = code;
        for (int i = m - 1; i >= 0; --i) { v[i] = (felem)(rem % F.q()); rem /= F.q(); }
        out.push_back(std::move(v));
    }
    return out;
}

DefiningSet member_points(FieldPtr F, const Subspace& E) {
    std::vector<Vec> pts;
    for (const auto& v : enumerate_subspace(*F, E))
        if (v != Vec(E.m, 0)) pts.push_back(v);
    return DefiningSet::from_points(F, E.m, pts);
}

}  // namespace

TEST_CASE("restriction of a single member is the hyperplane-or-all law") {
    auto f3 = Field::make(3, 1);
    PartialSpread sp = desarg_prefix(f3, 2, 3);
    const Subspace& E = sp.members[0];
    Subspace E_perp = dual(*f3, E);
    DefiningSet D = member_points(f3, E);

    for (const auto& y : all_nonzero(*f3, 4)) {
        int v_dim = restriction(y, D).v_dim;
        if (subspace_contains(*f3, E_perp, y))
            CHECK(v_dim == 2);  // the whole member survives
        else
            CHECK(v_dim == 1);  // exactly a hyperplane of it survives
    }
}

TEST_CASE("restriction is scalar invariant and rejects zero") {
    auto f5 = Field::make(5, 1);
    DefiningSet D = defining_set(desarg_prefix(f5, 2, 3));
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> dist(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        Vec y(4, 0);
        while (y == Vec(4, 0))
            for (auto& c : y) c = (felem)dist(rng);
        for (felem a = 1; a < 5; ++a) {
            Vec ay(4);
            for (int i = 0; i < 4; ++i) ay[i] = f5->mul(a, y[i]);
            auto h1 = restriction(y, D), h2 = restriction(ay, D);
            CHECK(h1.indices == h2.indices);
            CHECK(h1.v_dim == h2.v_dim);
        }
    }
    CHECK_THROWS_AS(restriction(Vec(4, 0), D), std::invalid_argument);
}

TEST_CASE("per-codeword minimality across the three regimes") {
    // q = 2, s = 3 = q+1: every codeword minimal
    auto f2 = Field::make(2, 1);
    DefiningSet d_small_q = defining_set(desarg_prefix(f2, 2, 3));
    for (const auto& y : projective_representatives(*f2, 4))
        CHECK(is_codeword_minimal(y, d_small_q));

    // q = 3, s = 3 <= q: some codeword fails
    auto f3 = Field::make(3, 1);
    DefiningSet d_boundary = defining_set(desarg_prefix(f3, 2, 3));
    bool some_fail = false;
    for (const auto& y : projective_representatives(*f3, 4))
        if (!is_codeword_minimal(y, d_boundary)) { some_fail = true; break; }
    CHECK(some_fail);

    // full scalar-graph family: e1 specifically fails with room to spare
    auto f4 = Field::make(2, 2);
    DefiningSet d_eb = defining_set(scalar_graph_family(f4, 2, {0, 1, 2, 3}));
    CHECK_FALSE(is_codeword_minimal(unit(4, 0), d_eb));
    CHECK(restriction(unit(4, 0), d_eb).v_dim <= 2);

    CHECK_THROWS_AS(is_codeword_minimal(Vec(4, 0), d_eb), std::invalid_argument);
}

TEST_CASE("geometric checker on the named instances") {
    auto f4 = Field::make(2, 2);

    MinimalityReport comp = check_geometric(defining_set(companion_spread(f4, 2)));
    CHECK(comp.verdict == Verdict::Minimal);
    CHECK(comp.method == Method::Geometric);
    CHECK(comp.stats.checked == 85);
    CHECK(comp.stats.min_vdim == 3);
    CHECK(comp.stats.max_vdim == 3);
    CHECK_FALSE(comp.witness.has_value());

    MinimalityReport eb = check_geometric(defining_set(scalar_graph_family(f4, 2, {0, 1, 2, 3})));
    CHECK(eb.verdict == Verdict::NotMinimal);
    REQUIRE(eb.witness.has_value());
    REQUIRE(eb.certificate.has_value());
    CHECK(eb.stats.min_vdim <= 2);

    // the witness is the first deficient projective representative
    DefiningSet d_eb = defining_set(scalar_graph_family(f4, 2, {0, 1, 2, 3}));
    auto reps = projective_representatives(*f4, 4);
    size_t first_fail = 0;
    while (restriction(reps[first_fail], d_eb).v_dim == 3) ++first_fail;
    CHECK(*eb.witness == reps[first_fail]);
    CHECK(eb.stats.checked == (long long)first_fail + 1);

    auto f3 = Field::make(3, 1);
    MinimalityReport pair = check_geometric(defining_set(desarg_prefix(f3, 2, 2)));
    CHECK(pair.verdict == Verdict::NotMinimal);
}

TEST_CASE("geometric checker is schedule independent") {
    auto f4 = Field::make(2, 2);
    for (const auto& D : {defining_set(companion_spread(f4, 2)),
                          defining_set(scalar_graph_family(f4, 2, {0, 1, 2, 3}))}) {
        MinimalityReport serial = check_geometric(D, 1);
        for (int threads : {2, 3, 8}) {
            MinimalityReport parallel = check_geometric(D, threads);
            CHECK(parallel.verdict == serial.verdict);
            CHECK(parallel.witness == serial.witness);
            CHECK(parallel.certificate == serial.certificate);
            CHECK(parallel.stats.checked == serial.stats.checked);
            CHECK(parallel.stats.min_vdim == serial.stats.min_vdim);
            CHECK(parallel.stats.max_vdim == serial.stats.max_vdim);
        }
    }
}

TEST_CASE("covering certificates replay and are lexicographically least") {
    auto f3 = Field::make(3, 1);
    DefiningSet D = defining_set(desarg_prefix(f3, 2, 3));
    MinimalityReport report = check_geometric(D);
    REQUIRE(report.verdict == Verdict::NotMinimal);
    const Vec& y0 = *report.witness;
    const Vec& x0 = *report.certificate;

    CHECK(covers(codeword(x0, D), codeword(y0, D)));
    CHECK_FALSE(proportional(*f3, x0, y0));

    // no valid candidate below the returned one
    HyperplaneRestriction h = restriction(y0, D);
    Subspace perp = nullspace(*f3, h.members, 4);
    for (const auto& cand : enumerate_subspace(*f3, perp)) {
        if (cand == Vec(4, 0) || proportional(*f3, cand, y0)) continue;
        CHECK(x0 <= cand);
    }

    // refuse to certify a minimal codeword
    DefiningSet d_min = defining_set(desarg_prefix(Field::make(2, 1), 2, 3));
    CHECK_THROWS_AS(covering_certificate(unit(4, 0), d_min), std::invalid_argument);
}

TEST_CASE("brute-force checker matches hand-computed complete line spread") {
    auto f2 = Field::make(2, 1);
    // D = the 3 nonzero vectors of GF(2)^2; codewords have supports
    // {1,3}, {2,3}, {1,2}: pairwise incomparable
    MinimalityReport r = check_bruteforce(defining_set(desarguesian_spread(f2, 1)));
    CHECK(r.verdict == Verdict::Minimal);
    CHECK(r.method == Method::BruteForce);
    CHECK(r.stats.checked == 3);

    auto f3 = Field::make(3, 1);
    CHECK(check_bruteforce(defining_set(desarg_prefix(f3, 2, 3))).verdict ==
          Verdict::NotMinimal);
}

TEST_CASE("brute-force guard rejects oversized ambients") {
    auto f2 = Field::make(2, 1);
    // m = 22, q^m = 2^22 > 2^20
    DefiningSet big = defining_set(scalar_graph_family(f2, 11, {0, 1}));
    CHECK_THROWS_AS(check_bruteforce(big), std::invalid_argument);
}

TEST_CASE("geometric and brute-force verdicts and witnesses agree") {
    auto f2 = Field::make(2, 1);
    auto f3 = Field::make(3, 1);
    auto f4 = Field::make(2, 2);
    for (const auto& D : {defining_set(desarg_prefix(f2, 2, 3)),
                          defining_set(desarg_prefix(f3, 2, 3)),
                          defining_set(desarg_prefix(f3, 2, 4)),
                          defining_set(scalar_graph_family(f4, 2, {0, 1, 2, 3})),
                          defining_set(companion_spread(f4, 2))}) {
        MinimalityReport geo = check_geometric(D);
        MinimalityReport brute = check_bruteforce(D);
        CHECK(geo.verdict == brute.verdict);
        if (geo.verdict == Verdict::NotMinimal) {
            // same scan order, so the same first witness falls out
            CHECK(*geo.witness == *brute.witness);
            CHECK(covers(codeword(*brute.certificate, D), codeword(*brute.witness, D)));
        }
    }
}

TEST_CASE("per-codeword minimality is scalar invariant") {
    auto f5 = Field::make(5, 1);
    DefiningSet D = defining_set(desarg_prefix(f5, 2, 3));
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> dist(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Vec y(4, 0);
        while (y == Vec(4, 0))
            for (auto& c : y) c = (felem)dist(rng);
        bool base = is_codeword_minimal(y, D);
        for (felem a = 2; a < 5; ++a) {
            Vec ay(4);
            for (int i = 0; i < 4; ++i) ay[i] = f5->mul(a, y[i]);
            CHECK(is_codeword_minimal(ay, D) == base);
        }
    }
}

TEST_CASE("weight-ratio bound across the regimes") {
    auto f2 = Field::make(2, 1);
    DefiningSet d9 = defining_set(desarg_prefix(f2, 2, 3));
    MinimalityReport r9 = ab_bound(weight_distribution(d9), *f2);
    CHECK(r9.verdict == Verdict::Minimal);  // 2*4 > 1*6
    CHECK(r9.method == Method::AbBound);

    auto f3 = Field::make(3, 1);
    DefiningSet d24 = defining_set(desarg_prefix(f3, 2, 3));
    CHECK(ab_bound(weight_distribution(d24), *f3).verdict == Verdict::Inconclusive);  // 36 = 36

    // sufficient but not necessary: inconclusive on a provably minimal code
    auto f4 = Field::make(2, 2);
    DefiningSet comp = defining_set(companion_spread(f4, 2));
    CHECK(ab_bound(weight_distribution(comp), *f4).verdict == Verdict::Inconclusive);
    CHECK(check_geometric(comp).verdict == Verdict::Minimal);

    CHECK_THROWS_AS(ab_bound(WeightDistribution{}, *f2), std::invalid_argument);
}

TEST_CASE("covering relation matches hyperplane inclusion on random pairs") {
    auto f3 = Field::make(3, 1);
    DefiningSet D = defining_set(desarg_prefix(f3, 2, 3));
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> dist(0, 2);
    for (int trial = 0; trial < 1000; ++trial) {
        Vec x(4, 0), y(4, 0);
        while (x == Vec(4, 0))
            for (auto& c : x) c = (felem)dist(rng);
        while (y == Vec(4, 0))
            for (auto& c : y) c = (felem)dist(rng);
        bool covered = covers(codeword(x, D), codeword(y, D));
        auto hx = restriction(x, D).indices;
        auto hy = restriction(y, D).indices;
        CHECK(covered == std::includes(hx.begin(), hx.end(), hy.begin(), hy.end()));
    }
}

TEST_CASE("monotonicity of minimality under multiset extension") {
    auto f4 = Field::make(2, 2);
    PartialSpread comp = companion_spread(f4, 2);
    PartialSpread full = desarguesian_spread(f4, 2);

    std::vector<Subspace> extended_members = comp.members;
    for (const auto& cand : full.members) {
        if ((int)extended_members.size() == 6) break;
        bool present = false;
        for (const auto& have : extended_members)
            if (have == cand) present = true;
        if (!present) extended_members.push_back(cand);
    }
    PartialSpread extended = validate_spread(f4, extended_members);

    DefiningSet d1 = defining_set(comp);
    DefiningSet d2 = defining_set(extended);
    CHECK(submultiset(d1, d2));
    CHECK_FALSE(submultiset(d2, d1));
    CHECK(monotonicity_check(d1, d2));
    CHECK(check_geometric(d2).verdict == Verdict::Minimal);
    CHECK(monotonicity_check(d1, d1));

    // non-minimal family: subfamilies stay non-minimal (checked as consistency)
    auto f5 = Field::make(5, 1);
    DefiningSet sub = defining_set(scalar_graph_family(f5, 2, {0, 1, 2, 3}));
    DefiningSet whole = defining_set(scalar_graph_family(f5, 2, {0, 1, 2, 3, 4}));
    CHECK(monotonicity_check(sub, whole));
    CHECK(check_geometric(sub).verdict == Verdict::NotMinimal);

    CHECK_THROWS_AS(monotonicity_check(d1, whole), std::invalid_argument);  // field mismatch
    CHECK_THROWS_AS(monotonicity_check(whole, sub), std::invalid_argument); // not a submultiset
}

TEST_CASE("rank preconditions are enforced") {
    auto f2 = Field::make(2, 1);
    Subspace plane = Subspace::from_rows(*f2, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 4);
    std::vector<Vec> pts;
    for (const auto& v : enumerate_subspace(*f2, plane))
        if (v != Vec(4, 0)) pts.push_back(v);
    DefiningSet low = DefiningSet::from_points(f2, 4, pts);
    CHECK_THROWS_AS(check_geometric(low), std::invalid_argument);
    CHECK_THROWS_AS(check_bruteforce(low), std::invalid_argument);
    CHECK_THROWS_AS(is_codeword_minimal(unit(4, 3), low), std::invalid_argument);
}
