// Partial spreads of GF(q)^(2k): ordered lists of k-dimensional subspaces
// that pairwise intersect only in 0. Member order is part of a spread's
// identity; every constructor defines a deterministic order.

#ifndef SPREADCODE_SPREAD_HPP
#define SPREADCODE_SPREAD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spreadcode/linalg.hpp"

namespace spreadcode {

struct PartialSpread {
    FieldPtr field;
    int k = 0;
    int m = 0;  // always 2k
    std::vector<Subspace> members;

    int size() const { return (int)members.size(); }
};

// Thrown when the random greedy construction cannot reach the target size.
class SpreadBuildError : public std::runtime_error {
public:
    SpreadBuildError(const std::string& msg, int achieved)
        : std::runtime_error(msg), achieved_size(achieved) {}
    int achieved_size;
};

// Checks dimensions, pairwise trivial intersection, and the size bound
// 2 <= s <= q^k + 1. On failure throws with the offending member or pair
// (including a nonzero common vector).
PartialSpread validate_spread(FieldPtr field, std::vector<Subspace> members);

// One member per scalar b in `subset`: the graph { (x, b x) : x in GF(q)^k },
// spanned by { e_i + b e_{k+i} }. Members ordered by element code of b.
// Needs at least two distinct scalars.
PartialSpread scalar_graph_family(FieldPtr field, int k, std::vector<felem> subset);

// The complete spread of size q^k + 1 from the field model of GF(q^k):
// E_lambda = { (x, x M_lambda) } with M_lambda the multiplication-by-lambda
// matrix in GF(q)[t]/(f), f the canonical irreducible of degree k, ordered
// by lambda's code (base-q digit string), plus { (0, x) } last.
PartialSpread desarguesian_spread(FieldPtr field, int k);

// The four-member spread { (x,0) }, { (0,x) }, { (x,x) }, { (x,xM) } where
// M is the companion matrix of the canonical irreducible of degree k.
// Requires k >= 2; every member also belongs to desarguesian_spread(field,k).
PartialSpread companion_spread(FieldPtr field, int k);

// Memberwise orthogonal complements, same order.
PartialSpread dual_spread(const PartialSpread& spread);

// Greedy accumulation of random k-subspaces with a splitmix64 stream:
// draw k x 2k matrices entrywise (next() % q, row-major), keep full-rank
// candidates that meet every accepted member trivially. Aborts with
// SpreadBuildError after 10000 consecutive rejections.
PartialSpread random_partial_spread(FieldPtr field, int k, int s, std::uint64_t seed);

// Members at the given indices (at least two, distinct, in given order).
PartialSpread subfamily(const PartialSpread& spread, const std::vector<int>& indices);

// Companion matrix of a monic polynomial f of degree k: rows are the
// coordinates of t^i * t in GF(q)[t]/(f), so row vectors multiply from the
// left and the characteristic polynomial of the result is f.
Mat companion_matrix(const Field& F, const Poly& f);

std::string vec_to_string(const Vec& v);

}  // namespace spreadcode

#endif
