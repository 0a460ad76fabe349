// Defining multisets D and the evaluated linear code C(D) whose codewords
// are c(y) = (y d_1^T, ..., y d_n^T). Codewords are computed on demand;
// the full q^m table is never materialized.

#ifndef SPREADCODE_CODE_HPP
#define SPREADCODE_CODE_HPP

#include <map>

#include "spreadcode/spread.hpp"

namespace spreadcode {

struct DefiningSet {
    FieldPtr field;
    int m = 0;
    std::vector<Vec> points;  // ordered multiset, no zero vector
    int rank = 0;             // r(D)

    int n() const { return (int)points.size(); }

    static DefiningSet from_points(FieldPtr field, int m, std::vector<Vec> points);
};

struct Codeword {
    Vec message;                 // the source y
    std::vector<felem> values;   // (y d_1^T, ..., y d_n^T)
};

// Count of messages per weight, over all q^m - 1 nonzero messages.
using WeightDistribution = std::map<int, long long>;

// Concatenates the nonzero points of each member in member order, each
// member enumerated in its deterministic coefficient order. n = s(q^k - 1).
DefiningSet defining_set(const PartialSpread& spread);

Codeword codeword(const Vec& y, const DefiningSet& D);

int weight(const Codeword& c);

// True iff Suppt(u) is contained in Suppt(v), i.e. u is covered by v.
bool covers(const Codeword& u, const Codeword& v);

// Requires r(D) = m so messages map to distinct codewords. Enumerates one
// projective representative per scalar class and attributes q-1 messages
// to each. Counts sum to q^m - 1.
WeightDistribution weight_distribution(const DefiningSet& D, int threads = 1);

// m x n matrix whose columns are d_1, ..., d_n in order.
Mat generator_matrix(const DefiningSet& D);

// Plain-text rendering of the generator matrix: one line per row, element
// codes separated by single spaces.
std::string generator_matrix_text(const DefiningSet& D);

}  // namespace spreadcode

#endif
