#include "spreadcode/code.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "parallel_util.hpp"

namespace spreadcode {

DefiningSet DefiningSet::from_points(FieldPtr field, int m, std::vector<Vec> points) {
    if (!field) throw std::invalid_argument("defining set: missing field");
    if (m < 1) throw std::invalid_argument("defining set: ambient dimension must be >= 1");
    for (size_t i = 0; i < points.size(); ++i) {
        if ((int)points[i].size() != m) {
            std::ostringstream os;
            os << "defining set: point " << i << " has length " << points[i].size()
               << ", expected " << m;
            throw std::invalid_argument(os.str());
        }
        bool zero = true;
        for (felem c : points[i])
            if (c != 0) { zero = false; break; }
        if (zero) {
            std::ostringstream os;
            os << "defining set: point " << i << " is the zero vector";
            throw std::invalid_argument(os.str());
        }
        for (felem c : points[i])
            if (c >= field->q()) throw std::invalid_argument("defining set: code out of range");
    }
    int rank = span_dim(*field, points);
    return DefiningSet{std::move(field), m, std::move(points), rank};
}

DefiningSet defining_set(const PartialSpread& spread) {
    std::vector<Vec> points;
    for (const auto& member : spread.members) {
        auto pts = enumerate_subspace(*spread.field, member);
        for (auto& v : pts) {
            bool zero = true;
            for (felem c : v)
                if (c != 0) { zero = false; break; }
            if (!zero) points.push_back(std::move(v));
        }
    }
    return DefiningSet::from_points(spread.field, spread.m, std::move(points));
}

Codeword codeword(const Vec& y, const DefiningSet& D) {
    if ((int)y.size() != D.m)
        throw std::invalid_argument("codeword: message length mismatch");
    Codeword c;
    c.message = y;
    c.values.reserve(D.points.size());
    for (const auto& d : D.points) c.values.push_back(dot(*D.field, y, d));
    return c;
}

int weight(const Codeword& c) {
    int w = 0;
    for (felem v : c.values)
        if (v != 0) ++w;
    return w;
}

bool covers(const Codeword& u, const Codeword& v) {
    if (u.values.size() != v.values.size())
        throw std::invalid_argument("covers: length mismatch");
    for (size_t i = 0; i < u.values.size(); ++i)
        if (u.values[i] != 0 && v.values[i] == 0) return false;
    return true;
}

WeightDistribution weight_distribution(const DefiningSet& D, int threads) {
    if (D.rank != D.m) {
        std::ostringstream os;
        os << "weight distribution requires r(D) = m, got r(D) = " << D.rank
           << " with m = " << D.m;
        throw std::invalid_argument(os.str());
    }
    const auto reps = projective_representatives(*D.field, D.m);
    const long long multiplier = D.field->q() - 1;

    WeightDistribution dist;
    std::mutex merge_mutex;
    detail::run_chunked((long long)reps.size(), threads,
                        [&](long long begin, long long end, int) {
                            WeightDistribution local;
                            for (long long i = begin; i < end; ++i)
                                local[weight(codeword(reps[i], D))] += multiplier;
                            std::lock_guard<std::mutex> lock(merge_mutex);
                            for (auto& [w, count] : local) dist[w] += count;
                        });
    return dist;
}

Mat generator_matrix(const DefiningSet& D) {
    Mat G(D.m, D.n());
    for (int c = 0; c < D.n(); ++c)
        for (int r = 0; r < D.m; ++r) G.at(r, c) = D.points[c][r];
    return G;
}

std::string generator_matrix_text(const DefiningSet& D) {
    Mat G = generator_matrix(D);
    std::ostringstream os;
    for (int r = 0; r < G.rows; ++r) {
        for (int c = 0; c < G.cols; ++c) {
            if (c) os << ' ';
            os << G.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace spreadcode
