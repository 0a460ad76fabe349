#include "spreadcode/json_io.hpp"

#include <stdexcept>

namespace spreadcode {

namespace {

Vec vec_from_json(const Json& j, int q) {
    if (!j.is_array()) throw std::invalid_argument("vector must be an array");
    Vec v;
    for (const auto& entry : j) {
        long long code = entry.get<long long>();
        if (code < 0 || code >= q)
            throw std::invalid_argument("element code out of range");
        v.push_back((felem)code);
    }
    return v;
}

Json vec_to_json(const Vec& v) {
    Json j = Json::array();
    for (felem c : v) j.push_back((int)c);
    return j;
}

}  // namespace

Json field_to_json(const Field& F) {
    return Json{{"p", F.p()}, {"e", F.e()}, {"modulus", F.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
    int p = j.at("p").get<int>();
    int e = j.at("e").get<int>();
    auto modulus = j.at("modulus").get<std::vector<int>>();
    return Field::with_modulus(p, e, modulus);
}

Json subspace_to_json(const Subspace& U) {
    Json basis = Json::array();
    for (const auto& row : U.basis.to_rows()) basis.push_back(vec_to_json(row));
    return Json{{"m", U.m}, {"basis", basis}};
}

Subspace subspace_from_json(const Field& F, const Json& j) {
    int m = j.at("m").get<int>();
    if (m < 1) throw std::invalid_argument("subspace: ambient dimension must be >= 1");
    std::vector<Vec> rows;
    for (const auto& row : j.at("basis")) rows.push_back(vec_from_json(row, F.q()));
    for (const auto& row : rows)
        if ((int)row.size() != m) throw std::invalid_argument("subspace: row length mismatch");
    Subspace U = Subspace::from_rows(F, rows, m);
    if (U.dim() != (int)rows.size())
        throw std::invalid_argument("subspace: basis rows are linearly dependent");
    return U;
}

Json spread_to_json(const PartialSpread& spread) {
    Json members = Json::array();
    for (const auto& member : spread.members) members.push_back(subspace_to_json(member));
    return Json{{"field", field_to_json(*spread.field)},
                {"k", spread.k},
                {"members", members}};
}

PartialSpread spread_from_json(const Json& j) {
    FieldPtr field = field_from_json(j.at("field"));
    int k = j.at("k").get<int>();
    std::vector<Subspace> members;
    for (const auto& member : j.at("members"))
        members.push_back(subspace_from_json(*field, member));
    PartialSpread spread = validate_spread(field, std::move(members));
    if (spread.k != k) throw std::invalid_argument("spread: k does not match members");
    return spread;
}

Json code_to_json(const DefiningSet& D) {
    Json points = Json::array();
    for (const auto& d : D.points) points.push_back(vec_to_json(d));
    return Json{{"field", field_to_json(*D.field)}, {"m", D.m}, {"defining_set", points}};
}

DefiningSet code_from_json(const Json& j) {
    FieldPtr field = field_from_json(j.at("field"));
    int m = j.at("m").get<int>();
    std::vector<Vec> points;
    for (const auto& point : j.at("defining_set"))
        points.push_back(vec_from_json(point, field->q()));
    return DefiningSet::from_points(field, m, std::move(points));
}

Json report_to_json(const MinimalityReport& report) {
    Json j;
    j["verdict"] = to_string(report.verdict);
    j["method"] = to_string(report.method);
    j["witness"] = report.witness ? vec_to_json(*report.witness) : Json(nullptr);
    j["certificate"] = report.certificate ? vec_to_json(*report.certificate) : Json(nullptr);
    j["stats"] = Json{{"checked", report.stats.checked},
                      {"min_vdim", report.stats.min_vdim},
                      {"max_vdim", report.stats.max_vdim}};
    return j;
}

Json weights_to_json(const WeightDistribution& dist) {
    Json j = Json::array();
    for (const auto& [w, count] : dist) j.push_back(Json::array({w, count}));
    return j;
}

}  // namespace spreadcode
