#include "bm/json_io.hpp"

#include <fstream>

#include "bm/errors.hpp"

namespace bm {

Json rational_to_json(const Rational& value) { return rat_to_string(value); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("expected a rational as \"p/q\" string or integer");
}

Json qvector_to_json(const QVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_to_json(x));
    return out;
}

QVector qvector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    QVector out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

Json qmatrix_to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n; ++i) rows.push_back(qvector_to_json(m.row(i)));
    return Json{{"n", m.n}, {"entries", rows}};
}

QMatrix qmatrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
        throw ParseError("matrix JSON needs fields n and entries");
    }
    const int n = j.at("n").get<int>();
    if (n < 1 || n > 8) throw ParseError("matrix dimension out of range");
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
        throw ParseError("matrix entries must hold n rows");
    }
    QMatrix m(n);
    for (int i = 0; i < n; ++i) {
        QVector row = qvector_from_json(rows.at(i));
        if (static_cast<int>(row.size()) != n) throw ParseError("matrix row of wrong length");
        for (int c = 0; c < n; ++c) m.at(i, c) = row[c];
    }
    return m;
}

Json vpolytope_to_json(const VPolytope& p) {
    Json verts = Json::array();
    for (const auto& v : p.vertices) verts.push_back(qvector_to_json(v));
    return Json{{"n", p.n}, {"vertices", verts}};
}

VPolytope vpolytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("vertices")) {
        throw ParseError("polytope JSON needs fields n and vertices");
    }
    VPolytope p{j.at("n").get<int>(), {}};
    for (const auto& row : j.at("vertices")) {
        QVector v = qvector_from_json(row);
        if (static_cast<int>(v.size()) != p.n) throw ParseError("vertex of wrong dimension");
        p.vertices.push_back(std::move(v));
    }
    if (p.vertices.empty()) throw ParseError("polytope needs at least one vertex");
    return p;
}

Json certificate_to_json(const SandwichCertificate& cert) {
    return Json{{"certified", true},
                {"matrix", qmatrix_to_json(cert.op.T)},
                {"r_requested", rational_to_json(cert.r_requested)},
                {"r_inner", rational_to_json(cert.r_inner)},
                {"r_outer", rational_to_json(cert.r_outer)},
                {"ratio", rational_to_json(cert.ratio)},
                {"witness",
                 {{"cube_vertex", qvector_to_json(cert.witnesses.cube_vertex)},
                  {"column_index", cert.witnesses.column_index}}}};
}

Json failure_to_json(const CertificationFailure& failure) {
    return Json{{"certified", false},
                {"inclusion", failure.inclusion},
                {"vertex_index", failure.vertex_index},
                {"halfspace_index", failure.halfspace_index},
                {"vertex", qvector_to_json(failure.vertex)},
                {"halfspace",
                 {{"normal", qvector_to_json(failure.halfspace.normal)},
                  {"offset", rational_to_json(failure.halfspace.offset)}}}};
}

Json asymmetry_to_json(const AsymmetryResult& result, int contacts) {
    Json pairs = Json::array();
    for (const auto& [vertex, facet] : result.tight_pairs) {
        pairs.push_back(Json::array({vertex, facet}));
    }
    return Json{{"as", rational_to_json(result.as_value)},
                {"lambda", rational_to_json(result.lambda)},
                {"center", qvector_to_json(result.center)},
                {"contacts", contacts},
                {"tight_pairs", pairs},
                {"center_unique", result.center_unique}};
}

Json claim3d_to_json(const Claim3dReport& report) {
    Json cubes = Json::object();
    for (int bits = 0; bits < 8; ++bits) {
        std::string key;
        for (int c = 0; c < 3; ++c) key += (bits >> c) & 1 ? '+' : '-';
        cubes[key] = report.cube_counts[bits];
    }
    return Json{{"holds", report.vertices_in_v && report.at_most_one_per_cube},
                {"vertices_in_v", report.vertices_in_v},
                {"at_most_one_per_cube", report.at_most_one_per_cube},
                {"occupied", report.occupied},
                {"cube_counts", cubes}};
}

Json equidistance_to_json(const EquidistanceCertificate& cert) {
    return Json{{"certified", true},
                {"r", rational_to_json(cert.params.r)},
                {"k", rational_to_json(cert.params.k)},
                {"pentagon", vpolytope_to_json(cert.k)},
                {"k_prime", vpolytope_to_json(cert.k_prime)},
                {"body", vpolytope_to_json(cert.l)},
                {"triangle_indices", cert.triangle},
                {"map",
                 {{"a", qmatrix_to_json(cert.map.a)}, {"t", qvector_to_json(cert.map.t)}}},
                {"l0", vpolytope_to_json(cert.l0)},
                {"as", rational_to_json(cert.as_check.as_value)},
                {"center", qvector_to_json(cert.as_check.center)}};
}

Json search_report_to_json(const SearchReport& report) {
    Json trace = Json::array();
    for (const auto& t : report.trace) {
        trace.push_back(Json{{"restart", t.restart},
                             {"seed", t.seed},
                             {"best_ratio", t.best_ratio},
                             {"iterations", t.iterations}});
    }
    Json best_float = Json::array();
    for (int i = 0; i < report.best_float_matrix.n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < report.best_float_matrix.n; ++j) {
            row.push_back(report.best_float_matrix.at(i, j));
        }
        best_float.push_back(row);
    }
    Json out{{"n", report.config.n},
             {"restarts", report.config.restarts},
             {"seed", report.config.seed},
             {"best_float_ratio", report.best_float_ratio},
             {"best_float_matrix", best_float},
             {"rationalized", qmatrix_to_json(report.rationalized)},
             {"exact_ratio", rational_to_json(report.exact_ratio)},
             {"conjecture_sqrt_n_over_2", report.conjecture_constant},
             {"trace", trace}};
    if (report.theorem_bound) {
        out["theorem_bound"] = rational_to_json(*report.theorem_bound);
    } else {
        out["theorem_bound"] = nullptr;
    }
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace bm
