#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bm/json_io.hpp"
#include "bm/util.hpp"

namespace py = pybind11;
using namespace bm;

namespace {

// All structured values cross the boundary as JSON-shaped python objects;
// rationals stay exact "p/q" strings end to end.
py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) {
                out[py::str(key)] = json_to_py(value);
            }
            return out;
        }
        default: return py::none();
    }
}

Json py_to_json(py::handle h) {
    if (h.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
    if (py::isinstance<py::int_>(h)) return h.cast<long long>();
    if (py::isinstance<py::float_>(h)) return h.cast<double>();
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        Json out = Json::array();
        for (py::handle item : h) out.push_back(py_to_json(item));
        return out;
    }
    if (py::isinstance<py::dict>(h)) {
        Json out = Json::object();
        for (auto item : h.cast<py::dict>()) {
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        }
        return out;
    }
    throw ParseError("unsupported python value in exact-rational context");
}

QMatrix matrix_from_py(py::handle rows) {
    const Json entries = py_to_json(rows);
    if (!entries.is_array() || entries.empty()) throw ParseError("matrix must be a list of rows");
    return qmatrix_from_json(Json{{"n", entries.size()}, {"entries", entries}});
}

VPolytope polygon_from_py(py::handle vertices) {
    const Json verts = py_to_json(vertices);
    const VPolytope raw = vpolytope_from_json(Json{{"n", 2}, {"vertices", verts}});
    return convex_hull_2d(raw.vertices);
}

FloatMatrix float_matrix_from_py(py::handle rows) {
    const auto data = rows.cast<std::vector<std::vector<double>>>();
    FloatMatrix m(static_cast<int>(data.size()));
    for (int i = 0; i < m.n; ++i) {
        if (static_cast<int>(data[i].size()) != m.n) throw ParseError("matrix must be square");
        for (int j = 0; j < m.n; ++j) m.at(i, j) = data[i][j];
    }
    return m;
}

py::object matrix_to_py(const QMatrix& m) { return json_to_py(qmatrix_to_json(m).at("entries")); }

py::object parallelogram_to_py(const Parallelogram2D& par) {
    py::dict out;
    out["p"] = json_to_py(qvector_to_json(par.p));
    out["q"] = json_to_py(qvector_to_json(par.q));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic Banach-Mazur distance toolkit (C++ core)";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvalidParams>(m, "InvalidParams", PyExc_ValueError);
    py::register_exception<SingularMatrix>(m, "SingularMatrix", PyExc_ValueError);
    py::register_exception<NotSymmetric>(m, "NotSymmetric", PyExc_ValueError);
    py::register_exception<Degenerate>(m, "Degenerate", PyExc_ValueError);

    m.def(
        "ratio",
        [](py::handle matrix) {
            return rat_to_string(ratio(OperatorT::from_matrix(matrix_from_py(matrix))));
        },
        py::arg("matrix"),
        "Exact sandwich ratio outer/inner of an invertible operator, as 'p/q'.");
    m.def(
        "inner_radius",
        [](py::handle matrix) {
            return rat_to_string(inner_radius(OperatorT::from_matrix(matrix_from_py(matrix))));
        },
        py::arg("matrix"));
    m.def(
        "outer_radius",
        [](py::handle matrix) {
            return rat_to_string(outer_radius(OperatorT::from_matrix(matrix_from_py(matrix))));
        },
        py::arg("matrix"));
    m.def(
        "certify",
        [](py::handle matrix, const std::string& r) {
            const auto result =
                certify_sandwich(OperatorT::from_matrix(matrix_from_py(matrix)),
                                 rat_from_string(r));
            if (const auto* cert = std::get_if<SandwichCertificate>(&result)) {
                return json_to_py(certificate_to_json(*cert));
            }
            return json_to_py(failure_to_json(std::get<CertificationFailure>(result)));
        },
        py::arg("matrix"), py::arg("r"),
        "Exact certificate (or violation witness) for r C_n ⊆ T(C_n*) ⊆ C_n.");
    m.def("enumerate_nice_octahedra", [] {
        py::list out;
        for (const auto& member : enumerate_nice_octahedra()) out.append(matrix_to_py(member));
        return out;
    });
    m.def(
        "is_nice",
        [](py::handle matrix) {
            return is_nice(OperatorT::from_matrix(matrix_from_py(matrix)));
        },
        py::arg("matrix"));
    m.def(
        "normalize_columns",
        [](py::handle matrix) {
            return matrix_to_py(
                normalize_columns(OperatorT::from_matrix(matrix_from_py(matrix))).T);
        },
        py::arg("matrix"));
    m.def(
        "claim3d",
        [](py::handle matrix) {
            return json_to_py(
                claim3d_to_json(claim3d_report(OperatorT::from_matrix(matrix_from_py(matrix)))));
        },
        py::arg("matrix"));

    m.def(
        "asymmetry",
        [](py::handle vertices) {
            const VPolytope polygon = polygon_from_py(vertices);
            const AsymmetryResult result = asymmetry(polygon);
            const int contacts = verify_contact_points(polygon, polygon_to_h(polygon), result);
            return json_to_py(asymmetry_to_json(result, contacts));
        },
        py::arg("vertices"),
        "Exact asymmetry constant, Minkowski center, and contact count of a polygon.");

    m.def(
        "pentagon",
        [](const std::string& r, const std::string& k) {
            const PentagonParams params{rat_from_string(r), rat_from_string(k)};
            params.validate();
            return json_to_py(vpolytope_to_json(pentagon(params)).at("vertices"));
        },
        py::arg("r"), py::arg("k"));
    m.def(
        "pentagon_center",
        [](const std::string& r, const std::string& k) {
            const PentagonParams params{rat_from_string(r), rat_from_string(k)};
            params.validate();
            return json_to_py(qvector_to_json(pentagon_center(params)));
        },
        py::arg("r"), py::arg("k"));
    m.def(
        "certify_equidistance",
        [](const std::string& r, const std::string& k, py::handle body) {
            const PentagonParams params{rat_from_string(r), rat_from_string(k)};
            params.validate();
            return json_to_py(
                equidistance_to_json(certify_equidistance(params, polygon_from_py(body))));
        },
        py::arg("r"), py::arg("k"), py::arg("body"),
        "Certify d_BM(K(r,k), body) = r by the exact max-area-triangle pipeline.");
    m.def(
        "parallel_pair_ratio",
        [](py::handle vertices) {
            return rat_to_string(parallel_pair_ratio(polygon_from_py(vertices)));
        },
        py::arg("vertices"));

    m.def(
        "check_square_sandwich",
        [](py::handle p, py::handle q, const std::string& r) {
            return check_square_sandwich(
                make_parallelogram(qvector_from_json(py_to_json(p)),
                                   qvector_from_json(py_to_json(q))),
                rat_from_string(r));
        },
        py::arg("p"), py::arg("q"), py::arg("r"));
    m.def(
        "corner_classify",
        [](py::handle p, py::handle q) {
            const CornerCount counts = corner_classify(make_parallelogram(
                qvector_from_json(py_to_json(p)), qvector_from_json(py_to_json(q))));
            py::dict out;
            out["counts"] = py::make_tuple(counts.count(-1, -1), counts.count(-1, 1),
                                           counts.count(1, -1), counts.count(1, 1));
            out["outside"] = counts.outside;
            out["one_per_corner"] = counts.all_ones();
            return out;
        },
        py::arg("p"), py::arg("q"));
    m.def(
        "sample_valid_parallelogram",
        [](std::uint64_t seed, const std::string& r, long max_attempts) {
            return parallelogram_to_py(
                sample_valid_parallelogram(seed, rat_from_string(r), max_attempts));
        },
        py::arg("seed"), py::arg("r"), py::arg("max_attempts") = 100000);
    m.def(
        "find_lemma_counterexample",
        [](const std::string& r, std::uint64_t seed, long max_attempts) -> py::object {
            const auto found =
                find_lemma_counterexample(rat_from_string(r), seed, max_attempts);
            if (!found) return py::none();
            return parallelogram_to_py(*found);
        },
        py::arg("r"), py::arg("seed"), py::arg("max_attempts") = 100000);

    m.def(
        "float_ratio",
        [](py::handle matrix, double det_guard) {
            return float_ratio(float_matrix_from_py(matrix), det_guard);
        },
        py::arg("matrix"), py::arg("det_guard") = 1e-9);
    m.def(
        "rationalize",
        [](double x, long denom_bound) { return rat_to_string(rationalize(x, denom_bound)); },
        py::arg("x"), py::arg("denom_bound") = 1000000);
    m.def(
        "snap_to_nice",
        [](py::handle matrix) -> py::object {
            const auto snapped = snap_to_nice(float_matrix_from_py(matrix));
            if (!snapped) return py::none();
            return matrix_to_py(*snapped);
        },
        py::arg("matrix"));
    m.def(
        "optimize",
        [](int n, int restarts, int max_iters, std::uint64_t seed, long denom_bound, int jobs) {
            SearchConfig cfg;
            cfg.n = n;
            cfg.restarts = restarts;
            cfg.max_iters = max_iters;
            cfg.seed = seed;
            cfg.denom_bound = denom_bound;
            cfg.jobs = jobs;
            return json_to_py(search_report_to_json(optimize(cfg)));
        },
        py::arg("n") = 3, py::arg("restarts") = 200, py::arg("max_iters") = 5000,
        py::arg("seed") = 0, py::arg("denom_bound") = 1000000, py::arg("jobs") = 1,
        "Derivative-free ratio search with exact re-certification of the optimum.");

#ifdef BM_VERSION_INFO
    m.attr("__version__") = BM_VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
