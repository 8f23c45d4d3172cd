#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bm/json_io.hpp"
#include "bm/util.hpp"

namespace fs = std::filesystem;
using namespace bm;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success/certified, 1 certification or property failure
// (machine-readable witness on stdout), 2 invalid input/usage.
enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

// One manifest JSON line per run, on stderr; stdout carries only the
// command's primary output (JSON, CSV, or Markdown).
struct RunManifest {
    Json j;

    RunManifest(const std::string& command, int argc, char** argv) {
        j["command"] = command;
        Json args = Json::array();
        for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
        j["arguments"] = args;
        j["version"] = std::string("bm ") + kVersion;
        j["input_hashes"] = Json::object();
    }

    void hash_input(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        j["input_hashes"][path] = fnv1a_hex(buf.str());
    }

    void seed(std::uint64_t value) { j["seed"] = value; }

    int finish(int code, const std::string& outcome) {
        j["outcome"] = outcome;
        std::cerr << j.dump() << "\n";
        return code;
    }
};

Rational parse_rational_arg(const std::string& text, const std::string& what) {
    try {
        return rat_from_string(text);
    } catch (const ParseError&) {
        throw InvalidParams("cannot parse " + what + ": '" + text + "'");
    }
}

QMatrix load_matrix(const std::string& path) { return qmatrix_from_json(load_json_file(path)); }

VPolytope load_polygon(const std::string& path) {
    const VPolytope raw = vpolytope_from_json(load_json_file(path));
    if (raw.n != 2) throw InvalidParams("expected a planar body in " + path);
    return convex_hull_2d(raw.vertices);
}

VPolytope builtin_body(const std::string& name) {
    if (name == "square") {
        return convex_hull_2d({{Rational(1), Rational(1)},
                               {Rational(-1), Rational(1)},
                               {Rational(-1), Rational(-1)},
                               {Rational(1), Rational(-1)}});
    }
    if (name == "hexagon") {  // affinely regular, rational vertices
        return convex_hull_2d({{Rational(1), Rational(0)},
                               {Rational(0), Rational(1)},
                               {Rational(1), Rational(1)},
                               {Rational(-1), Rational(0)},
                               {Rational(0), Rational(-1)},
                               {Rational(-1), Rational(-1)}});
    }
    if (name == "octagon") {
        return convex_hull_2d({{Rational(2), Rational(1)},
                               {Rational(1), Rational(2)},
                               {Rational(-1), Rational(2)},
                               {Rational(-2), Rational(1)},
                               {Rational(-2), Rational(-1)},
                               {Rational(-1), Rational(-2)},
                               {Rational(1), Rational(-2)},
                               {Rational(2), Rational(-1)}});
    }
    throw InvalidParams("unknown builtin body: " + name);
}

std::vector<Rational> k_grid(const Rational& r, int count) {
    const Rational lo = Rational(1) / (2 * r);
    const Rational hi = Rational(2) - Rational(3) / r;
    std::vector<Rational> out;
    if (count == 1) {
        out.push_back((lo + hi) / 2);
        return out;
    }
    for (int i = 0; i < count; ++i) {
        out.push_back(lo + (hi - lo) * Rational(i, count - 1));
    }
    return out;
}

int cmd_certify(RunManifest& manifest, const std::string& matrix_path, const std::string& r_text) {
    manifest.hash_input(matrix_path);
    const Rational r = parse_rational_arg(r_text, "--r");
    const OperatorT op = OperatorT::from_matrix(load_matrix(matrix_path));
    const CertifyResult result = certify_sandwich(op, r);
    if (const auto* cert = std::get_if<SandwichCertificate>(&result)) {
        std::cout << certificate_to_json(*cert).dump(2) << "\n";
        return manifest.finish(kOk, "certified");
    }
    std::cout << failure_to_json(std::get<CertificationFailure>(result)).dump(2) << "\n";
    return manifest.finish(kFailure, "violation");
}

int cmd_enum_nice(RunManifest& manifest, const std::string& out_dir) {
    fs::create_directories(out_dir);
    const auto& family = enumerate_nice_octahedra();
    Json files = Json::array();
    int index = 0;
    for (const auto& m : family) {
        char name[32];
        std::snprintf(name, sizeof name, "nice_%03d.json", index);
        const fs::path path = fs::path(out_dir) / name;
        std::ofstream out(path);
        out << qmatrix_to_json(m).dump(2) << "\n";
        const auto res = certify_sandwich(OperatorT::from_matrix(m), Rational(5, 9));
        if (!std::holds_alternative<SandwichCertificate>(res)) {
            throw Error("internal: family member failed to certify");
        }
        const auto& cert = std::get<SandwichCertificate>(res);
        files.push_back(Json{{"file", name},
                             {"certified_r", rational_to_json(cert.r_requested)},
                             {"ratio", rational_to_json(cert.ratio)}});
        ++index;
    }
    const Json dir_manifest{{"count", index}, {"r", "5/9"}, {"files", files}};
    std::ofstream mout(fs::path(out_dir) / "manifest.json");
    mout << dir_manifest.dump(2) << "\n";
    std::cout << Json{{"count", index}, {"out", out_dir}}.dump(2) << "\n";
    return manifest.finish(kOk, "enumerated");
}

int cmd_asym(RunManifest& manifest, const std::string& polygon_path) {
    manifest.hash_input(polygon_path);
    const VPolytope polygon = load_polygon(polygon_path);
    const AsymmetryResult result = asymmetry(polygon);
    const int contacts = verify_contact_points(polygon, polygon_to_h(polygon), result);
    std::cout << asymmetry_to_json(result, contacts).dump(2) << "\n";
    return manifest.finish(kOk, "as=" + rat_to_string(result.as_value));
}

int cmd_pentagon(RunManifest& manifest, const std::string& r_text, const std::string& k_text,
                 bool as_json) {
    const PentagonParams params{parse_rational_arg(r_text, "--r"),
                                parse_rational_arg(k_text, "--k")};
    params.validate();
    const VPolytope p = pentagon(params);
    if (as_json) {
        std::cout << vpolytope_to_json(p).dump(2) << "\n";
    } else {
        for (const auto& v : p.vertices) {
            std::cout << rat_to_string(v[0]) << " " << rat_to_string(v[1]) << "\n";
        }
    }
    return manifest.finish(kOk, "vertices=" + std::to_string(p.vertices.size()));
}

int cmd_equidist(RunManifest& manifest, const std::string& r_text, const std::string& k_text,
                 const std::string& body_path) {
    manifest.hash_input(body_path);
    const PentagonParams params{parse_rational_arg(r_text, "--r"),
                                parse_rational_arg(k_text, "--k")};
    params.validate();
    const VPolytope body = load_polygon(body_path);
    try {
        const EquidistanceCertificate cert = certify_equidistance(params, body);
        std::cout << equidistance_to_json(cert).dump(2) << "\n";
        return manifest.finish(kOk, "certified");
    } catch (const InclusionFailure& e) {
        std::cout << Json{{"certified", false}, {"reason", e.what()}}.dump(2) << "\n";
        return manifest.finish(kFailure, "inclusion failure");
    }
}

int cmd_equidist_sweep(RunManifest& manifest, const std::string& grid_path) {
    manifest.hash_input(grid_path);
    const auto config = parse_key_value_file(grid_path);
    std::vector<Rational> r_list;
    for (const auto& tok : split_tokens(config.count("r_list") ? config.at("r_list") : "")) {
        r_list.push_back(parse_rational_arg(tok, "r_list"));
    }
    if (r_list.empty()) throw InvalidParams("grid file needs a nonempty r_list");
    const int k_per_r = config.count("k_per_r") ? std::stoi(config.at("k_per_r")) : 3;
    const int random_bodies =
        config.count("random_bodies") ? std::stoi(config.at("random_bodies")) : 0;
    const int random_points =
        config.count("random_points") ? std::stoi(config.at("random_points")) : 5;
    const std::uint64_t seed = config.count("seed") ? std::stoull(config.at("seed")) : 0;
    manifest.seed(seed);

    std::vector<std::pair<std::string, VPolytope>> bodies;
    for (const auto& name :
         split_tokens(config.count("bodies") ? config.at("bodies") : "square hexagon octagon")) {
        if (name == "square" || name == "hexagon" || name == "octagon") {
            bodies.emplace_back(name, builtin_body(name));
        } else {
            bodies.emplace_back(name, load_polygon(name));
        }
    }
    Rng rng(seed);
    for (int i = 0; i < random_bodies; ++i) {
        std::vector<QVector> pts;
        for (int j = 0; j < random_points; ++j) {
            QVector p{rng.uniform_rational(40, 7), rng.uniform_rational(40, 7)};
            pts.push_back(qvec_neg(p));
            pts.push_back(std::move(p));
        }
        try {
            VPolytope hull = convex_hull_2d(pts);
            if (hull.vertices.size() < 4) {
                --i;
                continue;
            }
            bodies.emplace_back("random_" + std::to_string(i), std::move(hull));
        } catch (const Degenerate&) {
            --i;
        }
    }

    bool all_ok = true;
    std::cout << "r,k,body,verdict,as\n";
    for (const auto& r : r_list) {
        for (const auto& k : k_grid(r, k_per_r)) {
            const PentagonParams params{r, k};
            params.validate();
            for (const auto& [name, body] : bodies) {
                std::string verdict = "certified";
                std::string as_text;
                try {
                    const EquidistanceCertificate cert = certify_equidistance(params, body);
                    as_text = rat_to_string(cert.as_check.as_value);
                } catch (const InclusionFailure&) {
                    verdict = "failed";
                    all_ok = false;
                }
                std::cout << rat_to_string(r) << "," << rat_to_string(k) << "," << name << ","
                          << verdict << "," << as_text << "\n";
            }
        }
    }
    return manifest.finish(all_ok ? kOk : kFailure, all_ok ? "all certified" : "failures");
}

int cmd_lemma2d(RunManifest& manifest, const std::string& r_text, long trials,
                std::uint64_t seed) {
    const Rational r = parse_rational_arg(r_text, "--r");
    manifest.seed(seed);
    bool all_ok = true;
    std::cout << "seed,verdict,count_mm,count_mp,count_pm,count_pp,outside,p_x,p_y,q_x,q_y\n";
    for (long t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        const Parallelogram2D par = sample_valid_parallelogram(trial_seed, r);
        const CornerCount counts = corner_classify(par);
        const bool ok = counts.all_ones();
        all_ok = all_ok && ok;
        std::cout << trial_seed << "," << (ok ? "one-per-corner" : "violation") << ","
                  << counts.count(-1, -1) << "," << counts.count(-1, 1) << ","
                  << counts.count(1, -1) << "," << counts.count(1, 1) << "," << counts.outside
                  << "," << rat_to_string(par.p[0]) << "," << rat_to_string(par.p[1]) << ","
                  << rat_to_string(par.q[0]) << "," << rat_to_string(par.q[1]) << "\n";
    }
    return manifest.finish(all_ok ? kOk : kFailure,
                           all_ok ? "all one-per-corner" : "classification violation");
}

int cmd_claim3d(RunManifest& manifest, const std::string& matrix_path) {
    manifest.hash_input(matrix_path);
    const OperatorT op = OperatorT::from_matrix(load_matrix(matrix_path));
    try {
        const Claim3dReport report = claim3d_report(op);
        std::cout << claim3d_to_json(report).dump(2) << "\n";
        const bool holds = report.vertices_in_v && report.at_most_one_per_cube;
        return manifest.finish(holds ? kOk : kFailure, holds ? "holds" : "violated");
    } catch (const PreconditionViolated& e) {
        std::cout << Json{{"holds", false}, {"error", e.what()}}.dump(2) << "\n";
        return manifest.finish(kFailure, "precondition violated");
    }
}

void apply_search_config_file(SearchConfig& cfg, const std::string& path) {
    const auto kv = parse_key_value_file(path);
    if (kv.count("n")) cfg.n = std::stoi(kv.at("n"));
    if (kv.count("restarts")) cfg.restarts = std::stoi(kv.at("restarts"));
    if (kv.count("max_iters")) cfg.max_iters = std::stoi(kv.at("max_iters"));
    if (kv.count("seed")) cfg.seed = std::stoull(kv.at("seed"));
    if (kv.count("denom_bound")) cfg.denom_bound = std::stol(kv.at("denom_bound"));
    if (kv.count("jobs")) cfg.jobs = std::stoi(kv.at("jobs"));
}

void print_search_table(std::ostream& out, const SearchReport& report) {
    out << "search n=" << report.config.n << " restarts=" << report.config.restarts
        << " seed=" << report.config.seed << "\n";
    out << "  best float ratio  " << report.best_float_ratio << "\n";
    out << "  exact ratio       " << rat_to_string(report.exact_ratio) << " (= "
        << rat_to_double(report.exact_ratio) << ")\n";
    if (report.theorem_bound) {
        out << "  theorem value     " << rat_to_string(*report.theorem_bound) << "\n";
    }
    out << "  sqrt(n/2)         " << report.conjecture_constant << "\n";
}

int cmd_search(RunManifest& manifest, SearchConfig cfg) {
    manifest.seed(cfg.seed);
    try {
        const SearchReport report = optimize(cfg);
        std::cout << search_report_to_json(report).dump(2) << "\n";
        print_search_table(std::cerr, report);
        return manifest.finish(kOk, "exact=" + rat_to_string(report.exact_ratio));
    } catch (const CertificationRegression& e) {
        std::cout << Json{{"certified", false}, {"reason", e.what()}}.dump(2) << "\n";
        return manifest.finish(kFailure, "certification regression");
    }
}

int cmd_report(RunManifest& manifest, const std::string& dims, SearchConfig base) {
    int lo = 2, hi = 4;
    const auto dots = dims.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(dims);
        } else {
            lo = std::stoi(dims.substr(0, dots));
            hi = std::stoi(dims.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw InvalidParams("cannot parse --dims range: " + dims);
    }
    if (lo < 2 || hi > 8 || lo > hi) throw InvalidParams("--dims must be within 2..8");
    manifest.seed(base.seed);
    std::cout << "| n | best exact ratio | theorem | sqrt(n/2) |\n";
    std::cout << "|---|------------------|---------|-----------|\n";
    for (int n = lo; n <= hi; ++n) {
        SearchConfig cfg = base;
        cfg.n = n;
        const SearchReport report = optimize(cfg);
        const auto bound = theorem_bound_for(n);
        char conj[32];
        std::snprintf(conj, sizeof conj, "%.6f", report.conjecture_constant);
        std::cout << "| " << n << " | " << rat_to_string(report.exact_ratio) << " | "
                  << (bound ? rat_to_string(*bound) : std::string("-")) << " | " << conj
                  << " |\n";
    }
    return manifest.finish(kOk, "report " + dims);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for Banach-Mazur distance computations"};
    app.require_subcommand(1);

    std::string matrix_path, r_text, k_text, out_dir, polygon_path, body_path, grid_path;
    std::string dims = "2..4";
    bool as_json = false;
    long trials = 100;
    SearchConfig search_cfg;
    SearchConfig report_cfg;
    report_cfg.restarts = 60;
    std::string search_config_path;
    std::uint64_t lemma_seed = 0;

    auto* certify = app.add_subcommand("certify", "certify r C_n ⊆ T(C_n*) ⊆ C_n exactly");
    certify->add_option("--matrix", matrix_path, "operator matrix JSON")
        ->required()
        ->check(CLI::ExistingFile);
    certify->add_option("--r", r_text, "inner radius p/q")->required();

    auto* enum_nice = app.add_subcommand("enum-nice", "write the 192 optimal 3D matrices");
    enum_nice->add_option("--out", out_dir, "output directory")->required();

    auto* search = app.add_subcommand("search", "derivative-free ratio search + certification");
    search->add_option("--n", search_cfg.n, "dimension");
    search->add_option("--restarts", search_cfg.restarts, "random restarts");
    search->add_option("--max-iters", search_cfg.max_iters, "local iterations per phase");
    search->add_option("--seed", search_cfg.seed, "master seed");
    search->add_option("--denom-bound", search_cfg.denom_bound, "rationalization bound");
    search->add_option("--jobs", search_cfg.jobs, "parallel restart workers");
    search->add_option("--config", search_config_path, "key = value config file")
        ->check(CLI::ExistingFile);

    auto* asym = app.add_subcommand("asym", "asymmetry constant and Minkowski center");
    asym->add_option("--polygon", polygon_path, "polygon JSON")->required()->check(
        CLI::ExistingFile);

    auto* pent = app.add_subcommand("pentagon", "construct the pentagon K(r, k)");
    pent->add_option("--r", r_text, "r parameter p/q")->required();
    pent->add_option("--k", k_text, "k parameter p/q")->required();
    pent->add_flag("--json", as_json, "emit polytope JSON instead of plain vertices");

    auto* equidist = app.add_subcommand("equidist", "certify d_BM(K(r,k), L) = r");
    equidist->add_option("--r", r_text, "r parameter p/q")->required();
    equidist->add_option("--k", k_text, "k parameter p/q")->required();
    equidist->add_option("--body", body_path, "symmetric body JSON")->required()->check(
        CLI::ExistingFile);

    auto* sweep = app.add_subcommand("equidist-sweep", "grid sweep to CSV");
    sweep->add_option("--grid", grid_path, "grid config file")->required()->check(
        CLI::ExistingFile);

    auto* lemma2d = app.add_subcommand("lemma2d", "corner-square classification trials to CSV");
    lemma2d->add_option("--r", r_text, "sandwich scale p/q")->required();
    lemma2d->add_option("--trials", trials, "number of sampled parallelograms");
    lemma2d->add_option("--seed", lemma_seed, "master seed");

    auto* claim3d = app.add_subcommand("claim3d", "vertex localization report for a 3D operator");
    claim3d->add_option("--matrix", matrix_path, "operator matrix JSON")
        ->required()
        ->check(CLI::ExistingFile);

    auto* report = app.add_subcommand("report", "markdown table over a dimension range");
    report->add_option("--dims", dims, "range a..b (default 2..4)");
    report->add_option("--restarts", report_cfg.restarts, "random restarts per dimension");
    report->add_option("--seed", report_cfg.seed, "master seed");
    report->add_option("--jobs", report_cfg.jobs, "parallel restart workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    RunManifest manifest(command, argc, argv);
    try {
        if (app.got_subcommand(certify)) return cmd_certify(manifest, matrix_path, r_text);
        if (app.got_subcommand(enum_nice)) return cmd_enum_nice(manifest, out_dir);
        if (app.got_subcommand(search)) {
            if (!search_config_path.empty()) {
                SearchConfig from_file;
                apply_search_config_file(from_file, search_config_path);
                // explicit flags win over config-file values
                if (!search->count("--n")) search_cfg.n = from_file.n;
                if (!search->count("--restarts")) search_cfg.restarts = from_file.restarts;
                if (!search->count("--max-iters")) search_cfg.max_iters = from_file.max_iters;
                if (!search->count("--seed")) search_cfg.seed = from_file.seed;
                if (!search->count("--denom-bound")) search_cfg.denom_bound = from_file.denom_bound;
                if (!search->count("--jobs")) search_cfg.jobs = from_file.jobs;
                manifest.hash_input(search_config_path);
            }
            return cmd_search(manifest, search_cfg);
        }
        if (app.got_subcommand(asym)) return cmd_asym(manifest, polygon_path);
        if (app.got_subcommand(pent)) return cmd_pentagon(manifest, r_text, k_text, as_json);
        if (app.got_subcommand(equidist)) {
            return cmd_equidist(manifest, r_text, k_text, body_path);
        }
        if (app.got_subcommand(sweep)) return cmd_equidist_sweep(manifest, grid_path);
        if (app.got_subcommand(lemma2d)) return cmd_lemma2d(manifest, r_text, trials, lemma_seed);
        if (app.got_subcommand(claim3d)) return cmd_claim3d(manifest, matrix_path);
        if (app.got_subcommand(report)) return cmd_report(manifest, dims, report_cfg);
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return manifest.finish(kUsage, "input error");
    } catch (const InvalidParams& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return manifest.finish(kUsage, "invalid parameters");
    } catch (const SingularMatrix& e) {
        std::cerr << "invalid operator: " << e.what() << "\n";
        return manifest.finish(kUsage, "singular matrix");
    } catch (const DimensionMismatch& e) {
        std::cerr << "dimension mismatch: " << e.what() << "\n";
        return manifest.finish(kUsage, "dimension mismatch");
    } catch (const NotConvex& e) {
        std::cerr << "invalid body: " << e.what() << "\n";
        return manifest.finish(kUsage, "not convex");
    } catch (const Degenerate& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return manifest.finish(kUsage, "degenerate input");
    } catch (const NotSymmetric& e) {
        std::cerr << "body is not symmetric: " << e.what() << "\n";
        return manifest.finish(kUsage, "not symmetric");
    } catch (const SamplingExhausted& e) {
        std::cout << Json{{"error", "sampling exhausted"}, {"detail", e.what()}}.dump(2) << "\n";
        return manifest.finish(kFailure, "sampling exhausted");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return manifest.finish(kFailure, std::string("error: ") + e.what());
    }
}
