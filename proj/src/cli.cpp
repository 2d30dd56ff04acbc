#include "gsep/cli.hpp"

#include "gsep/distance.hpp"
#include "gsep/error.hpp"
#include "gsep/io.hpp"
#include "gsep/scaling.hpp"
#include "gsep/separability.hpp"
#include "gsep/standard_form.hpp"
#include "gsep/states.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace gsep::cli {

using nlohmann::json;

namespace {

class StageTimer {
public:
    explicit StageTimer(json &timings) : timings_(timings) {}

    template <class F>
    auto run(const char *stage, F &&fn) {
        const auto start = std::chrono::steady_clock::now();
        auto result = fn();
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        timings_[stage] = elapsed.count();
        return result;
    }

private:
    json &timings_;
};

json vector_json(const Vector &x) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        arr.push_back(x(i));
    }
    return arr;
}

json matrix_json(const Matrix &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        rows.push_back(vector_json(m.row(i).transpose()));
    }
    return rows;
}

json witness_json(const CovarianceMatrix &v, const WitnessCoefficients &w) {
    const SumConditionReport sum = sum_condition(v, w);
    const ProductConditionReport prod = product_condition(v, w);
    return json{{"a", w.a},
                {"b", w.b},
                {"sum_lhs", sum.lhs},
                {"sum_bound", sum.separable_bound},
                {"sum_violated", sum.violated},
                {"product_lhs", prod.lhs},
                {"product_bound", prod.separable_bound},
                {"product_violated", prod.violated}};
}

json standard_form_json(const StandardForm &sf) {
    return json{{"a", sf.a}, {"b", sf.b}, {"c", sf.c}, {"d", sf.d}, {"transform", matrix_json(sf.transform.assembled())}};
}

std::string fmt6(double x) {
    std::ostringstream s;
    s << std::setprecision(6) << x;
    return s.str();
}

std::string join6(const auto &values) {
    std::string out = "(";
    bool first = true;
    for (double x : values) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += fmt6(x);
    }
    return out + ")";
}

void print_matrix(std::ostream &out, const Matrix &m, const char *indent) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << indent;
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out << std::setw(14) << fmt6(m(i, j));
        }
        out << '\n';
    }
}

struct CheckOptions {
    std::string file;
    double delta = 0.0;
    bool has_delta = false;
    bool witness = false;
    bool scaling = false;
    bool json_output = false;
    std::uint64_t seed = 0;
    int budget = 4096;
};

json run_check(const CheckOptions &opt) {
    json report;
    json timings = json::object();
    StageTimer timer(timings);
    report["input_path"] = opt.file;

    const GaussianState state = timer.run("parse", [&] { return io::read_state(opt.file); });
    const CovarianceMatrix &v = state.covariance;
    report["modes"] = v.mode_count();

    const PhysicalityReport phys = timer.run("physicality", [&] { return is_physical(v); });
    report["physicality"] = {{"is_physical", phys.is_physical}, {"min_eigenvalue_K", phys.min_eigenvalue}};
    if (!phys.is_physical) {
        report["timings_ms"] = timings;
        return report;
    }

    if (v.mode_count() == 2) {
        DecideOptions decide_options;
        decide_options.attach_witness = opt.witness;
        decide_options.witness.seed = opt.seed;
        const SeparabilityVerdict verdict = timer.run("decide", [&] { return decide(v, decide_options); });
        json sep{{"classification", verdict.classification == Classification::entangled ? "entangled" : "separable"},
                 {"f_value", verdict.f_value},
                 {"pt_min_eigenvalue", verdict.pt_min_eigenvalue}};
        if (opt.witness) {
            sep["witness"] = verdict.witness ? witness_json(v, *verdict.witness) : json(nullptr);
        }
        report["separability"] = sep;

        if (opt.has_delta) {
            BoundarySearchOptions boundary;
            boundary.seed = opt.seed;
            const QspVerdict qsp =
                timer.run("distance_to_boundary", [&] { return distance_to_boundary(v, opt.delta, boundary); });
            report["qsp"] = {{"classification", to_string(qsp.classification)},
                             {"delta", opt.delta},
                             {"threshold", qsp.threshold},
                             {"boundary_distance", qsp.boundary_distance},
                             {"hilbert_schmidt_distance", qsp.hilbert_schmidt_distance},
                             {"boundary_point", standard_form_json(qsp.boundary_point)},
                             {"starts_in_agreement", qsp.starts_in_agreement}};
        }
    } else if (opt.has_delta || opt.witness || !opt.scaling) {
        throw Error(ErrorKind::mode_count,
                    "check: separability verdicts need a two-mode input; use --scaling for " +
                        std::to_string(v.mode_count()) + "-mode states");
    }

    if (opt.scaling) {
        const ScalingScanResult scan = timer.run("scaling_scan", [&] { return scaling_scan(v, opt.seed, opt.budget); });
        report["scaling"] = {{"violation", scan.violation ? vector_json(scan.violation->values()) : json(nullptr)},
                             {"min_eigenvalue", scan.min_eigenvalue},
                             {"evaluations", scan.evaluations},
                             {"patterns", scan.patterns}};
    }
    report["timings_ms"] = timings;
    return report;
}

void print_check(std::ostream &out, const json &r) {
    out << "input: " << r["input_path"].get<std::string>() << " (" << r["modes"].get<int>() << " modes)\n";
    const json &phys = r["physicality"];
    out << "physical: " << (phys["is_physical"].get<bool>() ? "yes" : "no")
        << " (min eigenvalue of V + i/2 Omega = " << fmt6(phys["min_eigenvalue_K"].get<double>()) << ")\n";
    if (r.contains("separability")) {
        const json &sep = r["separability"];
        out << "f(V) = " << fmt6(sep["f_value"].get<double>()) << '\n';
        out << "partial-transpose min eigenvalue = " << fmt6(sep["pt_min_eigenvalue"].get<double>()) << '\n';
        out << "classification: " << sep["classification"].get<std::string>() << '\n';
        if (sep.contains("witness")) {
            const json &w = sep["witness"];
            if (w.is_null()) {
                out << "witness: none\n";
            } else {
                out << "witness: a = " << join6(w["a"].get<std::vector<double>>())
                    << ", b = " << join6(w["b"].get<std::vector<double>>()) << '\n';
                out << "  sum condition: " << fmt6(w["sum_lhs"].get<double>()) << " < "
                    << fmt6(w["sum_bound"].get<double>()) << '\n';
            }
        }
    }
    if (r.contains("qsp")) {
        const json &q = r["qsp"];
        out << "precision verdict: " << q["classification"].get<std::string>()
            << " (boundary distance " << fmt6(q["boundary_distance"].get<double>()) << ", threshold 1/delta = "
            << fmt6(q["threshold"].get<double>()) << ")\n";
    }
    if (r.contains("scaling")) {
        const json &s = r["scaling"];
        if (s["violation"].is_null()) {
            out << "scaling scan: no violation (min eigenvalue " << fmt6(s["min_eigenvalue"].get<double>()) << ")\n";
        } else {
            out << "scaling scan: violation at x = " << join6(s["violation"].get<std::vector<double>>())
                << " (min eigenvalue " << fmt6(s["min_eigenvalue"].get<double>()) << ")\n";
        }
    }
}

int run_standard_form(const std::string &file, bool as_json, std::ostream &out) {
    const GaussianState state = io::read_state(file);
    const CovarianceMatrix &v = state.covariance;
    require_modes(v, 2, "standard-form");
    const StandardForm sf = reduce(v);
    const Matrix4 s = sf.transform.assembled();
    const Matrix4 reduced = s * v.two_mode() * s.transpose();
    const double residual = (reduced - standard_form_matrix(sf.a, sf.b, sf.c, sf.d)).cwiseAbs().maxCoeff();
    const SymplecticForm omega(2);
    const double symplectic_residual = (s * omega.matrix() * s.transpose() - omega.matrix()).cwiseAbs().maxCoeff();
    const SymplecticInvariants inv = invariants(v);

    json report = standard_form_json(sf);
    report["input_path"] = file;
    report["residual"] = residual;
    report["symplectic_residual"] = symplectic_residual;
    report["invariants"] = {
        {"det_a", inv.det_a}, {"det_b", inv.det_b}, {"det_c", inv.det_c}, {"cross_trace", inv.cross_trace}};
    if (as_json) {
        out << io::canonical_dump(report) << '\n';
        return kSeparable;
    }
    out << "standard form: a = " << fmt6(sf.a) << ", b = " << fmt6(sf.b) << ", c = " << fmt6(sf.c)
        << ", d = " << fmt6(sf.d) << '\n';
    out << "transform S (S V S^T = standard form):\n";
    print_matrix(out, s, "  ");
    out << "residual max|S V S^T - standard form| = " << fmt6(residual) << '\n';
    out << "symplectic residual max|S Omega S^T - Omega| = " << fmt6(symplectic_residual) << '\n';
    out << "invariants: det A = " << fmt6(inv.det_a) << ", det B = " << fmt6(inv.det_b) << ", det C = "
        << fmt6(inv.det_c) << ", Tr(AJCJBJC^TJ) = " << fmt6(inv.cross_trace) << '\n';
    return kSeparable;
}

int run_distance(const std::string &file_a, const std::string &file_b, bool as_json, std::ostream &out) {
    const GaussianState a = io::read_state(file_a);
    const GaussianState b = io::read_state(file_b);
    require_modes(a.covariance, 2, "distance");
    require_modes(b.covariance, 2, "distance");
    const DistanceReport d = l2_distance_squared(a.covariance, b.covariance);
    if (as_json) {
        out << io::canonical_dump(json{{"first", file_a},
                                       {"second", file_b},
                                       {"wigner_l2_squared", d.wigner_l2_squared},
                                       {"hilbert_schmidt_squared", d.hilbert_schmidt_squared}})
            << '\n';
        return kSeparable;
    }
    out << "Wigner L2 squared distance: " << fmt6(d.wigner_l2_squared) << '\n';
    out << "Hilbert-Schmidt squared distance: " << fmt6(d.hilbert_schmidt_squared) << '\n';
    return kSeparable;
}

int run_generate(const std::string &family, const std::vector<double> &params, std::uint64_t seed,
                 const std::string &out_path, std::ostream &out) {
    states::StateFamily request;
    request.kind = states::parse_family(family);
    request.parameters = params;
    request.seed = seed;
    const GaussianState state = states::generate(request);
    if (out_path.empty()) {
        out << io::state_to_json(state).dump(2) << '\n';
        return kSeparable;
    }
    io::write_state(out_path, state);
    out << out_path << '\n';
    return kSeparable;
}

}  // namespace

int exit_code_for(const json &report) {
    if (!report.at("physicality").at("is_physical").get<bool>()) {
        return kUnphysical;
    }
    if (report.contains("separability") &&
        report["separability"].at("classification").get<std::string>() == "entangled") {
        return kEntangled;
    }
    if (report.contains("scaling") && !report["scaling"].at("violation").is_null()) {
        return kEntangled;
    }
    return kSeparable;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Separability and physicality checks for Gaussian states given by covariance matrices", "gsep"};
    app.require_subcommand(1);

    CheckOptions check_opt;
    auto *check = app.add_subcommand("check", "Classify a state: physical, separable or entangled");
    check->add_option("file", check_opt.file, "Covariance JSON document")->required();
    auto *delta_opt = check->add_option("--delta", check_opt.delta, "Precision; strict verdicts need distance > 1/delta")
                          ->check(CLI::PositiveNumber);
    check->add_flag("--witness", check_opt.witness, "Search for a violated variance witness");
    check->add_flag("--scaling", check_opt.scaling, "Scan partial scalings for a violation");
    check->add_flag("--json", check_opt.json_output, "Print the report as canonical JSON");
    check->add_option("--seed", check_opt.seed, "Seed for multistart searches");
    check->add_option("--budget", check_opt.budget, "Evaluation budget of the scaling scan")->check(CLI::PositiveNumber);

    std::string family;
    std::vector<double> params;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto *generate = app.add_subcommand("generate", "Write a covariance JSON document for a state family");
    generate->add_option("family", family, "vacuum | thermal | tmsv | random-physical | random-product")->required();
    generate->add_option("params", params, "Family parameters");
    generate->add_option("--seed", gen_seed, "Seed for random families");
    generate->add_option("--out", gen_out, "Output path (stdout when omitted)");

    std::string sf_file;
    bool sf_json = false;
    auto *standard = app.add_subcommand("standard-form", "Reduce a two-mode covariance to standard form");
    standard->add_option("file", sf_file, "Covariance JSON document")->required();
    standard->add_flag("--json", sf_json, "Print canonical JSON");

    std::string dist_a;
    std::string dist_b;
    bool dist_json = false;
    auto *distance = app.add_subcommand("distance", "Wigner-L2 distance between two two-mode states");
    distance->add_option("first", dist_a, "Covariance JSON document")->required();
    distance->add_option("second", dist_b, "Covariance JSON document")->required();
    distance->add_flag("--json", dist_json, "Print canonical JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kInvalidInput;
    }

    try {
        if (*check) {
            check_opt.has_delta = delta_opt->count() > 0;
            const json report = run_check(check_opt);
            const int code = exit_code_for(report);
            if (check_opt.json_output) {
                out << io::canonical_dump(report) << '\n';
            } else {
                print_check(out, report);
            }
            return code;
        }
        if (*generate) {
            return run_generate(family, params, gen_seed, gen_out, out);
        }
        if (*standard) {
            return run_standard_form(sf_file, sf_json, out);
        }
        if (*distance) {
            return run_distance(dist_a, dist_b, dist_json, out);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::unphysical ? kUnphysical : kInvalidInput;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace gsep::cli
