// Command-line front end: validation, invariant reports, classification with
// optional witness verification, witness family emission, tau computation,
// and corner-algebra truncation for bound toupie quiver algebras.

#include "toupie/classify.hpp"
#include "toupie/module_io.hpp"
#include "toupie/rep.hpp"
#include "toupie/witness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitVerificationFailed = 3;
constexpr int kExitCapacity = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw toupie::Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const toupie::CapacityError*>(&e)) return kExitCapacity;
    return kExitInvalidInput;
}

toupie::ToupiePresentation load_presentation(const std::string& path, std::ostream& err) {
    toupie::ToupieInput input = toupie::parse_toupie_input(read_input(path));
    toupie::ValidationReport report = toupie::validate_toupie(input);
    if (!report.ok()) {
        err << report.to_string();
        throw toupie::Error("invalid presentation");
    }
    return toupie::ToupiePresentation(std::move(input));
}

std::vector<std::pair<int, int>> parse_ranges(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    if (text.empty()) return out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::size_t colon = item.find(':');
        if (colon == std::string::npos) throw toupie::Error("bad range '" + item + "', expected A:B");
        out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    }
    return out;
}

toupie::Vec parse_relation_vector(const std::string& text) {
    toupie::Vec v;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ','))
        v.push_back(toupie::Scalar::parse(toupie::FieldSpec::rationals(), tok));
    return v;
}

struct ClassifyOutcome {
    std::string out;
    std::string err;
    int code = kExitOk;
};

ClassifyOutcome classify_one(const std::string& path, bool json, bool do_verify, std::uint64_t seed) {
    ClassifyOutcome r;
    std::ostringstream out, err;
    try {
        toupie::ToupiePresentation p = load_presentation(path, err);
        toupie::Classification c = toupie::classify(p);
        if (json) {
            out << toupie::evidence_json(c);
        } else {
            out << "label: " << toupie::label_string(c.label) << "\n";
            out << "fired-case: " << c.evidence.fired_case << "\n";
            out << "t = " << c.evidence.t << ", m = " << c.evidence.m
                << ", simply-connected = " << (c.evidence.simply_connected ? "yes" : "no") << "\n";
            for (const auto& w : c.evidence.warnings) out << "warning: " << w << "\n";
        }
        if (do_verify) {
            toupie::VerificationReport vr = toupie::verify(p, c, seed);
            err << vr.to_string();
            if (!vr.ok()) r.code = kExitVerificationFailed;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        r.code = exit_code_for(e);
    }
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classifier and representation engine for bound toupie quiver algebras"};
    app.require_subcommand(1);

    std::string path = "-";
    bool json = false;

    auto* validate = app.add_subcommand("validate", "check a presentation file");
    validate->add_option("input", path, "presentation file ('-' for stdin)");

    auto* invariants = app.add_subcommand("invariants", "print t, m, linkage and relation counts");
    invariants->add_option("input", path, "presentation file ('-' for stdin)");
    invariants->add_flag("--json", json, "machine-readable output");

    auto* classify_cmd = app.add_subcommand("classify", "classify into the algebra hierarchy");
    std::vector<std::string> classify_inputs;
    bool do_verify = false;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    classify_cmd->add_option("inputs", classify_inputs, "presentation files ('-' for stdin)")
        ->required();
    classify_cmd->add_flag("--json", json, "machine-readable evidence");
    classify_cmd->add_flag("--verify", do_verify, "run the witness checks for the fired case");
    classify_cmd->add_option("--seed", seed, "seed for the randomized property checks");
    classify_cmd->add_option("--jobs", jobs, "process input files in parallel");

    auto* witness = app.add_subcommand("witness", "emit a witness family instance");
    std::string family;
    int w_r = 2, w_s = 1, w_m = 2, w_len = 2, w_d1 = 1, w_d2 = 1, w_t = 4;
    std::string w_lambda = "1", w_ranges, w_relation = "-1,1,1,1", w_input;
    int w_x = 0, w_y = 1;
    witness->add_option("--family", family, "sec32 | sec33-m2 | sec33-m1-n | sec33-two-branches | ifam | d-xy | rad-p0")
        ->required();
    witness->add_option("--input", w_input, "presentation file (d-xy, rad-p0)");
    witness->add_option("--lambda", w_lambda, "family parameter");
    witness->add_option("--r", w_r, "long branch count (sec32)");
    witness->add_option("--s", w_s, "bypass count (sec32)");
    witness->add_option("--m", w_m, "source-to-sink dimension (sec32, sec33-m2)");
    witness->add_option("--len", w_len, "branch length (sec33 families)");
    witness->add_option("--ranges", w_ranges, "zero ranges A:B,C:D (sec33 families)");
    witness->add_option("--d1", w_d1, "first tail length (sec33-two-branches)");
    witness->add_option("--d2", w_d2, "second tail length (sec33-two-branches)");
    witness->add_option("--t", w_t, "branch count (ifam)");
    witness->add_option("--relation", w_relation, "comma-separated relation vector (ifam)");
    witness->add_option("--x", w_x, "first endpoint position (d-xy)");
    witness->add_option("--y", w_y, "second endpoint position (d-xy)");

    auto* tau = app.add_subcommand("tau", "Auslander-Reiten translate of a module");
    std::string tau_module = "rad-p0";
    int tau_power_n = 1;
    tau->add_option("input", path, "presentation file ('-' for stdin)");
    tau->add_option("--module", tau_module, "module file, or 'rad-p0'");
    tau->add_option("--power", tau_power_n, "number of translate applications");

    auto* truncate = app.add_subcommand("truncate", "corner algebra eAe at a vertex subset");
    std::string trunc_vertices;
    truncate->add_option("input", path, "presentation file ('-' for stdin)");
    truncate->add_option("--vertices", trunc_vertices, "comma-separated vertices (0, inf, i.j)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) {
            toupie::ToupieInput input = toupie::parse_toupie_input(read_input(path));
            toupie::ValidationReport report = toupie::validate_toupie(input);
            if (!report.ok()) {
                std::cerr << report.to_string();
                return kExitInvalidInput;
            }
            std::cout << "ok\n";
            return kExitOk;
        }

        if (invariants->parsed()) {
            toupie::ToupiePresentation p = load_presentation(path, std::cerr);
            toupie::Classification c = toupie::classify(p);
            if (json) {
                std::cout << toupie::invariants_json(c.evidence);
            } else {
                const auto& e = c.evidence;
                std::cout << "t = " << e.t << "\nm = " << e.m << "\nlengths =";
                for (int len : e.lengths) std::cout << " " << len;
                std::cout << "\nsimply-connected = " << (e.simply_connected ? "yes" : "no");
                std::cout << "\nlinkage-edges =";
                for (const auto& [a, b] : e.linkage_edges) std::cout << " (" << a << "," << b << ")";
                std::cout << "\nbranches-in-ideal =";
                for (int b : e.branches_in_ideal) std::cout << " " << b;
                std::cout << "\nrelations-per-branch =";
                for (int r : e.relations_per_branch) std::cout << " " << r;
                std::cout << "\ncanonical = ";
                if (e.canonical) {
                    std::cout << "yes, lambdas:";
                    for (const auto& l : e.canonical->lambdas) std::cout << " " << l.to_string();
                } else {
                    std::cout << "no";
                }
                std::cout << "\n";
            }
            return kExitOk;
        }

        if (classify_cmd->parsed()) {
            std::vector<ClassifyOutcome> results(classify_inputs.size());
            if (jobs > 1 && classify_inputs.size() > 1) {
                std::vector<std::future<ClassifyOutcome>> futures;
                for (const auto& file : classify_inputs)
                    futures.push_back(std::async(std::launch::async, classify_one, file, json,
                                                 do_verify, seed));
                for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
            } else {
                for (std::size_t i = 0; i < classify_inputs.size(); ++i)
                    results[i] = classify_one(classify_inputs[i], json, do_verify, seed);
            }
            int worst = kExitOk;
            for (std::size_t i = 0; i < results.size(); ++i) {
                if (classify_inputs.size() > 1 && !json)
                    std::cout << "== " << classify_inputs[i] << " ==\n";
                std::cout << results[i].out;
                std::cerr << results[i].err;
                worst = std::max(worst, results[i].code);
            }
            return worst;
        }

        if (witness->parsed()) {
            toupie::Scalar lambda = toupie::Scalar::parse(toupie::FieldSpec::rationals(), w_lambda);
            if (family == "d-xy" || family == "rad-p0") {
                if (w_input.empty()) throw toupie::Error("--input is required for this family");
                toupie::ToupiePresentation p = load_presentation(w_input, std::cerr);
                auto A = toupie::algebra_of(p);
                toupie::Representation M = family == "rad-p0"
                                               ? toupie::rad_p0(*A)
                                               : toupie::build_d_xy(p, *A, w_x, w_y);
                std::cout << toupie::serialize_module(M);
                return kExitOk;
            }
            toupie::WitnessBuild w = [&] {
                if (family == "sec32") return toupie::build_sec32(w_r, w_s, w_m, lambda);
                if (family == "sec33-m2")
                    return toupie::build_sec33_m2(w_len, parse_ranges(w_ranges), w_m, lambda);
                if (family == "sec33-m1-n")
                    return toupie::build_sec33_m1_n(w_len, parse_ranges(w_ranges));
                if (family == "sec33-two-branches")
                    return toupie::build_sec33_two_branches(w_d1, w_d2, lambda);
                if (family == "ifam")
                    return toupie::build_sec4_ifam(w_t, parse_relation_vector(w_relation), lambda);
                throw toupie::Error("unknown family '" + family + "'");
            }();
            std::cout << w.presentation.serialize() << "\n" << toupie::serialize_module(w.module);
            return kExitOk;
        }

        if (tau->parsed()) {
            toupie::ToupiePresentation p = load_presentation(path, std::cerr);
            auto A = toupie::algebra_of(p);
            toupie::Representation M =
                tau_module == "rad-p0"
                    ? toupie::rad_p0(*A)
                    : toupie::parse_module(A->quiver_ptr(), read_input(tau_module));
            if (!toupie::check(M)) throw toupie::Error("input module fails the relations");
            toupie::Representation T = toupie::tau_power(*A, M, tau_power_n);
            std::cout << "dim-vector: " << T.dim_vector_string() << "\n";
            std::cout << toupie::serialize_module(T);
            return kExitOk;
        }

        if (truncate->parsed()) {
            toupie::ToupiePresentation p = load_presentation(path, std::cerr);
            auto A = toupie::algebra_of(p);
            std::vector<int> verts;
            std::istringstream vs(trunc_vertices);
            std::string tok;
            while (std::getline(vs, tok, ',')) {
                auto v = toupie::ToupieVertex::parse(tok);
                if (!v) throw toupie::Error("bad vertex '" + tok + "'");
                verts.push_back(toupie::general_vertex_index(p.quiver(), *v));
            }
            toupie::GeneralBoundQuiver corner = A->truncate(verts);
            if (auto rec = toupie::recognize_toupie(corner)) {
                std::cout << rec->serialize();
            } else {
                std::cout << corner.to_string();
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kExitUsage;
}
