// Acceptance suite: runs every gate criterion at its stated value and prints
// one PASS/FAIL line per criterion (with sub-check details on failure).
// Returns the number of failed criteria.

#include "tests/support/oracles.hpp"
#include "toupie/classify.hpp"
#include "toupie/rep.hpp"
#include "toupie/witness.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

using namespace toupie;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct Criterion {
    std::string name;
    std::vector<std::pair<bool, std::string>> checks;

    void add(bool ok, const std::string& detail) { checks.emplace_back(ok, detail); }
    bool ok() const {
        for (const auto& [pass, _] : checks)
            if (!pass) return false;
        return !checks.empty();
    }
};

std::vector<Criterion> g_criteria;

Criterion& criterion(const std::string& name) {
    g_criteria.push_back(Criterion{name, {}});
    return g_criteria.back();
}

ToupiePresentation make(const std::string& text) { return ToupiePresentation::parse(text); }

std::shared_ptr<BasedAlgebra> vandermonde_algebra(int t, int m) {
    std::ostringstream os;
    os << "field rational\nbranches " << t << "\nlengths";
    for (int i = 0; i < t; ++i) os << " 2";
    os << "\n";
    for (int row = 0; row < t - m; ++row) {
        os << "relation comb";
        for (int i = 1; i <= t; ++i) {
            long long v = 1;
            for (int e = 0; e < row; ++e) v *= i;
            os << " " << v;
        }
        os << "\n";
    }
    return algebra_of(make(os.str()));
}

struct DetRng {
    unsigned long long s;
    explicit DetRng(unsigned long long seed) : s(seed * 2862933555777941757ULL + 104729) {}
    unsigned long long next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
    int pick(int n) { return static_cast<int>(next() % static_cast<unsigned long long>(n)); }
};

Representation random_cokernel(const BasedAlgebra& A, DetRng& rng) {
    std::vector<int> p0, p1;
    for (int i = 0, k = 1 + rng.pick(2); i < k; ++i) p0.push_back(rng.pick(A.num_vertices()));
    for (int i = 0, k = 1 + rng.pick(2); i < k; ++i) p1.push_back(rng.pick(A.num_vertices()));
    SumRep P0 = projective_sum(A, p0);
    SumRep P1 = projective_sum(A, p1);
    ModuleMap f;
    for (std::size_t v = 0; v < P0.rep.dims.size(); ++v)
        f.vertex_maps.emplace_back(Q, P0.rep.dim_at(static_cast<int>(v)),
                                   P1.rep.dim_at(static_cast<int>(v)));
    for (const auto& h : hom_basis(P1.rep, P0.rep)) {
        long c = static_cast<long>(rng.pick(5)) - 2;
        if (c == 0) continue;
        for (std::size_t v = 0; v < f.vertex_maps.size(); ++v)
            f.vertex_maps[v] = f.vertex_maps[v] + h.vertex_maps[v] * Scalar::of(Q, c);
    }
    return cokernel_rep(P1.rep, P0.rep, f).rep;
}

std::string dims_str(const Representation& M) { return M.dim_vector_string(); }

// --------------------------------------------------------------------------

void criterion_classification_fixtures() {
    Criterion& c = criterion("classification fixtures");
    struct Case {
        std::string text;
        ClassLabel expected;
        std::string note;
    };
    std::vector<Case> cases{
        {"field rational\nbranches 3\nlengths 2 2 2\n", ClassLabel::Hereditary, "no relations"},
        {"field rational\nbranches 4\nlengths 3 3 2 2\n"
         "relation comb 1 1 -1 0\nrelation comb 1 2 0 -1\n",
         ClassLabel::QuasitiltedNotTilted, "canonical parameters (1,2)"},
        {"field rational\nbranches 2\nlengths 3 3\nrelation mono 1 0 2\nrelation mono 2 0 2\n",
         ClassLabel::TiltedNotHereditary, "m=0, one relation per branch"},
        {"field rational\nbranches 2\nlengths 4 3\nrelation mono 1 0 2\nrelation mono 1 2 4\n",
         ClassLabel::WeaklyShodNotQuasitilted,
         "stated label; the computed invariants give m=1 with a unique ideal branch, which the "
         "decision tree maps to laura-not-weakly-shod"},
        {"field rational\nbranches 2\nlengths 3 1\nrelation mono 1 0 3\n",
         ClassLabel::LauraNotWeaklyShod, "unique branch in the ideal"},
        {"field rational\nbranches 3\nlengths 2 2 2\nrelation comb 1 -1 0\n", ClassLabel::NotLaura,
         "no branch in the ideal"},
        {"field rational\nbranches 2\nlengths 2 2\nrelation comb 1 -1\n",
         ClassLabel::TiltedNotHereditary, "simply connected, m=1"},
        {"field rational\nbranches 5\nlengths 2 2 2 2 2\n"
         "relation comb 1 1 1 1 1\nrelation comb 1 2 3 4 5\n",
         ClassLabel::NotLaura, "simply connected, m=3, t>m+1"},
        {"field rational\nbranches 4\nlengths 2 2 2 5\nrelation comb 1 1 1 1\n",
         ClassLabel::TiltedNotHereditary, "m=3=t-1, one long branch"},
    };
    for (std::size_t i = 0; i < cases.size(); ++i) {
        ClassLabel got = classify(make(cases[i].text)).label;
        bool ok = got == cases[i].expected;
        c.add(ok, "fixture " + std::to_string(i + 1) + ": expected " +
                      label_string(cases[i].expected) + ", computed " + label_string(got) +
                      (ok ? "" : " (" + cases[i].note + ")"));
    }
}

void criterion_tau_dim_vectors() {
    Criterion& c = criterion("translate dimension-vector family");
    struct Case {
        int t, m;
    };
    for (Case ca : {Case{5, 3}, Case{6, 3}, Case{6, 4}}) {
        auto A = vandermonde_algebra(ca.t, ca.m);
        Representation tau = ar_translate(*A, rad_p0(*A));
        std::vector<int> expected(static_cast<std::size_t>(ca.t) + 2);
        expected[0] = ca.m * (ca.t - ca.m) - ca.t + 1;
        for (int i = 1; i <= ca.t; ++i) expected[static_cast<std::size_t>(i)] = ca.t - ca.m - 1;
        expected[static_cast<std::size_t>(ca.t) + 1] = ca.t - ca.m;
        bool ok = tau.dims == expected;
        c.add(ok, "(t,m)=(" + std::to_string(ca.t) + "," + std::to_string(ca.m) + ") " +
                      dims_str(tau));
        int r = expected[0];
        c.add(r == (ca.m - 1) * (ca.t - ca.m - 1),
              "r = m(t-m)-t+1 = (m-1)(t-m-1) = " + std::to_string(r));
    }
}

void criterion_tau_cubed() {
    Criterion& c = criterion("translate cubed pattern");
    ToupiePresentation p = make(
        "field rational\nbranches 4\nlengths 3 3 2 2\nrelation comb 1 1 1 1\n");
    auto A = algebra_of(p);
    Representation t3 = tau_power(*A, rad_p0(*A), 3);
    const ToupieQuiver& tq = p.quiver();
    // Stated pattern: top entry r = t^2-5t+5 = 1, entries 1 at the heads of
    // the two long branches, 0 at the short heads and the long-branch second
    // vertices, and 1 at the sink.
    auto at = [&](const ToupieVertex& v) {
        return t3.dims[static_cast<std::size_t>(general_vertex_index(tq, v))];
    };
    c.add(at(ToupieVertex::source()) == 1, "top entry = " + std::to_string(at(ToupieVertex::source())));
    c.add(at(ToupieVertex::internal(3, 1)) == 1 && at(ToupieVertex::internal(4, 1)) == 1,
          "long-branch heads = (" + std::to_string(at(ToupieVertex::internal(3, 1))) + "," +
              std::to_string(at(ToupieVertex::internal(4, 1))) + ")");
    c.add(at(ToupieVertex::internal(1, 1)) == 0 && at(ToupieVertex::internal(2, 1)) == 0,
          "short heads vanish");
    c.add(at(ToupieVertex::internal(3, 2)) == 0 && at(ToupieVertex::internal(4, 2)) == 0,
          "long-branch second vertices vanish");
    int sink_val = at(ToupieVertex::sink());
    c.add(sink_val == 1,
          "sink entry = " + std::to_string(sink_val) +
              " (stated 1; the exact sequence 0 -> tau^3 M -> nu P1 -> nu P0 forces 0 there, since "
              "nu P1 has no sink component; total dim " +
              std::to_string(t3.total_dim()) + " matches 4 - 1 + 0)");
}

void criterion_tau_tilted_identity() {
    Criterion& c = criterion("tilted translate identity");
    ToupiePresentation p = make(
        "field rational\nbranches 4\nlengths 2 2 2 3\nrelation comb 1 1 1 1\n");
    auto A = algebra_of(p);
    Representation tau = ar_translate(*A, rad_p0(*A));
    int target = general_vertex_index(p.quiver(), ToupieVertex::internal(4, 2));
    auto found = iso(tau, projective(*A, target));
    c.add(found.has_value(), "tau(rad P_0) " + dims_str(tau) +
                                 (found ? " is the projective below the long-branch head"
                                        : " is not isomorphic to the expected projective"));
}

void criterion_witness_contracts() {
    Criterion& c = criterion("witness contracts");
    // Bypass family at (r,s) = (2,1): stated pd = id = 2 with leftmost rank
    // k = 2(r-m+s)-1 = 1.
    {
        WitnessBuild w = build_sec32(2, 1, 2, Scalar::of(Q, 1));
        int pdim = pd(*w.algebra, w.module);
        int idim = injective_dim(*w.algebra, w.module);
        c.add(pdim == 2, "sec32(2,1): stated pd 2, computed " + std::to_string(pdim) +
                             (pdim == 2 ? "" : " (the first syzygy is projective)"));
        c.add(idim == 2, "sec32(2,1): stated id 2, computed " + std::to_string(idim));
        // Leftmost rank of the stated resolution: the second syzygy should
        // be one copy of the sink projective.
        Representation s1 = syzygy(*w.algebra, w.module);
        Representation s2 = syzygy(*w.algebra, s1);
        int k = s2.is_zero() ? 0 : projective_cover(*w.algebra, s2).cover.summand_vertices.size();
        c.add(k == 1, "sec32(2,1): stated leftmost rank 1, computed second syzygy " + dims_str(s2));
    }
    // Single-branch families: both dimensions at least 2.
    {
        WitnessBuild m2 = build_sec33_m2(2, {{0, 2}}, 2, Scalar::of(Q, 1));
        c.add(pd(*m2.algebra, m2.module) >= 2 && injective_dim(*m2.algebra, m2.module) >= 2,
              "sec33-m2: pd, id >= 2");
        WitnessBuild n = build_sec33_m1_n(3, {});
        c.add(pd(*n.algebra, n.module) >= 2 && injective_dim(*n.algebra, n.module) >= 2,
              "sec33-m1-n: pd, id >= 2");
        WitnessBuild tb = build_sec33_two_branches(2, 2, Scalar::of(Q, 1));
        c.add(pd(*tb.algebra, tb.module) >= 2 && injective_dim(*tb.algebra, tb.module) >= 2,
              "sec33-two-branches: pd, id >= 2");
    }
    // Pairwise non-isomorphic lambda samples for every family.
    {
        auto pairwise = [&](const std::string& name, const std::vector<Representation>& mods) {
            bool ok = true;
            for (std::size_t i = 0; i < mods.size(); ++i)
                for (std::size_t j = i + 1; j < mods.size(); ++j)
                    if (iso(mods[i], mods[j])) ok = false;
            c.add(ok, name + ": lambda in {1,2,3} pairwise non-isomorphic");
        };
        std::vector<Representation> a, b, d, e;
        for (long l : {1, 2, 3}) {
            a.push_back(build_sec32(2, 1, 2, Scalar::of(Q, l)).module);
            b.push_back(build_sec33_m2(2, {{0, 2}}, 2, Scalar::of(Q, l)).module);
            d.push_back(build_sec33_two_branches(2, 2, Scalar::of(Q, l)).module);
            e.push_back(
                build_sec4_ifam(4, {Scalar::of(Q, -1), Scalar::of(Q, 1), Scalar::of(Q, 1), Scalar::of(Q, 1)},
                                Scalar::of(Q, l))
                    .module);
        }
        pairwise("sec32", a);
        pairwise("sec33-m2", b);
        pairwise("sec33-two-branches", d);
        pairwise("ifam", e);
    }
}

void criterion_minimal_relation_oracle() {
    Criterion& c = criterion("minimal-relation oracle equivalence");
    DetRng rng(2024);
    int done = 0, attempts = 0;
    while (done < 50 && attempts < 500) {
        ++attempts;
        int t = 2 + done % 5;
        int d = 1 + done % 2;
        if (done % 10 == 9 && t >= 4) d = 3;
        if (d >= t) d = t - 1;
        std::vector<std::vector<long>> rows;
        for (int i = 0; i < d; ++i) {
            std::vector<long> row;
            for (int j = 0; j < t; ++j) row.push_back(static_cast<long>(rng.pick(5)) - 2);
            rows.push_back(std::move(row));
        }
        // Keep instances whose span has the same dimension over Q and F_101.
        std::vector<Vec> qrows;
        for (const auto& row : rows) {
            Vec v;
            for (long x : row) v.push_back(Scalar::of(Q, x));
            qrows.push_back(std::move(v));
        }
        Subspace W(Q, t, qrows);
        if (W.dim() != d) continue;
        if (toupie_tests::rank_mod_p(rows, 101) != d) continue;

        IdealClosure cl;
        cl.t = t;
        cl.lengths.assign(static_cast<std::size_t>(t), 2);
        cl.monomial_ranges.resize(static_cast<std::size_t>(t));
        cl.W = W;
        cl.m = t - d;
        for (int b = 1; b <= t; ++b)
            if (cl.W.contains(unit_vec(Q, t, b - 1))) cl.branches_in_I.push_back(b);

        MinimalRelationCatalog cat = minimal_relations(cl);
        std::set<std::vector<int>> algo;
        for (const auto& s : cat.supports) algo.insert(s.branches);
        std::set<std::vector<int>> oracle = toupie_tests::minimal_supports_mod_p(rows, t, 101);
        if (algo != oracle) {
            std::ostringstream os;
            os << "instance " << done << " (t=" << t << ", dim=" << d << ") disagrees";
            c.add(false, os.str());
        }
        ++done;
    }
    c.add(done == 50, std::to_string(done) + " instances compared against the F_101 enumeration");
}

void criterion_homological_properties(const std::vector<ToupiePresentation>& corpus) {
    Criterion& c = criterion("homological property suite");
    int checked_modules = 0, failures = 0;
    std::string first_failure;
    auto record = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (first_failure.empty()) first_failure = what;
        }
    };
    std::vector<std::shared_ptr<BasedAlgebra>> algebras;
    for (const auto& p : corpus) {
        if (!p.field().is_rational()) continue;
        algebras.push_back(algebra_of(p));
    }
    for (const auto& A : algebras) {
        for (int x = 0; x < A->num_vertices(); ++x) {
            record(ar_translate(*A, projective(*A, x)).is_zero(), "translate of a projective");
            record(pd(*A, projective(*A, x)) == 0, "pd of a projective");
            record(injective_dim(*A, injective(*A, x)) == 0, "id of an injective");
        }
    }
    DetRng rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto& A = algebras[static_cast<std::size_t>(i) % algebras.size()];
        Representation M = random_cokernel(*A, rng);
        ++checked_modules;
        int x = rng.pick(A->num_vertices());
        record(hom_dim(projective(*A, x), M) == M.dim_at(x), "dim Hom(P_x, M) = dim M_x");
        record(hom_dim(M, injective(*A, x)) == M.dim_at(x), "dim Hom(M, I_x) = dim M_x");
        // Syzygy kernels are superfluous: contained in the radical.
        ProjCover pc = projective_cover(*A, M);
        SubRep K = kernel_rep(pc.cover.rep, M, pc.epi);
        SubRep R = radical(pc.cover.rep);
        bool inside = true;
        for (int v = 0; v < A->num_vertices(); ++v) {
            std::vector<Vec> cols;
            const Matrix& inc = R.inclusion.vertex_maps[static_cast<std::size_t>(v)];
            for (int cc = 0; cc < inc.cols(); ++cc) cols.push_back(inc.col(cc));
            Subspace rad_v(Q, pc.cover.rep.dim_at(v), cols);
            const Matrix& kinc = K.inclusion.vertex_maps[static_cast<std::size_t>(v)];
            for (int cc = 0; cc < kinc.cols(); ++cc)
                if (!rad_v.contains(kinc.col(cc))) inside = false;
        }
        record(inside, "syzygy contained in the radical");
        record(pd(*A, M) <= A->num_vertices() - 1, "pd bounded by the vertex count");
        if (M.total_dim() <= 8)
            record(injective_dim(*A, M) == toupie_tests::injective_dim_by_coresolution(*A, M),
                   "id equals the direct coresolution");
    }
    c.add(failures == 0, std::to_string(checked_modules) + " random modules over " +
                             std::to_string(algebras.size()) + " algebras" +
                             (failures ? ", first failure: " + first_failure : ""));
}

void criterion_source_sink_vanishing() {
    Criterion& c = criterion("source/sink vanishing on m=0 corners");
    std::vector<std::string> fixtures{
        "field rational\nbranches 2\nlengths 3 3\nrelation mono 1 0 2\nrelation mono 2 0 2\n",
        "field rational\nbranches 2\nlengths 4 3\n"
        "relation mono 1 0 2\nrelation mono 1 2 4\nrelation mono 2 0 3\n"};
    for (const auto& text : fixtures) {
        auto A = algebra_of(make(text));
        int sink = A->num_vertices() - 1;
        DetRng rng(11);
        int confirmed = 0, violations = 0, undecided = 0;
        for (int i = 0; i < 20; ++i) {
            Representation M = random_cokernel(*A, rng);
            auto [parts, all] = split_into_indecomposables(M);
            (void)all;
            for (const auto& part : parts) {
                if (try_split(part).status != IndecompStatus::Yes) {
                    ++undecided;
                    continue;
                }
                ++confirmed;
                if (part.dims[0] != 0 && part.dims[static_cast<std::size_t>(sink)] != 0) ++violations;
            }
        }
        c.add(violations == 0 && undecided == 0,
              std::to_string(confirmed) + " summands confirmed, " + std::to_string(violations) +
                  " violations, " + std::to_string(undecided) + " undecided");
    }
}

void criterion_truncation_monotonicity() {
    Criterion& c = criterion("truncation monotonicity");
    struct Fixture {
        std::string text;
        std::vector<std::string> verts;
    };
    std::vector<Fixture> fixtures{
        {"field rational\nbranches 3\nlengths 2 2 2\nrelation comb 1 -1 0\n",
         {"0", "1.1", "2.1", "inf"}},
        {"field rational\nbranches 2\nlengths 2 2\nrelation comb 1 -1\n",
         {"0", "1.1", "2.1", "inf"}},
        {"field rational\nbranches 4\nlengths 2 2 2 2\n"
         "relation comb 1 1 -1 0\nrelation comb 1 2 0 -1\n",
         {"0", "1.1", "2.1", "inf"}},
        {"field rational\nbranches 4\nlengths 2 2 2 2\n"
         "relation comb 1 1 1 0\nrelation comb 0 1 1 1\n",
         {"0", "1.1", "4.1", "inf"}},
        {"field rational\nbranches 2\nlengths 4 3\n"
         "relation mono 1 0 2\nrelation mono 1 2 4\nrelation mono 2 0 3\n",
         {"0", "2.1", "2.2", "2.3", "inf"}},
        {"field rational\nbranches 3\nlengths 2 2 2\n", {"0", "1.1", "inf"}},
        {"field rational\nbranches 5\nlengths 2 2 2 2 2\n"
         "relation comb 1 1 1 1 1\nrelation comb 1 2 3 4 5\n",
         {"0", "1.1", "2.1", "3.1", "inf"}},
    };
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        ToupiePresentation p = make(fixtures[i].text);
        Classification cls = classify(p);
        auto A = algebra_of(p);
        std::vector<int> verts;
        for (const auto& name : fixtures[i].verts)
            verts.push_back(general_vertex_index(p.quiver(), *ToupieVertex::parse(name)));
        auto corner = recognize_toupie(A->truncate(verts));
        if (!corner) {
            c.add(false, "fixture " + std::to_string(i) + ": corner is not a toupie");
            continue;
        }
        Classification sub = classify(*corner);
        bool ok = hierarchy_rank(sub.label) <= hierarchy_rank(cls.label);
        c.add(ok, "fixture " + std::to_string(i) + ": " + label_string(sub.label) + " <= " +
                      label_string(cls.label));
    }
}

std::string run_command(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

void criterion_determinism(const std::string& cli, const std::string& source_dir) {
    Criterion& c = criterion("byte determinism of the evidence");
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(source_dir + "/tests/fixtures"))
        if (entry.path().extension() == ".toupie") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    std::string args;
    for (const auto& f : files) args += " '" + f + "'";
    std::string first = run_command("'" + cli + "' classify --json" + args + " 2>/dev/null");
    std::string second = run_command("'" + cli + "' classify --json" + args + " 2>/dev/null");
    std::string parallel =
        run_command("'" + cli + "' classify --json --jobs 4" + args + " 2>/dev/null");
    c.add(!first.empty(), "classifier produced output for " + std::to_string(files.size()) +
                              " fixtures");
    c.add(first == second, "repeated run is byte-identical");
    c.add(first == parallel, "parallel run is byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    std::string source_dir = argc > 2 ? argv[2] : ".";

    std::vector<ToupiePresentation> corpus;
    {
        namespace fs = std::filesystem;
        std::vector<std::string> files;
        for (const auto& entry : fs::directory_iterator(source_dir + "/tests/fixtures"))
            if (entry.path().extension() == ".toupie") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            std::ifstream in(f);
            std::ostringstream os;
            os << in.rdbuf();
            corpus.push_back(make(os.str()));
        }
    }

    criterion_classification_fixtures();
    criterion_tau_dim_vectors();
    criterion_tau_cubed();
    criterion_tau_tilted_identity();
    criterion_witness_contracts();
    criterion_minimal_relation_oracle();
    criterion_homological_properties(corpus);
    criterion_source_sink_vanishing();
    criterion_truncation_monotonicity();
    if (!cli.empty()) criterion_determinism(cli, source_dir);

    int failed = 0;
    for (std::size_t i = 0; i < g_criteria.size(); ++i) {
        const Criterion& c = g_criteria[i];
        bool ok = c.ok();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << c.name << "\n";
        for (const auto& [pass, detail] : c.checks)
            if (!ok) std::cout << "     " << (pass ? "ok   " : "FAIL ") << detail << "\n";
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << "\n";
    return failed;
}
