#include "toupie/algebra.hpp"

#include <algorithm>
#include <atomic>

namespace toupie {

namespace {
constexpr int kMaxPathsPerPair = 4096;
}

BasedAlgebra::BasedAlgebra(GeneralBoundQuiver quiver)
    : quiver_(std::make_shared<GeneralBoundQuiver>(std::move(quiver))) {
    if (!quiver_->topological_order()) throw Error("bound quiver must be acyclic");
    build_pair_tables();
}

const BasedAlgebra::PairData& BasedAlgebra::pair(int u, int v) const {
    return pairs_[static_cast<std::size_t>(u) * num_vertices() + v];
}

void BasedAlgebra::build_pair_tables() {
    const GeneralBoundQuiver& q = *quiver_;
    const FieldSpec& f = q.field;
    int n = q.num_vertices();
    pairs_.resize(static_cast<std::size_t>(n) * n);

    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            PairData& pd = pairs_[static_cast<std::size_t>(u) * n + v];
            if (u == v) {
                pd.paths.push_back({});  // the trivial path
            } else {
                pd.paths = q.paths_between(u, v);
            }
            if (static_cast<int>(pd.paths.size()) > kMaxPathsPerPair)
                throw CapacityError("too many parallel paths between vertices");
            for (int i = 0; i < static_cast<int>(pd.paths.size()); ++i)
                pd.path_index[pd.paths[static_cast<std::size_t>(i)]] = i;
        }
    }

    // Ideal components: every two-sided product prefix * generator * suffix,
    // graded by endpoints.
    std::vector<std::vector<Vec>> ideal_gens(static_cast<std::size_t>(n) * n);
    for (const auto& rel : q.relations) {
        if (rel.terms.empty()) continue;
        int x = q.path_source(rel.terms[0].arrows);
        int y = q.path_target(rel.terms[0].arrows);
        for (int u = 0; u < n; ++u) {
            const auto& prefixes = pair(u, x).paths;
            for (int v = 0; v < n; ++v) {
                const auto& suffixes = pair(y, v).paths;
                PairData& pd = pairs_[static_cast<std::size_t>(u) * n + v];
                for (const auto& a : prefixes) {
                    for (const auto& b : suffixes) {
                        Vec vec = zero_vec(f, static_cast<int>(pd.paths.size()));
                        for (const auto& term : rel.terms) {
                            std::vector<int> whole = a;
                            whole.insert(whole.end(), term.arrows.begin(), term.arrows.end());
                            whole.insert(whole.end(), b.begin(), b.end());
                            auto it = pd.path_index.find(whole);
                            if (it == pd.path_index.end())
                                throw Error("internal: product path missing from pair table");
                            vec[static_cast<std::size_t>(it->second)] += term.coeff;
                        }
                        ideal_gens[static_cast<std::size_t>(u) * n + v].push_back(std::move(vec));
                    }
                }
            }
        }
    }

    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            PairData& pd = pairs_[static_cast<std::size_t>(u) * n + v];
            int np = static_cast<int>(pd.paths.size());
            pd.ideal = Subspace(f, np, std::move(ideal_gens[static_cast<std::size_t>(u) * n + v]));
            pd.rep_indices = pd.ideal.complement_coords();
            // Rows of B: ideal basis then representative units; expressing a
            // path vector in B-coordinates and keeping the unit part reduces
            // modulo the ideal.
            int k = static_cast<int>(pd.rep_indices.size());
            std::vector<Vec> rows = pd.ideal.basis();
            for (int r : pd.rep_indices) rows.push_back(unit_vec(f, np, r));
            Matrix B = Matrix::from_rows(f, rows, np);
            Matrix Binv_t = B.transpose().inverse();
            pd.reduce_matrix = Matrix(f, k, np);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < np; ++j)
                    pd.reduce_matrix.at(i, j) = Binv_t.at(np - k + i, j);
        }
    }

    arrow_classes_.reserve(static_cast<std::size_t>(q.num_arrows()));
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
        arrow_classes_.push_back(class_of_path(ar.src, ar.dst, {a}));
    }
}

int BasedAlgebra::dim(int u, int v) const { return static_cast<int>(pair(u, v).rep_indices.size()); }

int BasedAlgebra::total_dim() const {
    int d = 0;
    for (int u = 0; u < num_vertices(); ++u)
        for (int v = 0; v < num_vertices(); ++v) d += dim(u, v);
    return d;
}

const std::vector<std::vector<int>>& BasedAlgebra::all_paths(int u, int v) const {
    return pair(u, v).paths;
}

const Subspace& BasedAlgebra::ideal_component(int u, int v) const { return pair(u, v).ideal; }

std::vector<std::vector<int>> BasedAlgebra::basis_paths(int u, int v) const {
    const PairData& pd = pair(u, v);
    std::vector<std::vector<int>> out;
    out.reserve(pd.rep_indices.size());
    for (int r : pd.rep_indices) out.push_back(pd.paths[static_cast<std::size_t>(r)]);
    return out;
}

Vec BasedAlgebra::reduce(int u, int v, const Vec& path_vector) const {
    return pair(u, v).reduce_matrix.apply(path_vector);
}

Vec BasedAlgebra::class_of_path(int u, int v, const std::vector<int>& arrows) const {
    const PairData& pd = pair(u, v);
    auto it = pd.path_index.find(arrows);
    if (it == pd.path_index.end()) throw Error("path does not run between the given vertices");
    Vec v0 = zero_vec(field(), static_cast<int>(pd.paths.size()));
    v0[static_cast<std::size_t>(it->second)] = Scalar::of(field(), 1);
    return reduce(u, v, v0);
}

Vec BasedAlgebra::mult(int u, int v, int w, const Vec& a, const Vec& b) const {
    const PairData& puv = pair(u, v);
    const PairData& pvw = pair(v, w);
    const PairData& puw = pair(u, w);
    if (static_cast<int>(a.size()) != dim(u, v) || static_cast<int>(b.size()) != dim(v, w))
        throw Error("element coordinate size mismatch in mult");
    Vec acc = zero_vec(field(), static_cast<int>(puw.paths.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        const auto& pa = puv.paths[static_cast<std::size_t>(puv.rep_indices[i])];
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            const auto& pb = pvw.paths[static_cast<std::size_t>(pvw.rep_indices[j])];
            std::vector<int> whole = pa;
            whole.insert(whole.end(), pb.begin(), pb.end());
            auto it = puw.path_index.find(whole);
            if (it == puw.path_index.end()) throw Error("internal: concatenated path missing");
            acc[static_cast<std::size_t>(it->second)] += a[i] * b[j];
        }
    }
    return reduce(u, w, acc);
}

const Vec& BasedAlgebra::arrow_class(int arrow) const {
    return arrow_classes_[static_cast<std::size_t>(arrow)];
}

BasedAlgebra BasedAlgebra::reversed_of(const BasedAlgebra& a) {
    BasedAlgebra op;
    op.quiver_ = std::make_shared<GeneralBoundQuiver>(a.quiver_->opposite());
    int n = a.num_vertices();
    op.pairs_.resize(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const PairData& src = a.pair(v, u);
            PairData& dst = op.pairs_[static_cast<std::size_t>(u) * n + v];
            dst.paths.reserve(src.paths.size());
            for (const auto& p : src.paths) dst.paths.emplace_back(p.rbegin(), p.rend());
            for (int i = 0; i < static_cast<int>(dst.paths.size()); ++i)
                dst.path_index[dst.paths[static_cast<std::size_t>(i)]] = i;
            dst.ideal = src.ideal;  // path coordinates are preserved by reversal
            dst.rep_indices = src.rep_indices;
            dst.reduce_matrix = src.reduce_matrix;
        }
    }
    op.arrow_classes_ = a.arrow_classes_;  // arrow k reverses to arrow k
    return op;
}

const BasedAlgebra& BasedAlgebra::opposite() const {
    // Lazily built; concurrent readers may race to build, the first store
    // wins and the duplicates are dropped (atomic shared_ptr access keeps
    // the object safe for concurrent read-only use).
    auto cached = std::atomic_load_explicit(&opposite_, std::memory_order_acquire);
    if (!cached) {
        auto op = std::make_shared<BasedAlgebra>(reversed_of(*this));
        op->opposite_ = std::make_shared<BasedAlgebra>(*this);
        std::shared_ptr<BasedAlgebra> expected;
        if (std::atomic_compare_exchange_strong(&opposite_, &expected, op))
            cached = std::move(op);
        else
            cached = std::atomic_load_explicit(&opposite_, std::memory_order_acquire);
    }
    return *cached;
}

GeneralBoundQuiver BasedAlgebra::truncate(const std::vector<int>& vertices) const {
    const FieldSpec& f = field();
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty()) throw Error("truncation needs a nonempty vertex set");
    for (int v : verts)
        if (v < 0 || v >= num_vertices()) throw Error("truncation vertex out of range");
    int nv = static_cast<int>(verts.size());

    GeneralBoundQuiver out;
    out.field = f;
    for (int v : verts) out.vertex_labels.push_back(quiver_->vertex_labels[static_cast<std::size_t>(v)]);

    // Arrows: a deterministic basis of rad(eAe)/rad^2(eAe) per pair, where
    // rad^2(eAe)(u,v) is spanned by products through intermediate vertices
    // of the subset.
    std::vector<std::vector<Vec>> arrow_elems(static_cast<std::size_t>(nv) * nv);
    for (int iu = 0; iu < nv; ++iu) {
        for (int iv = 0; iv < nv; ++iv) {
            int u = verts[static_cast<std::size_t>(iu)], v = verts[static_cast<std::size_t>(iv)];
            if (u == v) continue;
            int d = dim(u, v);
            if (d == 0) continue;
            std::vector<Vec> rad2;
            for (int iw = 0; iw < nv; ++iw) {
                int w = verts[static_cast<std::size_t>(iw)];
                if (w == u || w == v) continue;
                for (int i = 0; i < dim(u, w); ++i)
                    for (int j = 0; j < dim(w, v); ++j)
                        rad2.push_back(mult(u, w, v, unit_vec(f, dim(u, w), i), unit_vec(f, dim(w, v), j)));
            }
            Subspace rad2_space(f, d, std::move(rad2));
            for (int c : rad2_space.complement_coords()) {
                Vec g = unit_vec(f, d, c);
                arrow_elems[static_cast<std::size_t>(iu) * nv + iv].push_back(g);
                Arrow a;
                a.src = iu;
                a.dst = iv;
                a.label = "e" + std::to_string(out.arrows.size());
                out.arrows.push_back(std::move(a));
            }
        }
    }

    // Relations: per pair, the kernel of path |-> product of arrow elements.
    std::vector<Vec> arrow_elem_flat;
    for (int iu = 0; iu < nv; ++iu)
        for (int iv = 0; iv < nv; ++iv)
            for (const auto& g : arrow_elems[static_cast<std::size_t>(iu) * nv + iv])
                arrow_elem_flat.push_back(g);

    for (int iu = 0; iu < nv; ++iu) {
        for (int iv = 0; iv < nv; ++iv) {
            if (iu == iv) continue;
            auto paths = out.paths_between(iu, iv);
            if (static_cast<int>(paths.size()) > kMaxPathsPerPair)
                throw CapacityError("truncation kernel exceeds the configured path bound");
            if (paths.empty()) continue;
            int u = verts[static_cast<std::size_t>(iu)], v = verts[static_cast<std::size_t>(iv)];
            std::vector<Vec> images;
            for (const auto& p : paths) {
                int cur = iu;
                Vec val;
                bool first = true;
                for (int a : p) {
                    int nxt = out.arrows[static_cast<std::size_t>(a)].dst;
                    const Vec& g = arrow_elem_flat[static_cast<std::size_t>(a)];
                    if (first) {
                        val = g;
                        first = false;
                    } else {
                        val = mult(u, verts[static_cast<std::size_t>(cur)], verts[static_cast<std::size_t>(nxt)],
                                   val, g);
                    }
                    cur = nxt;
                }
                images.push_back(std::move(val));
            }
            Matrix img = Matrix::from_cols(f, images, dim(u, v));
            for (const auto& k : img.kernel_basis()) {
                GeneralRelation rel;
                for (std::size_t i = 0; i < paths.size(); ++i)
                    if (!k[i].is_zero()) rel.terms.push_back({k[i], paths[i]});
                if (!rel.terms.empty()) out.relations.push_back(std::move(rel));
            }
        }
    }
    return out;
}

}  // namespace toupie
