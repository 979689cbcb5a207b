#include "toupie/rep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toupie {

int Representation::total_dim() const {
    int d = 0;
    for (int x : dims) d += x;
    return d;
}

std::string Representation::dim_vector_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? " " : "") << dims[i];
    os << ")";
    return os.str();
}

Representation zero_representation(std::shared_ptr<const GeneralBoundQuiver> q) {
    Representation M;
    M.dims.assign(static_cast<std::size_t>(q->num_vertices()), 0);
    const FieldSpec& f = q->field;
    for (int a = 0; a < q->num_arrows(); ++a) M.arrows.emplace_back(f, 0, 0);
    M.quiver = std::move(q);
    return M;
}

Matrix path_action(const Representation& M, int src, const std::vector<int>& path_arrows) {
    Matrix acc = Matrix::identity(M.field(), M.dim_at(src));
    for (int a : path_arrows) acc = M.arrows[static_cast<std::size_t>(a)] * acc;
    return acc;
}

bool check(const Representation& M) {
    const GeneralBoundQuiver& q = *M.quiver;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
        const Matrix& m = M.arrows[static_cast<std::size_t>(a)];
        if (m.rows() != M.dim_at(ar.dst) || m.cols() != M.dim_at(ar.src))
            throw Error("arrow matrix shape mismatch");
    }
    for (const auto& rel : q.relations) {
        if (rel.terms.empty()) continue;
        int src = q.path_source(rel.terms[0].arrows);
        int dst = q.path_target(rel.terms[0].arrows);
        Matrix acc(M.field(), M.dim_at(dst), M.dim_at(src));
        for (const auto& term : rel.terms)
            acc = acc + path_action(M, src, term.arrows) * term.coeff;
        if (!acc.is_zero()) return false;
    }
    return true;
}

bool is_module_map(const Representation& M, const Representation& N, const ModuleMap& f) {
    const GeneralBoundQuiver& q = *M.quiver;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
        Matrix lhs = f.vertex_maps[static_cast<std::size_t>(ar.dst)] * M.arrows[static_cast<std::size_t>(a)];
        Matrix rhs = N.arrows[static_cast<std::size_t>(a)] * f.vertex_maps[static_cast<std::size_t>(ar.src)];
        if (!(lhs == rhs)) return false;
    }
    return true;
}

ModuleMap compose(const ModuleMap& second, const ModuleMap& first) {
    ModuleMap out;
    out.vertex_maps.reserve(first.vertex_maps.size());
    for (std::size_t v = 0; v < first.vertex_maps.size(); ++v)
        out.vertex_maps.push_back(second.vertex_maps[v] * first.vertex_maps[v]);
    return out;
}

Representation simple(const BasedAlgebra& A, int x) {
    Representation M = zero_representation(A.quiver_ptr());
    M.dims[static_cast<std::size_t>(x)] = 1;
    const GeneralBoundQuiver& q = A.quiver();
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
        M.arrows[static_cast<std::size_t>(a)] =
            Matrix(A.field(), M.dim_at(ar.dst), M.dim_at(ar.src));
    }
    return M;
}

Representation projective(const BasedAlgebra& A, int x) {
    const GeneralBoundQuiver& q = A.quiver();
    Representation M;
    M.quiver = A.quiver_ptr();
    M.dims.resize(static_cast<std::size_t>(q.num_vertices()));
    for (int y = 0; y < q.num_vertices(); ++y) M.dims[static_cast<std::size_t>(y)] = A.dim(x, y);
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
        std::vector<Vec> cols;
        for (int j = 0; j < A.dim(x, ar.src); ++j)
            cols.push_back(A.mult(x, ar.src, ar.dst, unit_vec(A.field(), A.dim(x, ar.src), j),
                                  A.arrow_class(a)));
        M.arrows.push_back(Matrix::from_cols(A.field(), cols, A.dim(x, ar.dst)));
    }
    return M;
}

Representation injective(const BasedAlgebra& A, int x) {
    const GeneralBoundQuiver& q = A.quiver();
    Representation M;
    M.quiver = A.quiver_ptr();
    M.dims.resize(static_cast<std::size_t>(q.num_vertices()));
    for (int y = 0; y < q.num_vertices(); ++y) M.dims[static_cast<std::size_t>(y)] = A.dim(y, x);
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
        // Transpose of left multiplication e_{dst} A e_x -> e_{src} A e_x.
        std::vector<Vec> cols;
        for (int j = 0; j < A.dim(ar.dst, x); ++j)
            cols.push_back(A.mult(ar.src, ar.dst, x, A.arrow_class(a),
                                  unit_vec(A.field(), A.dim(ar.dst, x), j)));
        Matrix L = Matrix::from_cols(A.field(), cols, A.dim(ar.src, x));
        M.arrows.push_back(L.transpose());
    }
    return M;
}

namespace {

SumRep sum_of(const BasedAlgebra& A, const std::vector<int>& vertices, bool projectives) {
    const GeneralBoundQuiver& q = A.quiver();
    int n = q.num_vertices();
    SumRep out;
    out.summand_vertices = vertices;
    std::vector<Representation> parts;
    for (int x : vertices) parts.push_back(projectives ? projective(A, x) : injective(A, x));

    Representation sum;
    sum.quiver = A.quiver_ptr();
    sum.dims.assign(static_cast<std::size_t>(n), 0);
    out.offsets.assign(vertices.size(), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (std::size_t s = 0; s < parts.size(); ++s)
        for (int v = 0; v < n; ++v) {
            out.offsets[s][static_cast<std::size_t>(v)] = sum.dims[static_cast<std::size_t>(v)];
            sum.dims[static_cast<std::size_t>(v)] += parts[s].dims[static_cast<std::size_t>(v)];
        }
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
        Matrix m(A.field(), sum.dim_at(ar.dst), sum.dim_at(ar.src));
        for (std::size_t s = 0; s < parts.size(); ++s) {
            const Matrix& block = parts[s].arrows[static_cast<std::size_t>(a)];
            int ro = out.offsets[s][static_cast<std::size_t>(ar.dst)];
            int co = out.offsets[s][static_cast<std::size_t>(ar.src)];
            for (int r = 0; r < block.rows(); ++r)
                for (int c = 0; c < block.cols(); ++c) m.at(ro + r, co + c) = block.at(r, c);
        }
        sum.arrows.push_back(std::move(m));
    }
    out.rep = std::move(sum);
    return out;
}

}  // namespace

SumRep projective_sum(const BasedAlgebra& A, const std::vector<int>& vertices) {
    return sum_of(A, vertices, true);
}

SumRep injective_sum(const BasedAlgebra& A, const std::vector<int>& vertices) {
    return sum_of(A, vertices, false);
}

std::vector<ModuleMap> hom_basis(const Representation& M, const Representation& N) {
    const GeneralBoundQuiver& q = *M.quiver;
    if (N.quiver.get() != &q) {
        if (N.quiver->num_arrows() != q.num_arrows() ||
            N.quiver->num_vertices() != q.num_vertices())
            throw Error("hom_basis over different quivers");
        for (int a = 0; a < q.num_arrows(); ++a)
            if (N.quiver->arrows[static_cast<std::size_t>(a)].src !=
                    q.arrows[static_cast<std::size_t>(a)].src ||
                N.quiver->arrows[static_cast<std::size_t>(a)].dst !=
                    q.arrows[static_cast<std::size_t>(a)].dst)
                throw Error("hom_basis over different quivers");
    }
    const FieldSpec& f = M.field();
    int n = q.num_vertices();
    std::vector<int> base(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v)
        base[static_cast<std::size_t>(v) + 1] =
            base[static_cast<std::size_t>(v)] + N.dim_at(v) * M.dim_at(v);
    int unknowns = base[static_cast<std::size_t>(n)];

    auto index = [&](int v, int r, int c) { return base[static_cast<std::size_t>(v)] + r * M.dim_at(v) + c; };

    std::vector<Vec> rows;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
        const Matrix& Ma = M.arrows[static_cast<std::size_t>(a)];
        const Matrix& Na = N.arrows[static_cast<std::size_t>(a)];
        // (f_v M_a - N_a f_u)[r][c] = 0
        for (int r = 0; r < N.dim_at(ar.dst); ++r) {
            for (int c = 0; c < M.dim_at(ar.src); ++c) {
                Vec row = zero_vec(f, unknowns);
                for (int k = 0; k < M.dim_at(ar.dst); ++k)
                    row[static_cast<std::size_t>(index(ar.dst, r, k))] += Ma.at(k, c);
                for (int k = 0; k < N.dim_at(ar.src); ++k)
                    row[static_cast<std::size_t>(index(ar.src, k, c))] -= Na.at(r, k);
                rows.push_back(std::move(row));
            }
        }
    }
    Matrix sys = Matrix::from_rows(f, rows, unknowns);
    std::vector<ModuleMap> basis;
    for (const auto& k : sys.kernel_basis()) {
        ModuleMap h;
        for (int v = 0; v < n; ++v) {
            Matrix m(f, N.dim_at(v), M.dim_at(v));
            for (int r = 0; r < N.dim_at(v); ++r)
                for (int c = 0; c < M.dim_at(v); ++c)
                    m.at(r, c) = k[static_cast<std::size_t>(index(v, r, c))];
            h.vertex_maps.push_back(std::move(m));
        }
        basis.push_back(std::move(h));
    }
    return basis;
}

int hom_dim(const Representation& M, const Representation& N) {
    return static_cast<int>(hom_basis(M, N).size());
}

SubRep sub_representation(const Representation& M, const std::vector<Subspace>& spaces) {
    const GeneralBoundQuiver& q = *M.quiver;
    const FieldSpec& f = M.field();
    SubRep out;
    out.rep.quiver = M.quiver;
    for (std::size_t v = 0; v < spaces.size(); ++v) out.rep.dims.push_back(spaces[v].dim());
    for (int v = 0; v < q.num_vertices(); ++v) {
        const auto& basis = spaces[static_cast<std::size_t>(v)].basis();
        Matrix B = Matrix::from_cols(f, basis, M.dim_at(v));
        out.inclusion.vertex_maps.push_back(std::move(B));
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
        Matrix rhs = M.arrows[static_cast<std::size_t>(a)] * out.inclusion.vertex_maps[static_cast<std::size_t>(ar.src)];
        auto X = out.inclusion.vertex_maps[static_cast<std::size_t>(ar.dst)].solve_matrix(rhs);
        if (!X) throw Error("subspaces are not closed under the arrow maps");
        out.rep.arrows.push_back(std::move(*X));
    }
    return out;
}

QuotRep quotient_representation(const Representation& M, const std::vector<Subspace>& spaces) {
    const GeneralBoundQuiver& q = *M.quiver;
    const FieldSpec& f = M.field();
    QuotRep out;
    out.rep.quiver = M.quiver;
    std::vector<Matrix> lifts;
    for (int v = 0; v < q.num_vertices(); ++v) {
        const Subspace& S = spaces[static_cast<std::size_t>(v)];
        std::vector<int> comp = S.complement_coords();
        int c = static_cast<int>(comp.size());
        out.rep.dims.push_back(c);
        // Rows of B: subspace basis then complement units; the projection is
        // the complement part of the B-coordinate expression.
        std::vector<Vec> rows = S.basis();
        for (int j : comp) rows.push_back(unit_vec(f, M.dim_at(v), j));
        Matrix Binv_t = Matrix::from_rows(f, rows, M.dim_at(v)).transpose().inverse();
        Matrix P(f, c, M.dim_at(v));
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < M.dim_at(v); ++j) P.at(i, j) = Binv_t.at(S.dim() + i, j);
        out.projection.vertex_maps.push_back(std::move(P));
        std::vector<Vec> lift_cols;
        for (int j : comp) lift_cols.push_back(unit_vec(f, M.dim_at(v), j));
        lifts.push_back(Matrix::from_cols(f, lift_cols, M.dim_at(v)));
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
        out.rep.arrows.push_back(out.projection.vertex_maps[static_cast<std::size_t>(ar.dst)] *
                                 M.arrows[static_cast<std::size_t>(a)] *
                                 lifts[static_cast<std::size_t>(ar.src)]);
    }
    return out;
}

std::vector<Subspace> image_subspaces(const Representation& M, const Representation& N,
                                      const ModuleMap& f) {
    std::vector<Subspace> images;
    for (std::size_t v = 0; v < N.dims.size(); ++v) {
        std::vector<Vec> cols;
        for (int c = 0; c < f.vertex_maps[v].cols(); ++c) cols.push_back(f.vertex_maps[v].col(c));
        images.emplace_back(M.field(), N.dim_at(static_cast<int>(v)), std::move(cols));
    }
    (void)M;
    return images;
}

SubRep kernel_rep(const Representation& M, const Representation& N, const ModuleMap& f) {
    (void)N;
    std::vector<Subspace> kernels;
    for (std::size_t v = 0; v < M.dims.size(); ++v)
        kernels.emplace_back(M.field(), M.dim_at(static_cast<int>(v)), f.vertex_maps[v].kernel_basis());
    return sub_representation(M, kernels);
}

QuotRep cokernel_rep(const Representation& M, const Representation& N, const ModuleMap& f) {
    return quotient_representation(N, image_subspaces(M, N, f));
}

SubRep radical(const Representation& M) {
    const GeneralBoundQuiver& q = *M.quiver;
    std::vector<std::vector<Vec>> gens(M.dims.size());
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
        const Matrix& m = M.arrows[static_cast<std::size_t>(a)];
        for (int c = 0; c < m.cols(); ++c) gens[static_cast<std::size_t>(ar.dst)].push_back(m.col(c));
    }
    std::vector<Subspace> spaces;
    for (std::size_t v = 0; v < M.dims.size(); ++v)
        spaces.emplace_back(M.field(), M.dim_at(static_cast<int>(v)), std::move(gens[v]));
    return sub_representation(M, spaces);
}

QuotRep top(const Representation& M) {
    const GeneralBoundQuiver& q = *M.quiver;
    std::vector<std::vector<Vec>> gens(M.dims.size());
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
        const Matrix& m = M.arrows[static_cast<std::size_t>(a)];
        for (int c = 0; c < m.cols(); ++c) gens[static_cast<std::size_t>(ar.dst)].push_back(m.col(c));
    }
    std::vector<Subspace> spaces;
    for (std::size_t v = 0; v < M.dims.size(); ++v)
        spaces.emplace_back(M.field(), M.dim_at(static_cast<int>(v)), std::move(gens[v]));
    return quotient_representation(M, spaces);
}

SubRep socle(const Representation& M) {
    const GeneralBoundQuiver& q = *M.quiver;
    const FieldSpec& f = M.field();
    std::vector<Subspace> spaces;
    for (int v = 0; v < q.num_vertices(); ++v) {
        std::vector<Vec> stacked_rows;
        for (int a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
            if (ar.src != v) continue;
            const Matrix& m = M.arrows[static_cast<std::size_t>(a)];
            for (int r = 0; r < m.rows(); ++r) stacked_rows.push_back(m.row(r));
        }
        Matrix stacked = Matrix::from_rows(f, stacked_rows, M.dim_at(v));
        spaces.emplace_back(f, M.dim_at(v), stacked.kernel_basis());
    }
    return sub_representation(M, spaces);
}

ProjCover projective_cover(const BasedAlgebra& A, const Representation& M) {
    const FieldSpec& f = A.field();
    // Lift a basis of top(M): per vertex, standard coordinates completing
    // the radical.
    SubRep rad = radical(M);
    std::vector<int> cover_vertices;
    std::vector<Vec> lifts;
    for (int v = 0; v < A.num_vertices(); ++v) {
        Subspace rad_v(f, M.dim_at(v), [&] {
            std::vector<Vec> cols;
            const Matrix& inc = rad.inclusion.vertex_maps[static_cast<std::size_t>(v)];
            for (int c = 0; c < inc.cols(); ++c) cols.push_back(inc.col(c));
            return cols;
        }());
        for (int j : rad_v.complement_coords()) {
            cover_vertices.push_back(v);
            lifts.push_back(unit_vec(f, M.dim_at(v), j));
        }
    }
    ProjCover out;
    out.cover = projective_sum(A, cover_vertices);
    // Map: the generator of the s-th summand P_x goes to its lift; a basis
    // path p of (x,y) goes to M_p(lift).
    out.epi.vertex_maps.reserve(M.dims.size());
    for (int y = 0; y < A.num_vertices(); ++y) {
        Matrix m(f, M.dim_at(y), out.cover.rep.dim_at(y));
        for (std::size_t s = 0; s < cover_vertices.size(); ++s) {
            int x = cover_vertices[s];
            auto paths = A.basis_paths(x, y);
            for (std::size_t j = 0; j < paths.size(); ++j) {
                Vec img = path_action(M, x, paths[j]).apply(lifts[s]);
                int col = out.cover.offsets[s][static_cast<std::size_t>(y)] + static_cast<int>(j);
                for (int r = 0; r < M.dim_at(y); ++r) m.at(r, col) = img[static_cast<std::size_t>(r)];
            }
        }
        out.epi.vertex_maps.push_back(std::move(m));
    }
    return out;
}

Representation syzygy(const BasedAlgebra& A, const Representation& M) {
    ProjCover pc = projective_cover(A, M);
    return kernel_rep(pc.cover.rep, M, pc.epi).rep;
}

int pd(const BasedAlgebra& A, const Representation& M) {
    Representation cur = M;
    int guard = A.num_vertices() + 1;
    for (int d = 0; d <= guard; ++d) {
        ProjCover pc = projective_cover(A, cur);
        Representation K = kernel_rep(pc.cover.rep, cur, pc.epi).rep;
        if (K.is_zero()) return d;
        cur = std::move(K);
    }
    throw Error("internal: projective dimension exceeded the acyclicity bound");
}

Representation dual_module(const BasedAlgebra& A, const Representation& M) {
    Representation D;
    D.quiver = A.opposite().quiver_ptr();
    D.dims = M.dims;
    for (const auto& m : M.arrows) D.arrows.push_back(m.transpose());
    return D;
}

int injective_dim(const BasedAlgebra& A, const Representation& M) {
    return pd(A.opposite(), dual_module(A, M));
}

MinimalPresentation minimal_presentation(const BasedAlgebra& A, const Representation& M) {
    MinimalPresentation out;
    out.cover = projective_cover(A, M);
    SubRep K = kernel_rep(out.cover.cover.rep, M, out.cover.epi);
    ProjCover pc1 = projective_cover(A, K.rep);
    out.p1 = std::move(pc1.cover);
    out.f = compose(K.inclusion, pc1.epi);
    const auto& x_verts = out.cover.cover.summand_vertices;
    const auto& y_verts = out.p1.summand_vertices;
    out.elems.assign(x_verts.size(), std::vector<Vec>(y_verts.size()));
    for (std::size_t j = 0; j < y_verts.size(); ++j) {
        int y = y_verts[j];
        // Image of the j-th generator: the column of f at the generator
        // coordinate (the trivial-path slot of summand j at vertex y).
        int gcol = out.p1.offsets[j][static_cast<std::size_t>(y)];
        Vec img = out.f.vertex_maps[static_cast<std::size_t>(y)].col(gcol);
        for (std::size_t i = 0; i < x_verts.size(); ++i) {
            int off = out.cover.cover.offsets[i][static_cast<std::size_t>(y)];
            int len = A.dim(x_verts[i], y);
            Vec a = zero_vec(A.field(), len);
            for (int k = 0; k < len; ++k) a[static_cast<std::size_t>(k)] = img[static_cast<std::size_t>(off + k)];
            out.elems[i][j] = std::move(a);
        }
    }
    return out;
}

Representation ar_translate(const BasedAlgebra& A, const Representation& M) {
    MinimalPresentation mp = minimal_presentation(A, M);
    const auto& x_verts = mp.cover.cover.summand_vertices;
    const auto& y_verts = mp.p1.summand_vertices;
    if (y_verts.empty()) return zero_representation(A.quiver_ptr());  // projective (or zero)

    const BasedAlgebra& op = A.opposite();
    const FieldSpec& f = A.field();
    // Hom(-, A) sends the presentation map to right multiplication between
    // the dual projectives over the opposite algebra.
    SumRep src = projective_sum(op, x_verts);
    SumRep dst = projective_sum(op, y_verts);
    ModuleMap g;
    for (int u = 0; u < op.num_vertices(); ++u) {
        Matrix m(f, dst.rep.dim_at(u), src.rep.dim_at(u));
        for (std::size_t i = 0; i < x_verts.size(); ++i) {
            int xi = x_verts[i];
            int d_ui = A.dim(u, xi);  // = op.dim(xi, u)
            for (int col = 0; col < d_ui; ++col) {
                for (std::size_t j = 0; j < y_verts.size(); ++j) {
                    Vec prod = A.mult(u, xi, y_verts[j], unit_vec(f, d_ui, col), mp.elems[i][j]);
                    int ro = dst.offsets[j][static_cast<std::size_t>(u)];
                    int co = src.offsets[i][static_cast<std::size_t>(u)] + col;
                    for (std::size_t r = 0; r < prod.size(); ++r)
                        m.at(ro + static_cast<int>(r), co) += prod[r];
                }
            }
        }
        g.vertex_maps.push_back(std::move(m));
    }
    Representation tr = cokernel_rep(src.rep, dst.rep, g).rep;  // Tr M over A^op
    return dual_module(op, tr);                                 // D Tr M over A
}

Representation ar_inverse(const BasedAlgebra& A, const Representation& M) {
    // TrD: dualize to the opposite side, then transpose back over A.
    const BasedAlgebra& op = A.opposite();
    Representation D = dual_module(A, M);  // over A^op
    MinimalPresentation mp = minimal_presentation(op, D);
    const auto& x_verts = mp.cover.cover.summand_vertices;
    const auto& y_verts = mp.p1.summand_vertices;
    if (y_verts.empty()) return zero_representation(A.quiver_ptr());

    const FieldSpec& f = A.field();
    SumRep src = projective_sum(A, x_verts);
    SumRep dst = projective_sum(A, y_verts);
    ModuleMap g;
    for (int u = 0; u < A.num_vertices(); ++u) {
        Matrix m(f, dst.rep.dim_at(u), src.rep.dim_at(u));
        for (std::size_t i = 0; i < x_verts.size(); ++i) {
            int xi = x_verts[i];
            int d_ui = op.dim(u, xi);
            for (int col = 0; col < d_ui; ++col) {
                for (std::size_t j = 0; j < y_verts.size(); ++j) {
                    Vec prod = op.mult(u, xi, y_verts[j], unit_vec(f, d_ui, col), mp.elems[i][j]);
                    int ro = dst.offsets[j][static_cast<std::size_t>(u)];
                    int co = src.offsets[i][static_cast<std::size_t>(u)] + col;
                    for (std::size_t r = 0; r < prod.size(); ++r)
                        m.at(ro + static_cast<int>(r), co) += prod[r];
                }
            }
        }
        g.vertex_maps.push_back(std::move(m));
    }
    return cokernel_rep(src.rep, dst.rep, g).rep;  // Tr(D M) over A
}

Representation tau_power(const BasedAlgebra& A, Representation M, int n) {
    for (int i = 0; i < n; ++i) {
        if (M.is_zero()) return M;
        M = ar_translate(A, M);
    }
    return M;
}

// ---------------------------------------------------------------------------
// Indecomposability and isomorphism search
// ---------------------------------------------------------------------------

namespace {

// Coordinates of an endomorphism in the hom basis. Kernel basis vectors are
// unit at their own free column and zero at the others', so coefficients can
// be read off at the free columns; instead of tracking those we solve the
// tiny linear system directly.
Matrix endo_coords_matrix(const std::vector<ModuleMap>& basis) {
    if (basis.empty()) return Matrix();
    const FieldSpec& f = basis[0].vertex_maps[0].field();
    std::vector<Vec> cols;
    for (const auto& h : basis) {
        Vec flat;
        for (const auto& m : h.vertex_maps)
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) flat.push_back(m.at(r, c));
        cols.push_back(std::move(flat));
    }
    return Matrix::from_cols(f, cols, static_cast<int>(cols[0].size()));
}

Vec flatten_map(const ModuleMap& h) {
    Vec flat;
    for (const auto& m : h.vertex_maps)
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) flat.push_back(m.at(r, c));
    return flat;
}

ModuleMap scale_map(const Scalar& c, const ModuleMap& h) {
    ModuleMap out;
    for (const auto& m : h.vertex_maps) out.vertex_maps.push_back(m * c);
    return out;
}

ModuleMap add_maps(const ModuleMap& a, const ModuleMap& b) {
    ModuleMap out;
    for (std::size_t v = 0; v < a.vertex_maps.size(); ++v)
        out.vertex_maps.push_back(a.vertex_maps[v] + b.vertex_maps[v]);
    return out;
}

// Fitting decomposition of M along phi - c: kernel and image of the N-th
// power, both submodules; nontrivial when c is an eigenvalue but phi - c is
// not nilpotent.
std::optional<std::pair<Representation, Representation>> fitting_split(
    const Representation& M, const ModuleMap& phi, const Scalar& c) {
    const FieldSpec& f = M.field();
    int N = M.total_dim();
    std::vector<Matrix> power;
    for (std::size_t v = 0; v < M.dims.size(); ++v) {
        Matrix psi = phi.vertex_maps[v] - Matrix::identity(f, M.dim_at(static_cast<int>(v))) * c;
        Matrix acc = Matrix::identity(f, psi.rows());
        for (int i = 0; i < N; ++i) acc = acc * psi;
        power.push_back(std::move(acc));
    }
    std::vector<Subspace> kers, ims;
    int kdim = 0, idim = 0;
    for (std::size_t v = 0; v < M.dims.size(); ++v) {
        kers.emplace_back(f, M.dim_at(static_cast<int>(v)), power[v].kernel_basis());
        std::vector<Vec> cols;
        for (int ccol = 0; ccol < power[v].cols(); ++ccol) cols.push_back(power[v].col(ccol));
        ims.emplace_back(f, M.dim_at(static_cast<int>(v)), std::move(cols));
        kdim += kers.back().dim();
        idim += ims.back().dim();
    }
    if (kdim == 0 || idim == 0) return std::nullopt;
    return std::make_pair(sub_representation(M, kers).rep, sub_representation(M, ims).rep);
}

std::vector<Scalar> rational_root_candidates(const FieldSpec& f) {
    std::vector<Scalar> out;
    out.push_back(Scalar(f));  // 0
    for (int n = 1; n <= 12; ++n) {
        out.push_back(Scalar::of(f, n));
        out.push_back(Scalar::of(f, -n));
    }
    for (int p = 1; p <= 6; ++p)
        for (int q = 2; q <= 4; ++q) {
            if (p % q == 0) continue;
            out.push_back(Scalar::rational(p, q));
            out.push_back(Scalar::rational(-p, q));
        }
    return out;
}

Scalar eval_poly(const std::vector<Scalar>& coeffs, const Scalar& x) {
    Scalar acc(x.field());
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

}  // namespace

SplitResult try_split(const Representation& M) {
    SplitResult res;
    if (M.is_zero()) {
        res.status = IndecompStatus::Unknown;
        return res;
    }
    if (M.field().is_prime_field()) {
        res.status = IndecompStatus::Unknown;  // trace-form radical needs char 0
        return res;
    }
    std::vector<ModuleMap> endos = hom_basis(M, M);
    int d = static_cast<int>(endos.size());
    const FieldSpec& f = M.field();

    // dim End/rad End via the trace form of the regular representation.
    Matrix coords = endo_coords_matrix(endos);
    auto coords_of = [&](const ModuleMap& h) {
        auto x = coords.solve(flatten_map(h));
        if (!x) throw Error("internal: endomorphism outside its own basis span");
        return *x;
    };
    std::vector<std::vector<Vec>> mult_table(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            mult_table[static_cast<std::size_t>(i)].push_back(
                coords_of(compose(endos[static_cast<std::size_t>(i)], endos[static_cast<std::size_t>(j)])));
    auto left_action_trace = [&](const Vec& x_coords) {
        // trace of y |-> x*y on End(M)
        Scalar tr(f);
        for (int j = 0; j < d; ++j) {
            Vec img = zero_vec(f, d);
            for (int i = 0; i < d; ++i) {
                if (x_coords[static_cast<std::size_t>(i)].is_zero()) continue;
                img = add_vec(img, scale_vec(x_coords[static_cast<std::size_t>(i)],
                                             mult_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
            }
            tr += img[static_cast<std::size_t>(j)];
        }
        return tr;
    };
    Matrix gram(f, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            gram.at(i, j) = left_action_trace(mult_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    int rad_dim = d - gram.rank();
    if (d - rad_dim == 1) {
        res.status = IndecompStatus::Yes;
        return res;
    }

    // Splitting sweep: single basis endomorphisms, then pairwise sums and
    // differences, looking for a rational eigenvalue with a nontrivial
    // Fitting decomposition.
    std::vector<ModuleMap> candidates;
    for (const auto& h : endos) candidates.push_back(h);
    for (int i = 0; i < d && static_cast<int>(candidates.size()) < 48; ++i)
        for (int j = i + 1; j < d && static_cast<int>(candidates.size()) < 48; ++j) {
            candidates.push_back(add_maps(endos[static_cast<std::size_t>(i)], endos[static_cast<std::size_t>(j)]));
            candidates.push_back(add_maps(endos[static_cast<std::size_t>(i)],
                                          scale_map(Scalar::of(f, -1), endos[static_cast<std::size_t>(j)])));
        }
    std::vector<Scalar> root_candidates = rational_root_candidates(f);
    for (const auto& phi : candidates) {
        // Collect the rational eigenvalue candidates from the per-vertex
        // characteristic polynomials.
        std::vector<Scalar> roots;
        for (std::size_t v = 0; v < M.dims.size(); ++v) {
            if (M.dim_at(static_cast<int>(v)) == 0) continue;
            auto chi = phi.vertex_maps[v].char_poly();
            for (const auto& c : root_candidates)
                if (eval_poly(chi, c).is_zero()) roots.push_back(c);
        }
        for (const auto& c : roots) {
            auto split = fitting_split(M, phi, c);
            if (split) {
                res.status = IndecompStatus::No;
                res.summands.push_back(std::move(split->first));
                res.summands.push_back(std::move(split->second));
                return res;
            }
        }
    }
    res.status = IndecompStatus::Unknown;
    return res;
}

std::pair<std::vector<Representation>, bool> split_into_indecomposables(const Representation& M) {
    std::vector<Representation> done;
    bool all_confirmed = true;
    std::vector<Representation> queue{M};
    while (!queue.empty()) {
        Representation cur = std::move(queue.back());
        queue.pop_back();
        if (cur.is_zero()) continue;
        SplitResult r = try_split(cur);
        if (r.status == IndecompStatus::No) {
            for (auto& s : r.summands) queue.push_back(std::move(s));
        } else {
            if (r.status == IndecompStatus::Unknown) all_confirmed = false;
            done.push_back(std::move(cur));
        }
    }
    return {std::move(done), all_confirmed};
}

std::optional<ModuleMap> iso(const Representation& M, const Representation& N) {
    if (M.dims != N.dims) return std::nullopt;
    if (M.is_zero()) {
        ModuleMap id;
        for (std::size_t v = 0; v < M.dims.size(); ++v) id.vertex_maps.emplace_back(M.field(), 0, 0);
        return id;
    }
    std::vector<ModuleMap> basis = hom_basis(M, N);
    if (basis.empty()) return std::nullopt;
    const FieldSpec& f = M.field();
    int d = static_cast<int>(basis.size());

    auto invertible = [&](const ModuleMap& h) {
        for (std::size_t v = 0; v < M.dims.size(); ++v) {
            if (h.vertex_maps[v].rows() != h.vertex_maps[v].cols()) return false;
            if (h.vertex_maps[v].rank() != h.vertex_maps[v].rows()) return false;
        }
        return true;
    };

    // Deterministic sweep: coefficient tuples by max-norm, then lex order.
    long max_radius = d <= 4 ? 3 : 1;
    long budget = 20000;
    for (long radius = 1; radius <= max_radius; ++radius) {
        std::vector<long> coeffs(static_cast<std::size_t>(d), -radius);
        bool more = true;
        while (more && budget > 0) {
            --budget;
            bool on_shell = false;
            for (long x : coeffs)
                if (x == radius || x == -radius) on_shell = true;
            if (on_shell) {
                ModuleMap h;
                bool started = false;
                for (int i = 0; i < d; ++i) {
                    if (coeffs[static_cast<std::size_t>(i)] == 0) continue;
                    ModuleMap scaled = scale_map(Scalar::of(f, coeffs[static_cast<std::size_t>(i)]),
                                                 basis[static_cast<std::size_t>(i)]);
                    h = started ? add_maps(h, scaled) : std::move(scaled);
                    started = true;
                }
                if (started && invertible(h)) return h;
            }
            // next tuple
            more = false;
            for (std::size_t i = coeffs.size(); i-- > 0;) {
                if (coeffs[i] < radius) {
                    ++coeffs[i];
                    for (std::size_t j = i + 1; j < coeffs.size(); ++j) coeffs[j] = -radius;
                    more = true;
                    break;
                }
            }
        }
        if (budget <= 0) break;
    }
    return std::nullopt;
}

}  // namespace toupie
