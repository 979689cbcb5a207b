#include "toupie/witness.hpp"

#include <algorithm>

namespace toupie {

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Scalar q(long long n) { return Scalar::of(kQ, n); }

Matrix mat2(long long a, long long b, long long c, long long d) {
    Matrix m(kQ, 2, 2);
    m.at(0, 0) = q(a);
    m.at(0, 1) = q(b);
    m.at(1, 0) = q(c);
    m.at(1, 1) = q(d);
    return m;
}

// Arrow index of (branch, pos) in the general quiver of a canonical toupie
// presentation: arrows are laid out branch by branch.
int arrow_of(const ToupieQuiver& tq, int branch, int pos) {
    int idx = 0;
    for (int b = 1; b < branch; ++b) idx += tq.length(b);
    return idx + pos;
}

Representation blank_module(const BasedAlgebra& A, const std::vector<int>& dims) {
    Representation M;
    M.quiver = A.quiver_ptr();
    M.dims = dims;
    const GeneralBoundQuiver& g = A.quiver();
    for (int a = 0; a < g.num_arrows(); ++a) {
        const Arrow& ar = g.arrows[static_cast<std::size_t>(a)];
        M.arrows.emplace_back(A.field(), M.dim_at(ar.dst), M.dim_at(ar.src));
    }
    return M;
}

}  // namespace

std::shared_ptr<BasedAlgebra> algebra_of(const ToupiePresentation& p) {
    return std::make_shared<BasedAlgebra>(to_general(p));
}

WitnessBuild build_sec32(int r, int s, int m, const Scalar& lambda) {
    if (r < 2 || s < 1 || s >= m || m - s >= r)
        throw Error("sec32 family needs r >= 2, 1 <= s < m and m - s < r");
    int d = r - m + s;  // number of chain relations
    std::vector<int> lengths(static_cast<std::size_t>(s), 1);
    lengths.insert(lengths.end(), static_cast<std::size_t>(r), 2);
    std::vector<ToupieRelation> rels;
    int t = r + s;
    for (int i = 0; i < d; ++i) {
        Vec v = zero_vec(kQ, t);
        v[static_cast<std::size_t>(s + i)] = q(1);
        v[static_cast<std::size_t>(s + i + 1)] = q(-1);
        rels.push_back(CombinationRelation{std::move(v)});
    }
    ToupiePresentation p(kQ, std::move(lengths), std::move(rels));
    auto A = algebra_of(p);
    const ToupieQuiver& tq = p.quiver();

    std::vector<int> dims(static_cast<std::size_t>(tq.num_vertices()), 0);
    dims[0] = 2;
    dims[static_cast<std::size_t>(tq.num_vertices() - 1)] = 2;
    int mid1 = general_vertex_index(tq, ToupieVertex::internal(s + 1, 1));
    int mid2 = general_vertex_index(tq, ToupieVertex::internal(s + 2, 1));
    dims[static_cast<std::size_t>(mid1)] = 2;
    dims[static_cast<std::size_t>(mid2)] = 2;
    Representation M = blank_module(*A, dims);
    // Bypass scalars (1, 0, ..., 0); then f, h into the first two middles
    // and g, j_lambda out of them.
    M.arrows[static_cast<std::size_t>(arrow_of(tq, 1, 0))] = Matrix::identity(kQ, 2);
    M.arrows[static_cast<std::size_t>(arrow_of(tq, s + 1, 0))] = mat2(1, 0, 0, 0);
    M.arrows[static_cast<std::size_t>(arrow_of(tq, s + 2, 0))] = mat2(0, 1, 0, 0);
    M.arrows[static_cast<std::size_t>(arrow_of(tq, s + 1, 1))] = mat2(0, 1, 0, 1);
    Matrix j = mat2(0, 1, 0, 0);
    j.at(1, 1) = lambda;
    M.arrows[static_cast<std::size_t>(arrow_of(tq, s + 2, 1))] = std::move(j);
    return WitnessBuild{"sec32", std::move(p), A, std::move(M)};
}

namespace {

WitnessBuild build_one_branch_family(const std::string& family, int len,
                                     const std::vector<std::pair<int, int>>& ranges, int m,
                                     const Scalar& lambda) {
    if (len < 2) throw Error(family + " needs a branch of length >= 2");
    std::vector<int> lengths(static_cast<std::size_t>(m), 1);
    lengths.push_back(len);
    std::vector<ToupieRelation> rels;
    std::vector<std::pair<int, int>> rs = ranges;
    if (rs.empty()) rs.emplace_back(0, len);
    for (const auto& [a, b] : rs) rels.push_back(MonomialRelation{PathRef::subpath(m + 1, a, b)});
    ToupiePresentation p(kQ, std::move(lengths), std::move(rels));
    auto A = algebra_of(p);
    const ToupieQuiver& tq = p.quiver();

    std::vector<int> dims(static_cast<std::size_t>(tq.num_vertices()), 0);
    dims[0] = 1;
    dims[static_cast<std::size_t>(tq.num_vertices() - 1)] = 1;
    Representation M = blank_module(*A, dims);
    Matrix one(kQ, 1, 1), lam(kQ, 1, 1);
    one.at(0, 0) = q(1);
    lam.at(0, 0) = lambda;
    M.arrows[static_cast<std::size_t>(arrow_of(tq, 1, 0))] = std::move(one);
    if (m >= 2) M.arrows[static_cast<std::size_t>(arrow_of(tq, 2, 0))] = std::move(lam);
    return WitnessBuild{family, std::move(p), A, std::move(M)};
}

}  // namespace

WitnessBuild build_sec33_m2(int len, const std::vector<std::pair<int, int>>& ranges, int m,
                            const Scalar& lambda) {
    if (m < 2) throw Error("sec33-m2 family needs m >= 2");
    return build_one_branch_family("sec33-m2", len, ranges, m, lambda);
}

WitnessBuild build_sec33_m1_n(int len, const std::vector<std::pair<int, int>>& ranges) {
    return build_one_branch_family("sec33-m1-n", len, ranges, 1, q(1));
}

WitnessBuild build_sec33_two_branches(int d1, int d2, const Scalar& lambda) {
    if (d1 < 1 || d2 < 1) throw Error("sec33-two-branches needs positive tail lengths");
    if (d1 > d2) std::swap(d1, d2);  // canonical branch order sorts by length
    std::vector<int> lengths{1, d1 + 1, d2 + 1};
    std::vector<ToupieRelation> rels{MonomialRelation{PathRef::subpath(2, 0, 2)},
                                     MonomialRelation{PathRef::subpath(3, 0, 2)}};
    ToupiePresentation p(kQ, std::move(lengths), std::move(rels));
    auto A = algebra_of(p);
    const ToupieQuiver& tq = p.quiver();

    std::vector<int> dims(static_cast<std::size_t>(tq.num_vertices()), 0);
    dims[0] = 2;
    dims[static_cast<std::size_t>(tq.num_vertices() - 1)] = 2;
    // Tail pattern: k at the break predecessor and at the sink predecessor,
    // zero in between; a tail of one arrow carries k^2 on its single middle.
    auto tail_dims = [&](int branch, int dlen) {
        if (dlen == 1) {
            dims[static_cast<std::size_t>(general_vertex_index(tq, ToupieVertex::internal(branch, 1)))] = 2;
        } else {
            dims[static_cast<std::size_t>(general_vertex_index(tq, ToupieVertex::internal(branch, 1)))] = 1;
            dims[static_cast<std::size_t>(general_vertex_index(tq, ToupieVertex::internal(branch, dlen)))] = 1;
        }
    };
    tail_dims(2, d1);
    tail_dims(3, d2);
    Representation M = blank_module(*A, dims);
    M.arrows[static_cast<std::size_t>(arrow_of(tq, 1, 0))] = Matrix::identity(kQ, 2);

    auto fill_tail = [&](int branch, int dlen, const Vec& in_row, const Vec& out_col) {
        // in_row: 1 x 2 entry map; out_col: 2 x 1 exit map.
        if (dlen == 1) {
            Matrix in(kQ, 2, 2), out(kQ, 2, 2);
            in.at(0, 0) = in_row[0];
            in.at(0, 1) = in_row[1];
            out.at(0, 1) = out_col[0];
            out.at(1, 1) = out_col[1];
            M.arrows[static_cast<std::size_t>(arrow_of(tq, branch, 0))] = std::move(in);
            M.arrows[static_cast<std::size_t>(arrow_of(tq, branch, 1))] = std::move(out);
        } else {
            Matrix in(kQ, 1, 2), out(kQ, 2, 1);
            in.at(0, 0) = in_row[0];
            in.at(0, 1) = in_row[1];
            out.at(0, 0) = out_col[0];
            out.at(1, 0) = out_col[1];
            M.arrows[static_cast<std::size_t>(arrow_of(tq, branch, 0))] = std::move(in);
            M.arrows[static_cast<std::size_t>(arrow_of(tq, branch, dlen))] = std::move(out);
        }
    };
    fill_tail(2, d1, {q(0), q(1)}, {q(1), q(1)});
    fill_tail(3, d2, {q(1), q(0)}, {q(1), lambda});
    return WitnessBuild{"sec33-two-branches", std::move(p), A, std::move(M)};
}

WitnessBuild build_sec4_ifam(int t, Vec v, const Scalar& lambda) {
    if (t < 4) throw Error("ifam family needs t >= 4");
    if (static_cast<int>(v.size()) != t) throw Error("relation vector size must be t");
    if (v[0].is_zero() || v[1].is_zero())
        throw Error("ifam family needs nonzero coefficients on the first two branches");
    if (lambda.is_zero()) throw Error("ifam lambda must be nonzero");
    // Normalize so the first coefficient is -1.
    Scalar scale = q(-1) / v[0];
    for (auto& c : v) c *= scale;
    Scalar lambda2 = v[1];

    std::vector<int> lengths(static_cast<std::size_t>(t), 2);
    std::vector<ToupieRelation> rels{CombinationRelation{v}};
    ToupiePresentation p(kQ, std::move(lengths), std::move(rels));
    auto A = algebra_of(p);
    const ToupieQuiver& tq = p.quiver();

    std::vector<int> dims(static_cast<std::size_t>(tq.num_vertices()), 0);
    dims[0] = 2;
    dims[static_cast<std::size_t>(tq.num_vertices() - 1)] = 2;
    for (int b = 1; b <= 4; ++b)
        dims[static_cast<std::size_t>(general_vertex_index(tq, ToupieVertex::internal(b, 1)))] = 2;
    Representation M = blank_module(*A, dims);
    M.arrows[static_cast<std::size_t>(arrow_of(tq, 1, 0))] = Matrix::identity(kQ, 2);
    M.arrows[static_cast<std::size_t>(arrow_of(tq, 2, 0))] = Matrix::identity(kQ, 2) * lambda2.inverse();
    Matrix a3 = mat2(1, 1, 0, 0);
    Matrix a4 = mat2(1, 0, 0, 0);
    a4.at(0, 1) = lambda;
    M.arrows[static_cast<std::size_t>(arrow_of(tq, 3, 0))] = std::move(a3);
    M.arrows[static_cast<std::size_t>(arrow_of(tq, 4, 0))] = std::move(a4);
    M.arrows[static_cast<std::size_t>(arrow_of(tq, 1, 1))] = Matrix::identity(kQ, 2);
    M.arrows[static_cast<std::size_t>(arrow_of(tq, 2, 1))] = Matrix::identity(kQ, 2);
    M.arrows[static_cast<std::size_t>(arrow_of(tq, 3, 1))] = mat2(0, 1, 0, 0);
    M.arrows[static_cast<std::size_t>(arrow_of(tq, 4, 1))] = mat2(0, 0, 0, 1);
    return WitnessBuild{"ifam", std::move(p), A, std::move(M)};
}

Representation build_d_xy(const ToupiePresentation& p, const BasedAlgebra& A, int pos_x, int pos_y) {
    IdealClosure c = close_ideal(p);
    if (c.m != 1 || c.branches_in_I.size() != 1)
        throw Error("D_xy needs m = 1 and a unique branch in the ideal");
    int b = c.branches_in_I[0];
    int len = p.quiver().length(b);
    int t = p.branch_count();
    if (pos_x == pos_y) throw Error("D_xy needs distinct endpoints");
    if (pos_x < 0 || pos_x > len || pos_y < 0 || pos_y > len)
        throw Error("D_xy endpoints must lie on the branch in the ideal");
    const FieldSpec& f = p.field();

    // The through-branch scalars: the unique (up to scale) functional
    // vanishing on W. Its coordinate at b vanishes and all others do not.
    Matrix wrows = Matrix::from_rows(f, c.W.basis(), t);
    auto gamma_basis = wrows.kernel_basis();
    if (gamma_basis.size() != 1) throw Error("internal: W has corank one exactly when m = 1");
    Vec gamma = gamma_basis[0];

    const ToupieQuiver& tq = p.quiver();
    std::vector<int> dims(static_cast<std::size_t>(tq.num_vertices()), 1);
    bool ascending = pos_x < pos_y;
    int lo = std::min(pos_x, pos_y), hi = std::max(pos_x, pos_y);
    if (!ascending && (lo < 1 || hi > len - 1))
        throw Error("the doubled orientation of D_xy needs interior endpoints");
    for (int pos = lo; pos <= hi; ++pos) {
        int v = general_vertex_index(tq, tq.vertex_at(b, pos));
        dims[static_cast<std::size_t>(v)] = ascending ? 0 : 2;
    }

    Representation M;
    M.quiver = A.quiver_ptr();
    M.dims = dims;
    const GeneralBoundQuiver& g = A.quiver();
    for (int a = 0; a < g.num_arrows(); ++a) {
        const Arrow& ar = g.arrows[static_cast<std::size_t>(a)];
        M.arrows.emplace_back(f, M.dim_at(ar.dst), M.dim_at(ar.src));
    }
    // Identity wherever both ends are one-dimensional, except that each
    // branch's last arrow carries the functional coordinate so every
    // through-branch composite is proportional to gamma.
    for (int br = 1; br <= t; ++br) {
        for (int pos = 0; pos < tq.length(br); ++pos) {
            int a = 0;
            {
                int idx = 0;
                for (int bb = 1; bb < br; ++bb) idx += tq.length(bb);
                a = idx + pos;
            }
            int u = general_vertex_index(tq, tq.vertex_at(br, pos));
            int v = general_vertex_index(tq, tq.vertex_at(br, pos + 1));
            int du = M.dim_at(u), dv = M.dim_at(v);
            if (du == 0 || dv == 0) continue;
            Matrix m(f, dv, du);
            if (br == b && !ascending) {
                if (pos + 1 == lo) {  // entry: inclusion in the first coordinate
                    m.at(0, 0) = Scalar::of(f, 1);
                } else if (pos == hi) {  // exit: projection to the second coordinate
                    m.at(0, 1) = Scalar::of(f, 1);
                } else if (du == 2 && dv == 2) {
                    m = Matrix::identity(f, 2);
                } else {
                    m.at(0, 0) = Scalar::of(f, 1);
                }
            } else if (br != b && pos + 1 == tq.length(br)) {
                m.at(0, 0) = gamma[static_cast<std::size_t>(br - 1)];
            } else if (br == b && ascending) {
                m.at(0, 0) = Scalar::of(f, 1);  // outside the zeroed segment
            } else {
                m.at(0, 0) = Scalar::of(f, 1);
            }
            M.arrows[static_cast<std::size_t>(a)] = std::move(m);
        }
    }
    return M;
}

Representation rad_p0(const BasedAlgebra& A) { return radical(projective(A, 0)).rep; }

}  // namespace toupie
