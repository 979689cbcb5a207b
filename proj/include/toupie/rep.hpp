#ifndef TOUPIE_REP_HPP
#define TOUPIE_REP_HPP

#include "toupie/algebra.hpp"
#include "toupie/matrix.hpp"
#include "toupie/subspace.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace toupie {

// A finite-dimensional right module as a representation of the bound quiver:
// a space per vertex and a matrix per arrow (target-dim x source-dim, acting
// on column vectors along the arrow).
struct Representation {
    std::shared_ptr<const GeneralBoundQuiver> quiver;
    std::vector<int> dims;
    std::vector<Matrix> arrows;

    int dim_at(int v) const { return dims[static_cast<std::size_t>(v)]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    const FieldSpec& field() const { return quiver->field; }

    std::string dim_vector_string() const;
};

// A morphism of representations: one matrix per vertex commuting with every
// arrow map.
struct ModuleMap {
    std::vector<Matrix> vertex_maps;
};

Representation zero_representation(std::shared_ptr<const GeneralBoundQuiver> q);

// Composite of the arrow matrices along a path starting at `src`
// (identity for the trivial path).
Matrix path_action(const Representation& M, int src, const std::vector<int>& path_arrows);

// True iff every relation generator evaluates to the zero matrix.
bool check(const Representation& M);

bool is_module_map(const Representation& M, const Representation& N, const ModuleMap& f);

ModuleMap compose(const ModuleMap& second, const ModuleMap& first);

Representation simple(const BasedAlgebra& A, int x);
Representation projective(const BasedAlgebra& A, int x);
Representation injective(const BasedAlgebra& A, int x);

struct SumRep {
    Representation rep;
    std::vector<int> summand_vertices;              // for sums of P_x / I_x
    std::vector<std::vector<int>> offsets;          // [summand][vertex]
};

SumRep projective_sum(const BasedAlgebra& A, const std::vector<int>& vertices);
SumRep injective_sum(const BasedAlgebra& A, const std::vector<int>& vertices);

// Basis of Hom(M, N), deterministic (RREF of the commuting-square system).
std::vector<ModuleMap> hom_basis(const Representation& M, const Representation& N);

int hom_dim(const Representation& M, const Representation& N);

struct SubRep {
    Representation rep;
    ModuleMap inclusion;  // rep -> ambient
};

struct QuotRep {
    Representation rep;
    ModuleMap projection;  // ambient -> rep
};

// Subrepresentation spanned by the given subspaces (must be arrow-closed).
SubRep sub_representation(const Representation& M, const std::vector<Subspace>& spaces);
QuotRep quotient_representation(const Representation& M, const std::vector<Subspace>& spaces);

SubRep kernel_rep(const Representation& M, const Representation& N, const ModuleMap& f);
QuotRep cokernel_rep(const Representation& M, const Representation& N, const ModuleMap& f);

std::vector<Subspace> image_subspaces(const Representation& M, const Representation& N,
                                      const ModuleMap& f);

SubRep radical(const Representation& M);
QuotRep top(const Representation& M);
SubRep socle(const Representation& M);

struct ProjCover {
    SumRep cover;   // direct sum of P_x, one per top basis vector
    ModuleMap epi;  // cover.rep -> M
};

ProjCover projective_cover(const BasedAlgebra& A, const Representation& M);
Representation syzygy(const BasedAlgebra& A, const Representation& M);

int pd(const BasedAlgebra& A, const Representation& M);
int injective_dim(const BasedAlgebra& A, const Representation& M);

struct MinimalPresentation {
    ProjCover cover;                       // P0 -> M
    SumRep p1;                             // cover of the syzygy
    ModuleMap f;                           // p1.rep -> cover.cover.rep
    // f as an element matrix: elems[i][j] in e_{x_i} A e_{y_j} where x_i are
    // the P0 summand vertices and y_j the P1 summand vertices.
    std::vector<std::vector<Vec>> elems;
};

MinimalPresentation minimal_presentation(const BasedAlgebra& A, const Representation& M);

// k-linear dual: a module over the opposite algebra (arrows transposed).
Representation dual_module(const BasedAlgebra& A, const Representation& M);

// Auslander-Reiten translate DTr (zero for projectives) and TrD.
Representation ar_translate(const BasedAlgebra& A, const Representation& M);
Representation ar_inverse(const BasedAlgebra& A, const Representation& M);
Representation tau_power(const BasedAlgebra& A, Representation M, int n);

enum class IndecompStatus { Yes, No, Unknown };

struct SplitResult {
    IndecompStatus status = IndecompStatus::Unknown;
    std::vector<Representation> summands;  // two complementary pieces when No
};

// End(M)-based indecomposability test: local endomorphism ring -> Yes;
// otherwise a deterministic sweep of endomorphisms looks for a rational
// eigenvalue whose Fitting decomposition splits M.
SplitResult try_split(const Representation& M);

// Recursively splits M; the flag is true when every returned piece is
// confirmed indecomposable (no Unknown outcomes).
std::pair<std::vector<Representation>, bool> split_into_indecomposables(const Representation& M);

// Deterministic search for an invertible element of Hom(M, N); nullopt
// after the sweep budget (or immediately on a dimension-vector mismatch).
std::optional<ModuleMap> iso(const Representation& M, const Representation& N);

}  // namespace toupie

#endif
