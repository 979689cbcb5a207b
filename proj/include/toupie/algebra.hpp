#ifndef TOUPIE_ALGEBRA_HPP
#define TOUPIE_ALGEBRA_HPP

#include "toupie/quiver.hpp"
#include "toupie/subspace.hpp"

#include <map>
#include <memory>
#include <vector>

namespace toupie {

// The quotient algebra A = kQ/I as a based algebra, graded by vertex pairs.
// For each ordered pair (u,v) the basis of e_u A e_v is a set of residue
// classes of paths picked greedily (first paths in DFS order whose classes
// are independent modulo the ideal). Elements of e_u A e_v are coordinate
// vectors over those representatives.
class BasedAlgebra {
public:
    explicit BasedAlgebra(GeneralBoundQuiver quiver);

    const GeneralBoundQuiver& quiver() const { return *quiver_; }
    std::shared_ptr<const GeneralBoundQuiver> quiver_ptr() const { return quiver_; }
    const FieldSpec& field() const { return quiver_->field; }
    int num_vertices() const { return quiver_->num_vertices(); }

    int dim(int u, int v) const;
    int total_dim() const;

    // The representative paths (arrow-index sequences) spanning e_u A e_v.
    std::vector<std::vector<int>> basis_paths(int u, int v) const;

    // All paths u -> v (DFS order; the trivial path when u == v).
    const std::vector<std::vector<int>>& all_paths(int u, int v) const;

    // The ideal component I(u,v) in path coordinates.
    const Subspace& ideal_component(int u, int v) const;

    // Expresses a path-coordinate vector in the representative basis.
    Vec reduce(int u, int v, const Vec& path_vector) const;

    // Class of a single path given by its arrow sequence.
    Vec class_of_path(int u, int v, const std::vector<int>& arrows) const;

    // Product e_u A e_v x e_v A e_w -> e_u A e_w in representative coords.
    Vec mult(int u, int v, int w, const Vec& a, const Vec& b) const;

    // Class of the length-1 path [arrow] in its pair.
    const Vec& arrow_class(int arrow) const;

    // Coordinate-compatible opposite algebra: pair (u,v) of the opposite is
    // pair (v,u) here with every representative path reversed, so element
    // coordinates carry over verbatim and opposite(opposite(A)) == A.
    const BasedAlgebra& opposite() const;

    // Bound-quiver presentation of e A e for the given vertex subset:
    // arrows are a basis of rad/rad^2, relations generate the kernel of the
    // induced surjection from the new path algebra, pair by pair.
    GeneralBoundQuiver truncate(const std::vector<int>& vertices) const;

private:
    struct PairData {
        std::vector<std::vector<int>> paths;       // DFS order
        std::map<std::vector<int>, int> path_index;
        Subspace ideal;                            // in path coordinates
        std::vector<int> rep_indices;              // greedy complement
        Matrix reduce_matrix;                      // reps x paths
    };

    std::shared_ptr<const GeneralBoundQuiver> quiver_;
    std::vector<PairData> pairs_;  // row-major (u * n + v)
    std::vector<Vec> arrow_classes_;
    mutable std::shared_ptr<BasedAlgebra> opposite_;

    BasedAlgebra() = default;
    const PairData& pair(int u, int v) const;
    void build_pair_tables();
    static BasedAlgebra reversed_of(const BasedAlgebra& a);
};

}  // namespace toupie

#endif
