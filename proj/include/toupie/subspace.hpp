#ifndef TOUPIE_SUBSPACE_HPP
#define TOUPIE_SUBSPACE_HPP

#include "toupie/matrix.hpp"

#include <vector>

namespace toupie {

// A subspace of k^n held as a row-reduced (RREF) basis, so equal subspaces
// compare equal componentwise.
class Subspace {
public:
    Subspace() = default;
    Subspace(const FieldSpec& f, int ambient_dim);
    Subspace(const FieldSpec& f, int ambient_dim, std::vector<Vec> spanning);

    static Subspace full(const FieldSpec& f, int n);

    const FieldSpec& field() const { return field_; }
    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    // Residual of v after reduction by the basis; zero iff contains(v).
    Vec reduce(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    // {v in S : v_i = 0 for all i not in coords}.
    Subspace restrict_to_coords(const std::vector<int>& coords) const;

    // Greedy list of standard coordinates e_j independent modulo this
    // subspace; the returned units complete the basis to all of k^n.
    std::vector<int> complement_coords() const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    FieldSpec field_;
    int ambient_ = 0;
    std::vector<Vec> basis_;   // RREF rows
    std::vector<int> pivots_;  // pivot column of each basis row
};

}  // namespace toupie

#endif
