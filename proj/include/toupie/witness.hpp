#ifndef TOUPIE_WITNESS_HPP
#define TOUPIE_WITNESS_HPP

#include "toupie/algebra.hpp"
#include "toupie/ideal.hpp"
#include "toupie/rep.hpp"

#include <memory>
#include <string>

namespace toupie {

// A witness module family instance: a small standalone presentation shaped
// like the relevant corner algebra, its based algebra, and the module.
struct WitnessBuild {
    std::string family;
    ToupiePresentation presentation;
    std::shared_ptr<BasedAlgebra> algebra;
    Representation module;
};

std::shared_ptr<BasedAlgebra> algebra_of(const ToupiePresentation& p);

// r branches of length 2 and s bypass arrows; the ideal is spanned by the
// chain differences of the first r - m + s long branches, so dim e_0 A e_inf
// comes out to m. The module has k^2 at the source, the sink and the first
// two middles, with the displayed maps and bypass scalars (1, 0, ..., 0).
// Requires 1 <= s < m and m - s < r.
WitnessBuild build_sec32(int r, int s, int m, const Scalar& lambda);

// One branch of length `len` lying in the ideal (zero ranges as given) plus
// m >= 2 bypass arrows; k at source and sink, bypass scalars (1, lambda, 0...).
WitnessBuild build_sec33_m2(int len, const std::vector<std::pair<int, int>>& ranges, int m,
                            const Scalar& lambda);

// The m = 1 variant: a single bypass arrow with scalar 1.
WitnessBuild build_sec33_m1_n(int len, const std::vector<std::pair<int, int>>& ranges);

// Two relation-truncated branches (d1, d2 arrows below the break) and one
// bypass arrow; k^2 at source and sink glued through the tails. d_i = 1
// collapses the break and the last middle into one k^2 slot.
WitnessBuild build_sec33_two_branches(int d1, int d2, const Scalar& lambda);

// t >= 4 branches of length 2 bound by the single relation `v` (normalized
// so v_1 = -1; v_2 must be nonzero); the displayed two-dimensional module
// family indexed by lambda.
WitnessBuild build_sec4_ifam(int t, Vec v, const Scalar& lambda);

// The D_{xy} modules of the unique-branch laura case, over the caller's
// presentation. Positions are arrow-distances from the source along the
// unique branch in the ideal; x != y. Ascending (x before y) zeroes out the
// segment; descending requires interior endpoints and carries k^2 on it.
Representation build_d_xy(const ToupiePresentation& p, const BasedAlgebra& A, int pos_x, int pos_y);

// rad P_0, the workhorse of the tau computations.
Representation rad_p0(const BasedAlgebra& A);

}  // namespace toupie

#endif
