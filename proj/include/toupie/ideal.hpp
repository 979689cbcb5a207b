#ifndef TOUPIE_IDEAL_HPP
#define TOUPIE_IDEAL_HPP

#include "toupie/quiver.hpp"
#include "toupie/subspace.hpp"

#include <set>
#include <vector>

namespace toupie {

// Closure data of the admissible ideal of a toupie presentation:
// which branch subpaths lie in I, and the subspace W = e_0 I e_inf of k^t
// in full-branch coordinates.
struct IdealClosure {
    int t = 0;
    std::vector<int> lengths;
    // Generating monomial ranges per branch (deduplicated, sorted); a proper
    // subpath (a,b) of branch i lies in I iff it contains one of these.
    std::vector<std::vector<std::pair<int, int>>> monomial_ranges;
    Subspace W;                     // ambient dim t
    int m = 0;                      // t - dim W
    std::vector<int> branches_in_I; // 1-based, ascending

    bool branch_in_ideal(int branch) const;
    bool subpath_in_ideal(int branch, int from, int to) const;

    // Inclusion-minimal zero subpaths of one branch (the full branch counts
    // when it lies in I and no proper subpath does).
    std::vector<std::pair<int, int>> minimal_zero_ranges(int branch) const;
};

IdealClosure close_ideal(const ToupiePresentation& p);

// Number of inclusion-minimal zero subpaths on a branch.
int relations_per_branch(const IdealClosure& c, int branch);

struct MinimalSupport {
    std::vector<int> branches;  // 1-based, ascending, size >= 2
    Vec witness;                // v in W with supp(v) = branches, all proper
                                // sub-sums outside W
};

struct MinimalRelationCatalog {
    int t = 0;
    std::vector<MinimalSupport> supports;           // by ascending bitmask
    std::vector<std::pair<int, int>> linkage_edges; // 1-based pairs, i < j
    std::vector<std::set<int>> classes;             // [w_i] per branch, 1-based

    bool linked(int i, int j) const;
};

// Enumerates all supports of minimal relations with one witness each.
// Requires the rationals (the witness sweep needs an infinite field) and
// t <= 16 (the support scan is exponential in t).
MinimalRelationCatalog minimal_relations(const IdealClosure& c);

// Operational simple-connectedness: every pair of distinct branches occurs
// together in some minimal relation. Requires t >= 2.
bool is_simply_connected(const MinimalRelationCatalog& cat);

struct CanonicalParameters {
    std::vector<Scalar> lambdas;  // lambda_3..lambda_t (empty when t = 2)
};

// Detects whether the algebra admits a canonical presentation:
// no monomial generators, dim W = t - 2, and every nonzero vector of W has
// support of size at least 3. The W of a canonical presentation is the
// kernel of a 2 x t column configuration; all kernel supports >= 3 exactly
// when the columns are pairwise independent, i.e. t distinct points of the
// projective line, which is the canonical shape.
std::optional<CanonicalParameters> is_canonical(const IdealClosure& c);

}  // namespace toupie

#endif
