#ifndef TOUPIE_QUIVER_HPP
#define TOUPIE_QUIVER_HPP

#include "toupie/scalar.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace toupie {

// ---------------------------------------------------------------------------
// General bound quivers
// ---------------------------------------------------------------------------

struct Arrow {
    int src = 0;
    int dst = 0;
    std::string label;
};

struct RelationTerm {
    Scalar coeff;
    std::vector<int> arrows;  // non-trivial path; length >= 2 for admissibility
};

// One relation generator: a linear combination of parallel paths.
struct GeneralRelation {
    std::vector<RelationTerm> terms;
};

// An acyclic quiver with an admissible relation set. Vertex identity is the
// index into `vertex_labels`.
struct GeneralBoundQuiver {
    FieldSpec field;
    std::vector<std::string> vertex_labels;
    std::vector<Arrow> arrows;
    std::vector<GeneralRelation> relations;

    int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }

    int path_source(const std::vector<int>& path_arrows) const;
    int path_target(const std::vector<int>& path_arrows) const;

    // Reverses every arrow and every relation path. Vertices keep their ids.
    GeneralBoundQuiver opposite() const;

    // All paths from x to y as arrow-index sequences, in DFS order.
    std::vector<std::vector<int>> paths_between(int x, int y) const;

    std::optional<std::vector<int>> topological_order() const;

    std::string to_string() const;
};

// ---------------------------------------------------------------------------
// Toupie presentations
// ---------------------------------------------------------------------------

// Vertices of a toupie quiver: the source, the sink, and internal vertices
// (branch i, position j) for 1 <= j <= len_i - 1.
struct ToupieVertex {
    enum Kind { Source, Sink, Internal } kind = Source;
    int branch = 0;    // 1-based, Internal only
    int position = 0;  // 1..len-1, Internal only

    static ToupieVertex source() { return {Source, 0, 0}; }
    static ToupieVertex sink() { return {Sink, 0, 0}; }
    static ToupieVertex internal(int branch, int pos) { return {Internal, branch, pos}; }

    bool operator==(const ToupieVertex& o) const {
        return kind == o.kind && branch == o.branch && position == o.position;
    }
    std::string to_string() const;
    static std::optional<ToupieVertex> parse(const std::string& text);
};

struct ToupieQuiver {
    std::vector<int> lengths;  // arrows per branch; ascending after canonicalization

    int branch_count() const { return static_cast<int>(lengths.size()); }
    int length(int branch) const { return lengths[static_cast<std::size_t>(branch - 1)]; }
    int num_vertices() const;

    // Vertex on branch `i` at arrow-distance `pos` from the source
    // (pos = 0 is the source, pos = len is the sink).
    ToupieVertex vertex_at(int branch, int pos) const;
};

// A contiguous subpath of one branch, or a trivial path.
struct PathRef {
    bool trivial = false;
    ToupieVertex at;  // trivial paths only
    int branch = 0;   // 1-based
    int from = 0;     // 0 <= from < to <= len
    int to = 0;

    static PathRef trivial_at(ToupieVertex v) {
        PathRef p;
        p.trivial = true;
        p.at = v;
        return p;
    }
    static PathRef subpath(int branch, int from, int to) {
        PathRef p;
        p.branch = branch;
        p.from = from;
        p.to = to;
        return p;
    }
    int length() const { return trivial ? 0 : to - from; }
    bool operator==(const PathRef& o) const {
        return trivial == o.trivial &&
               (trivial ? at == o.at : (branch == o.branch && from == o.from && to == o.to));
    }
};

struct MonomialRelation {
    PathRef path;  // length >= 2
    bool operator==(const MonomialRelation& o) const { return path == o.path; }
};

struct CombinationRelation {
    std::vector<Scalar> coeffs;  // one per branch, at least one nonzero
    bool operator==(const CombinationRelation& o) const { return coeffs == o.coeffs; }
};

using ToupieRelation = std::variant<MonomialRelation, CombinationRelation>;

struct ValidationIssue {
    std::string location;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

// Direct transcription of an input file, before canonicalization.
struct ToupieInput {
    FieldSpec field;
    std::vector<int> lengths;
    std::vector<ToupieRelation> relations;
};

// All semantic checks: branch shape, monomial ranges, admissibility
// (no length-1 monomials, no combination support on a length-1 branch).
ValidationReport validate_toupie(const ToupieInput& input);

// Syntax only; throws ParseError with a line number.
ToupieInput parse_toupie_input(const std::string& text);

// A toupie quiver with an admissible relation set over a fixed field.
// Construction canonicalizes: branches are stably sorted by length, monomial
// ranges are deduplicated and sorted, and combination vectors are replaced by
// the RREF basis of their span (which generates the same ideal). Throws if
// validate_toupie rejects the input.
class ToupiePresentation {
public:
    explicit ToupiePresentation(ToupieInput input);
    ToupiePresentation(FieldSpec field, std::vector<int> lengths, std::vector<ToupieRelation> relations);

    const FieldSpec& field() const { return field_; }
    const ToupieQuiver& quiver() const { return quiver_; }
    int branch_count() const { return quiver_.branch_count(); }
    const std::vector<int>& lengths() const { return quiver_.lengths; }
    const std::vector<ToupieRelation>& relations() const { return relations_; }

    std::vector<std::pair<int, int>> monomial_ranges(int branch) const;
    std::vector<Vec> combination_vectors() const;

    std::vector<PathRef> enumerate_paths(ToupieVertex x, ToupieVertex y) const;

    std::string serialize() const;
    static ToupiePresentation parse(const std::string& text);

    bool operator==(const ToupiePresentation& o) const;

private:
    FieldSpec field_;
    ToupieQuiver quiver_;
    std::vector<ToupieRelation> relations_;
};

// Conversion to the general model. Vertex order: source, branch internals in
// branch order, sink last. Arrow order: along each branch in branch order.
GeneralBoundQuiver to_general(const ToupiePresentation& p);

int general_vertex_index(const ToupieQuiver& q, const ToupieVertex& v);
ToupieVertex toupie_vertex_of_general(const ToupieQuiver& q, int index);

// Recognizes a toupie-shaped general bound quiver and rebuilds the canonical
// presentation; nullopt when the shape or relations do not fit.
std::optional<ToupiePresentation> recognize_toupie(const GeneralBoundQuiver& g);

}  // namespace toupie

#endif
