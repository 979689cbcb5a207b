#include "toupie/quiver.hpp"

#include "toupie/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace toupie {

// ---------------------------------------------------------------------------
// GeneralBoundQuiver
// ---------------------------------------------------------------------------

int GeneralBoundQuiver::path_source(const std::vector<int>& path_arrows) const {
    if (path_arrows.empty()) throw Error("trivial path has no arrow source");
    return arrows[static_cast<std::size_t>(path_arrows.front())].src;
}

int GeneralBoundQuiver::path_target(const std::vector<int>& path_arrows) const {
    if (path_arrows.empty()) throw Error("trivial path has no arrow target");
    return arrows[static_cast<std::size_t>(path_arrows.back())].dst;
}

GeneralBoundQuiver GeneralBoundQuiver::opposite() const {
    GeneralBoundQuiver op;
    op.field = field;
    op.vertex_labels = vertex_labels;
    op.arrows.reserve(arrows.size());
    for (const auto& a : arrows) op.arrows.push_back({a.dst, a.src, a.label});
    op.relations.reserve(relations.size());
    for (const auto& rel : relations) {
        GeneralRelation r;
        for (const auto& term : rel.terms) {
            RelationTerm t;
            t.coeff = term.coeff;
            t.arrows.assign(term.arrows.rbegin(), term.arrows.rend());
            r.terms.push_back(std::move(t));
        }
        op.relations.push_back(std::move(r));
    }
    return op;
}

std::vector<std::vector<int>> GeneralBoundQuiver::paths_between(int x, int y) const {
    std::vector<std::vector<int>> result;
    if (x == y) return result;  // acyclic: no non-trivial path x -> x
    std::vector<std::vector<int>> out(vertex_labels.size());
    for (int a = 0; a < num_arrows(); ++a)
        out[static_cast<std::size_t>(arrows[static_cast<std::size_t>(a)].src)].push_back(a);
    std::vector<int> stack;
    // Depth-first over arrow indices keeps the enumeration deterministic.
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == y && !stack.empty()) {
            result.push_back(stack);
            return;
        }
        for (int a : out[static_cast<std::size_t>(v)]) {
            stack.push_back(a);
            self(self, arrows[static_cast<std::size_t>(a)].dst);
            stack.pop_back();
        }
    };
    dfs(dfs, x);
    return result;
}

std::optional<std::vector<int>> GeneralBoundQuiver::topological_order() const {
    int n = num_vertices();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (const auto& a : arrows) ++indeg[static_cast<std::size_t>(a.dst)];
    std::vector<int> order;
    std::vector<int> ready;
    for (int v = n - 1; v >= 0; --v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (const auto& a : arrows)
            if (a.src == v && --indeg[static_cast<std::size_t>(a.dst)] == 0) ready.push_back(a.dst);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

std::string GeneralBoundQuiver::to_string() const {
    std::ostringstream os;
    os << "general-quiver field " << field.to_string() << "\n";
    os << "vertices";
    for (const auto& l : vertex_labels) os << " " << l;
    os << "\n";
    for (int a = 0; a < num_arrows(); ++a) {
        const Arrow& ar = arrows[static_cast<std::size_t>(a)];
        os << "arrow " << a << ": " << vertex_labels[static_cast<std::size_t>(ar.src)] << " -> "
           << vertex_labels[static_cast<std::size_t>(ar.dst)] << "\n";
    }
    for (const auto& rel : relations) {
        os << "relation:";
        bool first = true;
        for (const auto& t : rel.terms) {
            os << (first ? " " : " + ") << t.coeff.to_string() << " * [";
            for (std::size_t i = 0; i < t.arrows.size(); ++i) os << (i ? " " : "") << t.arrows[i];
            os << "]";
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Toupie vertices and quiver shape
// ---------------------------------------------------------------------------

std::string ToupieVertex::to_string() const {
    switch (kind) {
        case Source: return "0";
        case Sink: return "inf";
        case Internal: return std::to_string(branch) + "." + std::to_string(position);
    }
    return "?";
}

std::optional<ToupieVertex> ToupieVertex::parse(const std::string& text) {
    if (text == "0") return source();
    if (text == "inf") return sink();
    std::size_t dot = text.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == text.size()) return std::nullopt;
    try {
        int b = std::stoi(text.substr(0, dot));
        int p = std::stoi(text.substr(dot + 1));
        if (b < 1 || p < 1) return std::nullopt;
        return internal(b, p);
    } catch (...) {
        return std::nullopt;
    }
}

int ToupieQuiver::num_vertices() const {
    int n = 2;
    for (int len : lengths) n += len - 1;
    return n;
}

ToupieVertex ToupieQuiver::vertex_at(int branch, int pos) const {
    int len = length(branch);
    if (pos < 0 || pos > len) throw Error("branch position out of range");
    if (pos == 0) return ToupieVertex::source();
    if (pos == len) return ToupieVertex::sink();
    return ToupieVertex::internal(branch, pos);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& issue : issues) os << issue.location << ": " << issue.message << "\n";
    return os.str();
}

ValidationReport validate_toupie(const ToupieInput& input) {
    ValidationReport report;
    auto flag = [&](const std::string& loc, const std::string& msg) {
        report.issues.push_back({loc, msg});
    };
    int t = static_cast<int>(input.lengths.size());
    if (t < 1) flag("quiver", "at least one branch is required");
    for (int i = 0; i < t; ++i)
        if (input.lengths[static_cast<std::size_t>(i)] < 1)
            flag("branch " + std::to_string(i + 1), "length must be at least 1");
    int idx = 0;
    for (const auto& rel : input.relations) {
        ++idx;
        std::string loc = "relation " + std::to_string(idx);
        if (const auto* mono = std::get_if<MonomialRelation>(&rel)) {
            const PathRef& p = mono->path;
            if (p.trivial) {
                flag(loc, "monomial relation cannot be a trivial path");
                continue;
            }
            if (p.branch < 1 || p.branch > t) {
                flag(loc, "branch index out of range");
                continue;
            }
            int len = input.lengths[static_cast<std::size_t>(p.branch - 1)];
            if (p.from < 0 || p.to > len || p.from >= p.to) {
                flag(loc, "subpath range out of bounds");
                continue;
            }
            if (p.length() < 2)
                flag(loc, "monomial of length " + std::to_string(p.length()) +
                              " violates admissibility (length >= 2 required)");
        } else {
            const auto& comb = std::get<CombinationRelation>(rel);
            if (static_cast<int>(comb.coeffs.size()) != t) {
                flag(loc, "combination must have one coefficient per branch");
                continue;
            }
            bool nonzero = false;
            for (int i = 0; i < t; ++i) {
                const Scalar& c = comb.coeffs[static_cast<std::size_t>(i)];
                if (c.field() != input.field) {
                    flag(loc, "coefficient field mismatch");
                    break;
                }
                if (!c.is_zero()) {
                    nonzero = true;
                    if (input.lengths[static_cast<std::size_t>(i)] < 2)
                        flag(loc, "combination touches a length-1 branch, violates I \xE2\x8A\x86 R\xC2\xB2");
                }
            }
            if (!nonzero) flag(loc, "combination needs at least one nonzero coefficient");
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// ToupiePresentation
// ---------------------------------------------------------------------------

ToupiePresentation::ToupiePresentation(FieldSpec field, std::vector<int> lengths,
                                       std::vector<ToupieRelation> relations)
    : ToupiePresentation(ToupieInput{field, std::move(lengths), std::move(relations)}) {}

ToupiePresentation::ToupiePresentation(ToupieInput input) : field_(input.field) {
    ValidationReport report = validate_toupie(input);
    if (!report.ok()) throw Error("invalid toupie presentation: " + report.issues.front().message);

    int t = static_cast<int>(input.lengths.size());
    // Canonical branch order: stable sort by length, ties keep input order.
    std::vector<int> old_of_new(static_cast<std::size_t>(t));
    std::iota(old_of_new.begin(), old_of_new.end(), 0);
    std::stable_sort(old_of_new.begin(), old_of_new.end(), [&](int a, int b) {
        return input.lengths[static_cast<std::size_t>(a)] < input.lengths[static_cast<std::size_t>(b)];
    });
    std::vector<int> new_of_old(static_cast<std::size_t>(t));
    for (int n = 0; n < t; ++n) new_of_old[static_cast<std::size_t>(old_of_new[static_cast<std::size_t>(n)])] = n;

    quiver_.lengths.resize(static_cast<std::size_t>(t));
    for (int n = 0; n < t; ++n)
        quiver_.lengths[static_cast<std::size_t>(n)] = input.lengths[static_cast<std::size_t>(old_of_new[static_cast<std::size_t>(n)])];

    std::vector<PathRef> monos;
    std::vector<Vec> combos;
    for (const auto& rel : input.relations) {
        if (const auto* mono = std::get_if<MonomialRelation>(&rel)) {
            PathRef p = mono->path;
            p.branch = new_of_old[static_cast<std::size_t>(p.branch - 1)] + 1;
            monos.push_back(p);
        } else {
            const auto& comb = std::get<CombinationRelation>(rel);
            Vec v = zero_vec(field_, t);
            for (int old = 0; old < t; ++old)
                v[static_cast<std::size_t>(new_of_old[static_cast<std::size_t>(old)])] =
                    comb.coeffs[static_cast<std::size_t>(old)];
            combos.push_back(std::move(v));
        }
    }
    std::sort(monos.begin(), monos.end(), [](const PathRef& a, const PathRef& b) {
        return std::tie(a.branch, a.from, a.to) < std::tie(b.branch, b.from, b.to);
    });
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    rref_rows(field_, combos);

    for (const auto& p : monos) relations_.push_back(MonomialRelation{p});
    for (auto& v : combos) relations_.push_back(CombinationRelation{std::move(v)});
}

std::vector<std::pair<int, int>> ToupiePresentation::monomial_ranges(int branch) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& rel : relations_)
        if (const auto* mono = std::get_if<MonomialRelation>(&rel))
            if (mono->path.branch == branch) out.emplace_back(mono->path.from, mono->path.to);
    return out;
}

std::vector<Vec> ToupiePresentation::combination_vectors() const {
    std::vector<Vec> out;
    for (const auto& rel : relations_)
        if (const auto* comb = std::get_if<CombinationRelation>(&rel)) out.push_back(comb->coeffs);
    return out;
}

std::vector<PathRef> ToupiePresentation::enumerate_paths(ToupieVertex x, ToupieVertex y) const {
    std::vector<PathRef> out;
    int t = branch_count();
    auto check_vertex = [&](const ToupieVertex& v) {
        if (v.kind == ToupieVertex::Internal &&
            (v.branch < 1 || v.branch > t || v.position < 1 || v.position >= quiver_.length(v.branch)))
            throw Error("unknown vertex " + v.to_string());
    };
    check_vertex(x);
    check_vertex(y);
    if (x == y) {
        out.push_back(PathRef::trivial_at(x));
        return out;
    }
    if (x.kind == ToupieVertex::Source && y.kind == ToupieVertex::Sink) {
        for (int i = 1; i <= t; ++i) out.push_back(PathRef::subpath(i, 0, quiver_.length(i)));
        return out;
    }
    if (x.kind == ToupieVertex::Source && y.kind == ToupieVertex::Internal) {
        out.push_back(PathRef::subpath(y.branch, 0, y.position));
    } else if (x.kind == ToupieVertex::Internal && y.kind == ToupieVertex::Sink) {
        out.push_back(PathRef::subpath(x.branch, x.position, quiver_.length(x.branch)));
    } else if (x.kind == ToupieVertex::Internal && y.kind == ToupieVertex::Internal &&
               x.branch == y.branch && x.position < y.position) {
        out.push_back(PathRef::subpath(x.branch, x.position, y.position));
    }
    return out;
}

std::string ToupiePresentation::serialize() const {
    std::ostringstream os;
    os << "field " << field_.to_string() << "\n";
    os << "branches " << branch_count() << "\n";
    os << "lengths";
    for (int len : quiver_.lengths) os << " " << len;
    os << "\n";
    for (const auto& rel : relations_) {
        if (const auto* mono = std::get_if<MonomialRelation>(&rel)) {
            os << "relation mono " << mono->path.branch << " " << mono->path.from << " " << mono->path.to
               << "\n";
        } else {
            os << "relation comb";
            for (const auto& c : std::get<CombinationRelation>(rel).coeffs) os << " " << c.to_string();
            os << "\n";
        }
    }
    return os.str();
}

ToupieInput parse_toupie_input(const std::string& text) {
    ToupieInput input;
    bool have_field = false, have_branches = false, have_lengths = false;
    int declared_branches = 0;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<int, std::vector<std::string>>> relation_lines;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        const std::string& kw = tokens[0];
        if (kw == "field") {
            if (have_field) throw ParseError(lineno, "duplicate field line");
            if (tokens.size() == 2 && tokens[1] == "rational") {
                input.field = FieldSpec::rationals();
            } else if (tokens.size() == 3 && tokens[1] == "prime") {
                try {
                    input.field = FieldSpec::prime(std::stoll(tokens[2]));
                } catch (const std::exception& e) {
                    throw ParseError(lineno, e.what());
                }
            } else {
                throw ParseError(lineno, "expected 'field rational' or 'field prime P'");
            }
            have_field = true;
        } else if (kw == "branches") {
            if (have_branches) throw ParseError(lineno, "duplicate branches line");
            if (tokens.size() != 2) throw ParseError(lineno, "expected 'branches T'");
            try {
                declared_branches = std::stoi(tokens[1]);
            } catch (...) {
                throw ParseError(lineno, "bad branch count '" + tokens[1] + "'");
            }
            if (declared_branches < 1) throw ParseError(lineno, "branch count must be positive");
            have_branches = true;
        } else if (kw == "lengths") {
            if (have_lengths) throw ParseError(lineno, "duplicate lengths line");
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                try {
                    input.lengths.push_back(std::stoi(tokens[i]));
                } catch (...) {
                    throw ParseError(lineno, "bad length '" + tokens[i] + "'");
                }
            }
            have_lengths = true;
        } else if (kw == "relation") {
            relation_lines.emplace_back(lineno, tokens);
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_field) throw ParseError(lineno, "missing field line");
    if (!have_branches) throw ParseError(lineno, "missing branches line");
    if (!have_lengths) throw ParseError(lineno, "missing lengths line");
    if (static_cast<int>(input.lengths.size()) != declared_branches)
        throw ParseError(lineno, "lengths count does not match declared branch count");

    for (const auto& [ln, tokens] : relation_lines) {
        if (tokens.size() < 2) throw ParseError(ln, "expected 'relation mono ...' or 'relation comb ...'");
        if (tokens[1] == "mono") {
            if (tokens.size() != 5) throw ParseError(ln, "expected 'relation mono I A B'");
            try {
                int b = std::stoi(tokens[2]);
                int from = std::stoi(tokens[3]);
                int to = std::stoi(tokens[4]);
                input.relations.push_back(MonomialRelation{PathRef::subpath(b, from, to)});
            } catch (const std::exception&) {
                throw ParseError(ln, "bad monomial relation");
            }
        } else if (tokens[1] == "comb") {
            CombinationRelation comb;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                try {
                    comb.coeffs.push_back(Scalar::parse(input.field, tokens[i]));
                } catch (const std::exception& e) {
                    throw ParseError(ln, e.what());
                }
            }
            input.relations.push_back(std::move(comb));
        } else {
            throw ParseError(ln, "unknown relation kind '" + tokens[1] + "'");
        }
    }
    return input;
}

ToupiePresentation ToupiePresentation::parse(const std::string& text) {
    return ToupiePresentation(parse_toupie_input(text));
}

bool ToupiePresentation::operator==(const ToupiePresentation& o) const {
    return field_ == o.field_ && quiver_.lengths == o.quiver_.lengths && relations_ == o.relations_;
}

// ---------------------------------------------------------------------------
// Conversion between the toupie and general models
// ---------------------------------------------------------------------------

int general_vertex_index(const ToupieQuiver& q, const ToupieVertex& v) {
    if (v.kind == ToupieVertex::Source) return 0;
    if (v.kind == ToupieVertex::Sink) return q.num_vertices() - 1;
    if (v.branch < 1 || v.branch > q.branch_count() || v.position < 1 ||
        v.position > q.length(v.branch) - 1)
        throw Error("unknown vertex " + v.to_string());
    int idx = 1;
    for (int b = 1; b < v.branch; ++b) idx += q.length(b) - 1;
    return idx + v.position - 1;
}

ToupieVertex toupie_vertex_of_general(const ToupieQuiver& q, int index) {
    if (index == 0) return ToupieVertex::source();
    if (index == q.num_vertices() - 1) return ToupieVertex::sink();
    int idx = index - 1;
    for (int b = 1; b <= q.branch_count(); ++b) {
        int internals = q.length(b) - 1;
        if (idx < internals) return ToupieVertex::internal(b, idx + 1);
        idx -= internals;
    }
    throw Error("general vertex index out of range");
}

namespace {

// Arrow index of the arrow leaving position pos on branch b (0-based pos).
int general_arrow_index(const ToupieQuiver& q, int branch, int pos) {
    int idx = 0;
    for (int b = 1; b < branch; ++b) idx += q.length(b);
    return idx + pos;
}

std::vector<int> general_path_arrows(const ToupieQuiver& q, const PathRef& p) {
    std::vector<int> arrows;
    for (int pos = p.from; pos < p.to; ++pos) arrows.push_back(general_arrow_index(q, p.branch, pos));
    return arrows;
}

}  // namespace

GeneralBoundQuiver to_general(const ToupiePresentation& p) {
    const ToupieQuiver& q = p.quiver();
    GeneralBoundQuiver g;
    g.field = p.field();
    g.vertex_labels.resize(static_cast<std::size_t>(q.num_vertices()));
    for (int i = 0; i < q.num_vertices(); ++i)
        g.vertex_labels[static_cast<std::size_t>(i)] = toupie_vertex_of_general(q, i).to_string();
    for (int b = 1; b <= q.branch_count(); ++b) {
        for (int pos = 0; pos < q.length(b); ++pos) {
            Arrow a;
            a.src = general_vertex_index(q, q.vertex_at(b, pos));
            a.dst = general_vertex_index(q, q.vertex_at(b, pos + 1));
            a.label = "a" + std::to_string(b) + "." + std::to_string(pos + 1);
            g.arrows.push_back(std::move(a));
        }
    }
    for (const auto& rel : p.relations()) {
        GeneralRelation r;
        if (const auto* mono = std::get_if<MonomialRelation>(&rel)) {
            r.terms.push_back({Scalar::of(p.field(), 1), general_path_arrows(q, mono->path)});
        } else {
            const auto& comb = std::get<CombinationRelation>(rel);
            for (int b = 1; b <= q.branch_count(); ++b) {
                const Scalar& c = comb.coeffs[static_cast<std::size_t>(b - 1)];
                if (c.is_zero()) continue;
                r.terms.push_back({c, general_path_arrows(q, PathRef::subpath(b, 0, q.length(b)))});
            }
        }
        g.relations.push_back(std::move(r));
    }
    return g;
}

std::optional<ToupiePresentation> recognize_toupie(const GeneralBoundQuiver& g) {
    int n = g.num_vertices();
    if (n < 2) return std::nullopt;
    if (!g.topological_order()) return std::nullopt;
    std::vector<int> indeg(static_cast<std::size_t>(n), 0), outdeg(static_cast<std::size_t>(n), 0);
    for (const auto& a : g.arrows) {
        ++outdeg[static_cast<std::size_t>(a.src)];
        ++indeg[static_cast<std::size_t>(a.dst)];
    }
    int source = -1, sink = -1;
    for (int v = 0; v < n; ++v) {
        if (indeg[static_cast<std::size_t>(v)] == 0) {
            if (source >= 0) return std::nullopt;
            source = v;
        }
        if (outdeg[static_cast<std::size_t>(v)] == 0) {
            if (sink >= 0) return std::nullopt;
            sink = v;
        }
    }
    if (source < 0 || sink < 0 || source == sink) return std::nullopt;
    for (int v = 0; v < n; ++v) {
        if (v == source || v == sink) continue;
        if (indeg[static_cast<std::size_t>(v)] != 1 || outdeg[static_cast<std::size_t>(v)] != 1)
            return std::nullopt;
    }

    // Walk the branches in arrow order from the source.
    std::vector<std::vector<int>> branch_arrows;  // per input branch
    std::vector<int> arrow_branch(static_cast<std::size_t>(g.num_arrows()), -1);
    std::vector<int> arrow_pos(static_cast<std::size_t>(g.num_arrows()), -1);
    for (int a = 0; a < g.num_arrows(); ++a) {
        if (g.arrows[static_cast<std::size_t>(a)].src != source) continue;
        std::vector<int> chain{a};
        int v = g.arrows[static_cast<std::size_t>(a)].dst;
        while (v != sink) {
            int next = -1;
            for (int b = 0; b < g.num_arrows(); ++b)
                if (g.arrows[static_cast<std::size_t>(b)].src == v) {
                    next = b;
                    break;
                }
            if (next < 0) return std::nullopt;
            chain.push_back(next);
            v = g.arrows[static_cast<std::size_t>(next)].dst;
        }
        for (std::size_t i = 0; i < chain.size(); ++i) {
            arrow_branch[static_cast<std::size_t>(chain[i])] = static_cast<int>(branch_arrows.size());
            arrow_pos[static_cast<std::size_t>(chain[i])] = static_cast<int>(i);
        }
        branch_arrows.push_back(std::move(chain));
    }
    for (int a = 0; a < g.num_arrows(); ++a)
        if (arrow_branch[static_cast<std::size_t>(a)] < 0) return std::nullopt;  // stray arrow

    int t = static_cast<int>(branch_arrows.size());
    std::vector<int> lengths;
    for (const auto& chain : branch_arrows) lengths.push_back(static_cast<int>(chain.size()));

    // Translate relations. Each term must be a contiguous subpath of one
    // branch; full-branch combinations become combination relations.
    std::vector<ToupieRelation> relations;
    for (const auto& rel : g.relations) {
        if (rel.terms.empty()) continue;
        bool all_full = true;
        for (const auto& term : rel.terms) {
            int b = arrow_branch[static_cast<std::size_t>(term.arrows.front())];
            if (static_cast<int>(term.arrows.size()) != lengths[static_cast<std::size_t>(b)]) all_full = false;
        }
        auto term_range = [&](const RelationTerm& term) -> std::optional<std::pair<int, int>> {
            int b = arrow_branch[static_cast<std::size_t>(term.arrows.front())];
            int pos = arrow_pos[static_cast<std::size_t>(term.arrows.front())];
            for (std::size_t i = 0; i < term.arrows.size(); ++i) {
                int a = term.arrows[i];
                if (arrow_branch[static_cast<std::size_t>(a)] != b ||
                    arrow_pos[static_cast<std::size_t>(a)] != pos + static_cast<int>(i))
                    return std::nullopt;
            }
            return std::make_pair(pos, pos + static_cast<int>(term.arrows.size()));
        };
        if (all_full) {
            CombinationRelation comb;
            comb.coeffs = zero_vec(g.field, t);
            for (const auto& term : rel.terms) {
                auto range = term_range(term);
                if (!range) return std::nullopt;
                int b = arrow_branch[static_cast<std::size_t>(term.arrows.front())];
                comb.coeffs[static_cast<std::size_t>(b)] += term.coeff;
            }
            relations.push_back(std::move(comb));
        } else {
            if (rel.terms.size() != 1) return std::nullopt;  // parallel proper subpaths cannot mix
            const auto& term = rel.terms[0];
            auto range = term_range(term);
            if (!range) return std::nullopt;
            int b = arrow_branch[static_cast<std::size_t>(term.arrows.front())];
            relations.push_back(MonomialRelation{PathRef::subpath(b + 1, range->first, range->second)});
        }
    }

    ToupieInput input{g.field, std::move(lengths), std::move(relations)};
    if (!validate_toupie(input).ok()) return std::nullopt;
    return ToupiePresentation(std::move(input));
}

}  // namespace toupie
