#include "toupie/subspace.hpp"

#include <algorithm>

namespace toupie {

Subspace::Subspace(const FieldSpec& f, int ambient_dim) : field_(f), ambient_(ambient_dim) {}

Subspace::Subspace(const FieldSpec& f, int ambient_dim, std::vector<Vec> spanning)
    : field_(f), ambient_(ambient_dim) {
    for (const auto& v : spanning)
        if (static_cast<int>(v.size()) != ambient_dim) throw Error("subspace vector dimension mismatch");
    pivots_ = rref_rows(field_, spanning);
    basis_ = std::move(spanning);
}

Subspace Subspace::full(const FieldSpec& f, int n) {
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) rows.push_back(unit_vec(f, n, i));
    return Subspace(f, n, std::move(rows));
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw Error("subspace/vector dimension mismatch");
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Scalar& c = r[static_cast<std::size_t>(pivots_[i])];
        if (c.is_zero()) continue;
        Scalar cc = c;  // r gets modified below
        for (int j = 0; j < ambient_; ++j)
            r[static_cast<std::size_t>(j)] -= cc * basis_[i][static_cast<std::size_t>(j)];
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw Error("subspace ambient dimension mismatch");
    std::vector<Vec> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return Subspace(field_, ambient_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw Error("subspace ambient dimension mismatch");
    // v = a*basis = b*other.basis: kernel of [basis^T | -other.basis^T].
    int da = dim(), db = other.dim();
    Matrix m(field_, ambient_, da + db);
    for (int r = 0; r < ambient_; ++r) {
        for (int j = 0; j < da; ++j) m.at(r, j) = basis_[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
        for (int j = 0; j < db; ++j)
            m.at(r, da + j) = -other.basis_[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
    }
    std::vector<Vec> vecs;
    for (const auto& k : m.kernel_basis()) {
        Vec v = zero_vec(field_, ambient_);
        for (int j = 0; j < da; ++j)
            v = add_vec(v, scale_vec(k[static_cast<std::size_t>(j)], basis_[static_cast<std::size_t>(j)]));
        vecs.push_back(std::move(v));
    }
    return Subspace(field_, ambient_, std::move(vecs));
}

Subspace Subspace::restrict_to_coords(const std::vector<int>& coords) const {
    std::vector<bool> keep(static_cast<std::size_t>(ambient_), false);
    for (int c : coords) {
        if (c < 0 || c >= ambient_) throw Error("coordinate out of range");
        keep[static_cast<std::size_t>(c)] = true;
    }
    // Combinations of the basis vanishing on the complement coordinates.
    std::vector<int> outside;
    for (int c = 0; c < ambient_; ++c)
        if (!keep[static_cast<std::size_t>(c)]) outside.push_back(c);
    Matrix m(field_, static_cast<int>(outside.size()), dim());
    for (std::size_t r = 0; r < outside.size(); ++r)
        for (int j = 0; j < dim(); ++j)
            m.at(static_cast<int>(r), j) = basis_[static_cast<std::size_t>(j)][static_cast<std::size_t>(outside[r])];
    std::vector<Vec> vecs;
    for (const auto& k : m.kernel_basis()) {
        Vec v = zero_vec(field_, ambient_);
        for (int j = 0; j < dim(); ++j)
            v = add_vec(v, scale_vec(k[static_cast<std::size_t>(j)], basis_[static_cast<std::size_t>(j)]));
        vecs.push_back(std::move(v));
    }
    return Subspace(field_, ambient_, std::move(vecs));
}

std::vector<int> Subspace::complement_coords() const {
    std::vector<int> result;
    Subspace cur = *this;
    for (int j = 0; j < ambient_ && cur.dim() < ambient_; ++j) {
        Vec e = unit_vec(field_, ambient_, j);
        if (!cur.contains(e)) {
            result.push_back(j);
            cur = cur.sum(Subspace(field_, ambient_, {e}));
        }
    }
    return result;
}

}  // namespace toupie
