#include "toupie/matrix.hpp"

#include <sstream>

namespace toupie {

Vec zero_vec(const FieldSpec& f, int n) { return Vec(static_cast<std::size_t>(n), Scalar(f)); }

Vec unit_vec(const FieldSpec& f, int n, int i) {
    Vec v = zero_vec(f, n);
    v[static_cast<std::size_t>(i)] = Scalar::of(f, 1);
    return v;
}

Vec add_vec(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub_vec(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale_vec(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(const FieldSpec& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Scalar(f)) {}

Matrix Matrix::identity(const FieldSpec& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::of(f, 1);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows, int cols) {
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

Matrix Matrix::from_cols(const FieldSpec& f, const std::vector<Vec>& cols, int rows) {
    Matrix m(f, rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols_; ++c)
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    return m;
}

Vec Matrix::row(int r) const {
    Vec v;
    v.reserve(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Vec Matrix::col(int c) const {
    Vec v;
    v.reserve(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
    Matrix m(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in sum");
    Matrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in difference");
    Matrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
    return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix m = *this;
    for (auto& x : m.data_) x *= s;
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("matrix/vector shape mismatch");
    Vec r = zero_vec(field_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<int> rref_rows(const FieldSpec& f, std::vector<Vec>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    int n = static_cast<int>(rows[0].size());
    std::size_t lead = 0;
    for (int col = 0; col < n && lead < rows.size(); ++col) {
        std::size_t piv = lead;
        while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[lead], rows[piv]);
        Scalar inv = rows[lead][static_cast<std::size_t>(col)].inverse();
        for (auto& x : rows[lead]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead) continue;
            Scalar c = rows[r][static_cast<std::size_t>(col)];
            if (c.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                rows[r][static_cast<std::size_t>(j)] -= c * rows[lead][static_cast<std::size_t>(j)];
        }
        pivots.push_back(col);
        ++lead;
    }
    rows.resize(pivots.size(), zero_vec(f, n));
    return pivots;
}

int rank_of_rows(const FieldSpec& f, std::vector<Vec> rows) {
    return static_cast<int>(rref_rows(f, rows).size());
}

int Matrix::rank() const {
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) rows.push_back(row(r));
    return rank_of_rows(field_, std::move(rows));
}

std::vector<Vec> Matrix::kernel_basis() const {
    std::vector<Vec> rows;
    for (int r = 0; r < rows_; ++r) rows.push_back(row(r));
    std::vector<int> pivots = rref_rows(field_, rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vec v = zero_vec(field_, cols_);
        v[static_cast<std::size_t>(free)] = Scalar::of(field_, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -rows[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    if (static_cast<int>(b.size()) != rows_) throw Error("matrix/vector shape mismatch in solve");
    std::vector<Vec> aug;
    for (int r = 0; r < rows_; ++r) {
        Vec v = row(r);
        v.push_back(b[static_cast<std::size_t>(r)]);
        aug.push_back(std::move(v));
    }
    std::vector<int> pivots = rref_rows(field_, aug);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] == cols_) return std::nullopt;  // pivot in the augmented column
    Vec x = zero_vec(field_, cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = aug[r][static_cast<std::size_t>(cols_)];
    return x;
}

std::optional<Matrix> Matrix::solve_matrix(const Matrix& B) const {
    if (B.rows() != rows_) throw Error("shape mismatch in solve_matrix");
    Matrix X(field_, cols_, B.cols());
    for (int c = 0; c < B.cols(); ++c) {
        auto x = solve(B.col(c));
        if (!x) return std::nullopt;
        for (int r = 0; r < cols_; ++r) X.at(r, c) = (*x)[static_cast<std::size_t>(r)];
    }
    return X;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of a non-square matrix");
    auto X = solve_matrix(identity(field_, rows_));
    if (!X || X->rank() != rows_) throw Error("matrix is singular");
    return *X;
}

Scalar Matrix::trace() const {
    Scalar t(field_);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

std::vector<Scalar> Matrix::char_poly() const {
    if (rows_ != cols_) throw Error("char_poly of a non-square matrix");
    if (field_.is_prime_field())
        throw FieldError("char_poly requires characteristic zero");
    int n = rows_;
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(field_));
    c[static_cast<std::size_t>(n)] = Scalar::of(field_, 1);
    Matrix Mk = identity(field_, n);
    for (int k = 1; k <= n; ++k) {
        Mk = *this * Mk;
        Scalar ck = -(Mk.trace() / Scalar::of(field_, k));
        c[static_cast<std::size_t>(n - k)] = ck;
        for (int i = 0; i < n; ++i) Mk.at(i, i) += ck;
    }
    return c;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).to_string();
        os << (r + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

}  // namespace toupie
