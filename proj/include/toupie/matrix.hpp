#ifndef TOUPIE_MATRIX_HPP
#define TOUPIE_MATRIX_HPP

#include "toupie/scalar.hpp"

#include <optional>
#include <vector>

namespace toupie {

// Dense exact matrix. All instances in this project are tiny, so every
// routine is plain Gaussian elimination over the exact field.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& f, int rows, int cols);

    static Matrix identity(const FieldSpec& f, int n);
    static Matrix zero(const FieldSpec& f, int rows, int cols) { return Matrix(f, rows, cols); }
    static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows, int cols);
    static Matrix from_cols(const FieldSpec& f, const std::vector<Vec>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec row(int r) const;
    Vec col(int c) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Scalar& s) const;
    bool operator==(const Matrix& o) const;

    Vec apply(const Vec& v) const;  // column-vector action

    Matrix transpose() const;
    bool is_zero() const;

    int rank() const;

    // Basis of {v : Mv = 0}, rows of the result, in RREF.
    std::vector<Vec> kernel_basis() const;

    // Some x with Mx = b, or nullopt when inconsistent (free coords are 0).
    std::optional<Vec> solve(const Vec& b) const;

    // Solves M X = B column by column; nullopt if any column is inconsistent.
    std::optional<Matrix> solve_matrix(const Matrix& B) const;

    Matrix inverse() const;  // square, full rank required

    // Characteristic polynomial coefficients c0..cn of det(xI - M)
    // (monic, c[n] = 1), by the Faddeev-LeVerrier recursion.
    std::vector<Scalar> char_poly() const;

    Scalar trace() const;

    std::string to_string() const;

private:
    FieldSpec field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

// In-place row reduction to RREF; returns pivot column per pivot row.
std::vector<int> rref_rows(const FieldSpec& f, std::vector<Vec>& rows);

int rank_of_rows(const FieldSpec& f, std::vector<Vec> rows);

Vec zero_vec(const FieldSpec& f, int n);
Vec unit_vec(const FieldSpec& f, int n, int i);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Scalar& c, const Vec& v);
bool is_zero_vec(const Vec& v);

}  // namespace toupie

#endif
