#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "syzygy/field.hpp"

namespace syzygy {

// Dense matrix over Q or F_p. Zero-row and zero-column matrices are
// first-class values: dimensions and field are always tracked, so
// composition through empty objects stays well-defined.
class Matrix {
  public:
    Matrix() : Matrix(FieldSpec::rationals(), 0, 0) {}
    Matrix(const FieldSpec& f, int rows, int cols);

    static Matrix zeros(const FieldSpec& f, int rows, int cols) {
        return Matrix(f, rows, cols);
    }
    static Matrix identity(const FieldSpec& f, int n);
    // Entry grid given as scalar literals ("a/b" over Q, residues over F_p).
    static Matrix of(const FieldSpec& f,
                     std::initializer_list<std::initializer_list<const char*>> entries);
    static Matrix of_strings(const FieldSpec& f,
                             const std::vector<std::vector<std::string>>& entries);

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar at(int i, int j) const;
    void set(int i, int j, const Scalar& v);

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& a) const;
    Matrix transpose() const;
    Matrix inverse() const;  // throws SingularMatrix unless square full-rank

    // Column j of the result is column `cols[j]` of *this.
    Matrix select_columns(const std::vector<int>& cols) const;
    Matrix select_rows(const std::vector<int>& rows) const;
    // Writes `block` into *this with top-left corner at (i, j).
    void paste(int i, int j, const Matrix& block);

    std::string to_string() const;  // multi-line, for diagnostics

    // Raw residue access for the F_p fast paths (row-major).
    uint32_t* fp_data();
    const uint32_t* fp_data() const;
    const Rational& q_at(int i, int j) const;

  private:
    void check_field(const Matrix& o) const;
    FieldSpec field_;
    int rows_, cols_;
    std::vector<Rational> q_;   // used when field is Q
    std::vector<uint32_t> f_;   // used when field is F_p
};

Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);  // [a | b]
Matrix vstack(const Matrix& a, const Matrix& b);  // [a ; b]
Matrix kronecker(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;                  // reduced row echelon form of the input
    int rank = 0;
    std::vector<int> pivot_columns;  // ascending
    Matrix transform;                // invertible, transform * input == reduced
};

// Reduced row echelon form with recorded row transform. Over Q the
// elimination is fraction-free (Montante/Bareiss on rows prescaled to
// integers) with a single normalization pass at the end; over F_p it is
// plain Gauss-Jordan on the kernel lane. Pivot choice is deterministic:
// leftmost available column, then smallest row index.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

// Columns form a basis of ker(m): one column per non-pivot column of
// rref(m), in ascending column order, with the free coordinate set to 1.
Matrix kernel_basis(const Matrix& m);

// Columns of m at its pivot positions: a basis of the column space.
Matrix image_basis(const Matrix& m);

// Solves a * x = b for the full right-hand-side block; nullopt when any
// column is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

}  // namespace syzygy
