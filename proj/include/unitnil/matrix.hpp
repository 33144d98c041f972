#ifndef UNITNIL_MATRIX_HPP
#define UNITNIL_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "unitnil/field.hpp"

namespace unitnil {

// Dense matrix over a FieldSpec, row-major.  All binary operations require
// both operands to live over the same field and throw MixedFieldsError
// otherwise.  Indices are 0-based throughout the API.
class Matrix {
public:
    // rows x cols zero matrix.
    Matrix(const FieldSpec& field, int rows, int cols);

    static Matrix identity(const FieldSpec& field, int n);

    // Build from integer entries (reduced into the field).
    static Matrix from_ints(const FieldSpec& field,
                            std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_ints(const FieldSpec& field,
                            const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(int i, int j) const;
    void set(int i, int j, const Scalar& value);

    bool is_zero() const;
    bool is_identity() const;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator-() const;
    Matrix operator*(const Scalar& c) const;

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    // Multi-line display, entries space-separated.
    std::string str() const;

private:
    void check_same_shape(const Matrix& other) const;

    FieldSpec field_;
    int rows_;
    int cols_;
    std::vector<Scalar> entries_;
};

// Rank via Gaussian elimination (exact in both fields).
int mat_rank(const Matrix& a);

// Determinant of a square matrix.
Scalar mat_det(const Matrix& a);

// Inverse of a square matrix.  Throws SingularMatrixError when det == 0.
Matrix mat_inverse(const Matrix& a);

// p^{-1} * a * p.
Matrix mat_conjugate(const Matrix& a, const Matrix& p);

// a^e for e >= 0 (e == 0 gives the identity).
Matrix mat_pow(const Matrix& a, int e);

// Smallest j >= 1 with a^j == 0, probing j = 1..cap.  Returns nullopt when
// a^cap != 0.  The zero matrix has index 1.
std::optional<int> nilpotency_index(const Matrix& a, int cap);

// Direct sum of square blocks along the diagonal.
Matrix block_diag(const std::vector<Matrix>& blocks);

// The matrix P with P * e_j = e_{perm[j]}, i.e. column j is the perm[j]-th
// standard basis vector.  perm must be a permutation of 0..n-1.
Matrix permutation_matrix(const FieldSpec& field, const std::vector<int>& perm);

}  // namespace unitnil

#endif  // UNITNIL_MATRIX_HPP
