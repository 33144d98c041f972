#include "unitnil/matrix.hpp"

#include <sstream>
#include <utility>

namespace unitnil {

Matrix::Matrix(const FieldSpec& field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        throw InvalidArgumentError("matrix dimensions must be non-negative");
    }
    entries_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(field));
}

Matrix Matrix::identity(const FieldSpec& field, int n) {
    Matrix m(field, n, n);
    Scalar one = Scalar::one(field);
    for (int i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

Matrix Matrix::from_ints(const FieldSpec& field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<long long>> copy;
    copy.reserve(rows.size());
    for (const auto& r : rows) copy.emplace_back(r);
    return from_ints(field, copy);
}

Matrix Matrix::from_ints(const FieldSpec& field,
                         const std::vector<std::vector<long long>>& rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(field, nr, nc);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(rows[i].size()) != nc) {
            throw DimensionMismatchError("ragged rows in from_ints");
        }
        for (int j = 0; j < nc; ++j) {
            m.set(i, j, Scalar::of_int(field, rows[i][j]));
        }
    }
    return m;
}

const Scalar& Matrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw InvalidArgumentError("matrix index out of range");
    }
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

void Matrix::set(int i, int j, const Scalar& value) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw InvalidArgumentError("matrix index out of range");
    }
    if (value.field() != field_) {
        throw MixedFieldsError("entry field does not match matrix field");
    }
    entries_[static_cast<std::size_t>(i) * cols_ + j] = value;
}

bool Matrix::is_zero() const {
    for (const Scalar& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    }
    return true;
}

void Matrix::check_same_shape(const Matrix& other) const {
    if (field_ != other.field_) {
        throw MixedFieldsError("matrices over different fields");
    }
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatchError("matrix shapes differ");
    }
}

Matrix Matrix::operator+(const Matrix& other) const {
    check_same_shape(other);
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] + other.entries_[i];
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    check_same_shape(other);
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] - other.entries_[i];
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = -entries_[i];
    }
    return out;
}

Matrix Matrix::operator*(const Scalar& c) const {
    if (c.field() != field_) {
        throw MixedFieldsError("scalar field does not match matrix field");
    }
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] * c;
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (field_ != other.field_) {
        throw MixedFieldsError("matrices over different fields");
    }
    if (cols_ != other.rows_) {
        throw DimensionMismatchError("inner dimensions differ in product");
    }
    Matrix out(field_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int l = 0; l < cols_; ++l) {
            const Scalar& a = at(i, l);
            if (a.is_zero()) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Scalar& b = other.at(l, j);
                if (b.is_zero()) continue;
                out.set(i, j, out.at(i, j) + a * b);
            }
        }
    }
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    if (field_ != other.field_) {
        throw MixedFieldsError("matrices over different fields");
    }
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] != other.entries_[i]) return false;
    }
    return true;
}

std::string Matrix::str() const {
    // Column-align for readability.
    std::vector<std::string> cells(entries_.size());
    std::vector<std::size_t> width(cols_, 0);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            std::string s = at(i, j).str();
            width[j] = std::max(width[j], s.size());
            cells[static_cast<std::size_t>(i) * cols_ + j] = std::move(s);
        }
    }
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << "[ ";
        for (int j = 0; j < cols_; ++j) {
            const std::string& s = cells[static_cast<std::size_t>(i) * cols_ + j];
            out << std::string(width[j] - s.size(), ' ') << s;
            out << (j + 1 < cols_ ? " " : " ]");
        }
        out << '\n';
    }
    return out.str();
}

namespace {

// Shared elimination core.  Reduces a working copy to row-echelon form with
// exact arithmetic, recording the determinant scale when requested.
// Pivot choice is the first nonzero entry in the column, which keeps the
// procedure deterministic across fields.
struct Echelon {
    int rank = 0;
    Scalar det_scale;  // product of pivots, sign-adjusted; meaningful iff square
    bool swapped_odd = false;

    explicit Echelon(const FieldSpec& field) : det_scale(Scalar::one(field)) {}
};

Echelon echelonize(Matrix& m) {
    const FieldSpec& field = m.field();
    Echelon result(field);
    int nr = m.rows();
    int nc = m.cols();
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int piv = -1;
        for (int i = row; i < nr; ++i) {
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row) {
            for (int j = 0; j < nc; ++j) {
                Scalar tmp = m.at(row, j);
                m.set(row, j, m.at(piv, j));
                m.set(piv, j, tmp);
            }
            result.swapped_odd = !result.swapped_odd;
        }
        Scalar pivot = m.at(row, col);
        result.det_scale = result.det_scale * pivot;
        Scalar inv = pivot.inverse();
        for (int j = col; j < nc; ++j) {
            m.set(row, j, m.at(row, j) * inv);
        }
        for (int i = row + 1; i < nr; ++i) {
            Scalar f = m.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < nc; ++j) {
                m.set(i, j, m.at(i, j) - f * m.at(row, j));
            }
        }
        ++row;
    }
    result.rank = row;
    return result;
}

}  // namespace

int mat_rank(const Matrix& a) {
    Matrix work = a;
    return echelonize(work).rank;
}

Scalar mat_det(const Matrix& a) {
    if (!a.is_square()) {
        throw NotSquareError("determinant requires a square matrix");
    }
    Matrix work = a;
    Echelon e = echelonize(work);
    if (e.rank < a.rows()) return Scalar::zero(a.field());
    Scalar det = e.det_scale;
    if (e.swapped_odd) det = -det;
    return det;
}

Matrix mat_inverse(const Matrix& a) {
    if (!a.is_square()) {
        throw NotSquareError("inverse requires a square matrix");
    }
    int n = a.rows();
    const FieldSpec& field = a.field();
    // Gauss-Jordan on [a | I].
    Matrix work = a;
    Matrix inv = Matrix::identity(field, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i) {
            if (!work.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) {
            throw SingularMatrixError("matrix is singular");
        }
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                Scalar tmp = work.at(col, j);
                work.set(col, j, work.at(piv, j));
                work.set(piv, j, tmp);
                tmp = inv.at(col, j);
                inv.set(col, j, inv.at(piv, j));
                inv.set(piv, j, tmp);
            }
        }
        Scalar s = work.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            work.set(col, j, work.at(col, j) * s);
            inv.set(col, j, inv.at(col, j) * s);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            Scalar f = work.at(i, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                work.set(i, j, work.at(i, j) - f * work.at(col, j));
                inv.set(i, j, inv.at(i, j) - f * inv.at(col, j));
            }
        }
    }
    return inv;
}

Matrix mat_conjugate(const Matrix& a, const Matrix& p) {
    if (!a.is_square() || !p.is_square() || a.rows() != p.rows()) {
        throw DimensionMismatchError("conjugation needs square matrices of equal size");
    }
    return mat_inverse(p) * a * p;
}

Matrix mat_pow(const Matrix& a, int e) {
    if (!a.is_square()) {
        throw NotSquareError("power requires a square matrix");
    }
    if (e < 0) {
        throw InvalidArgumentError("negative matrix power");
    }
    Matrix result = Matrix::identity(a.field(), a.rows());
    Matrix base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::optional<int> nilpotency_index(const Matrix& a, int cap) {
    if (!a.is_square()) {
        throw NotSquareError("nilpotency index requires a square matrix");
    }
    if (cap < 1) {
        throw InvalidArgumentError("nilpotency cap must be >= 1");
    }
    Matrix power = a;
    for (int j = 1; j <= cap; ++j) {
        if (power.is_zero()) return j;
        if (j < cap) power = power * a;
    }
    return std::nullopt;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) {
        throw InvalidArgumentError("block_diag needs at least one block");
    }
    const FieldSpec& field = blocks[0].field();
    int n = 0;
    for (const Matrix& b : blocks) {
        if (!b.is_square()) throw NotSquareError("block_diag blocks must be square");
        if (b.field() != field) throw MixedFieldsError("block_diag blocks over different fields");
        n += b.rows();
    }
    Matrix out(field, n, n);
    int off = 0;
    for (const Matrix& b : blocks) {
        for (int i = 0; i < b.rows(); ++i) {
            for (int j = 0; j < b.cols(); ++j) {
                out.set(off + i, off + j, b.at(i, j));
            }
        }
        off += b.rows();
    }
    return out;
}

Matrix permutation_matrix(const FieldSpec& field, const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) {
            throw NotAPermutationError("permutation_matrix: not a permutation of 0..n-1");
        }
        seen[v] = true;
    }
    Matrix out(field, n, n);
    Scalar one = Scalar::one(field);
    for (int j = 0; j < n; ++j) {
        out.set(perm[j], j, one);
    }
    return out;
}

}  // namespace unitnil
