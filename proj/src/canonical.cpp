#include "unitnil/canonical.hpp"

#include <limits>
#include <optional>

namespace unitnil::canonical {

namespace {

// --- Smith reduction of the characteristic matrix ---------------------------
//
// Reduces M = xI - A to diagonal form diag(d_0, ..., d_{n-1}) with monic
// entries and d_0 | d_1 | ... | d_{n-1}, using elementary row and column
// operations over F[x].  Row operations change the implicit generating set of
// the F[x]-module F^n (x acting as A); the matrix `uinv` tracks them so the
// generators can be read off afterwards: after reduction, generator i is
//     w_i = sum_j uinv[j][i](A) e_j,
// and for each d_i of degree m >= 1 the vectors w_i, A w_i, ..., A^{m-1} w_i
// are a basis of an A-invariant subspace on which A acts as companion(d_i).
//
// Bookkeeping: a row operation M <- E M updates uinv <- uinv E^{-1}:
//   swap rows r1, r2            ->  swap columns r1, r2 of uinv
//   row_d -= q * row_s          ->  col_s += q * col_d of uinv
//   row_d += row_s              ->  col_s -= col_d of uinv
//   row_r *= u                  ->  col_r *= u^{-1} of uinv
// Column operations on M leave the generators alone.
struct SmithState {
    std::vector<std::vector<Polynomial>> m;
    std::vector<std::vector<Polynomial>> uinv;
    int n;

    explicit SmithState(const Matrix& a)
        : m(a.rows(), std::vector<Polynomial>(a.rows(), Polynomial(a.field()))),
          uinv(a.rows(), std::vector<Polynomial>(a.rows(), Polynomial(a.field()))),
          n(a.rows()) {
        const FieldSpec& field = a.field();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                std::vector<Scalar> coeffs{-a.at(i, j),
                                           i == j ? Scalar::one(field) : Scalar::zero(field)};
                m[i][j] = Polynomial(field, std::move(coeffs));
            }
            uinv[i][i] = Polynomial::from_ints(field, {1});
        }
    }

    void row_swap(int r1, int r2) {
        std::swap(m[r1], m[r2]);
        for (int i = 0; i < n; ++i) std::swap(uinv[i][r1], uinv[i][r2]);
    }

    void col_swap(int c1, int c2) {
        for (int i = 0; i < n; ++i) std::swap(m[i][c1], m[i][c2]);
    }

    // row_dst -= q * row_src.
    void row_axpy(int dst, int src, const Polynomial& q) {
        for (int j = 0; j < n; ++j) m[dst][j] = m[dst][j] - q * m[src][j];
        for (int i = 0; i < n; ++i) uinv[i][src] = uinv[i][src] + q * uinv[i][dst];
    }

    // row_dst += row_src.
    void row_add(int dst, int src) {
        for (int j = 0; j < n; ++j) m[dst][j] = m[dst][j] + m[src][j];
        for (int i = 0; i < n; ++i) uinv[i][src] = uinv[i][src] - uinv[i][dst];
    }

    // row_r *= u (u a nonzero scalar).
    void row_scale(int r, const Scalar& u) {
        Polynomial pu = Polynomial::constant(u);
        Polynomial pu_inv = Polynomial::constant(u.inverse());
        for (int j = 0; j < n; ++j) m[r][j] = m[r][j] * pu;
        for (int i = 0; i < n; ++i) uinv[i][r] = uinv[i][r] * pu_inv;
    }

    // col_dst -= q * col_src.
    void col_axpy(int dst, int src, const Polynomial& q) {
        for (int i = 0; i < n; ++i) m[i][dst] = m[i][dst] - q * m[i][src];
    }

    void reduce() {
        for (int t = 0; t < n; ++t) {
            for (;;) {
                // Deterministic pivot: minimal degree, ties broken by smallest
                // row then column index.
                int pi = -1, pj = -1;
                int best = std::numeric_limits<int>::max();
                for (int i = t; i < n; ++i) {
                    for (int j = t; j < n; ++j) {
                        if (!m[i][j].is_zero() && m[i][j].degree() < best) {
                            best = m[i][j].degree();
                            pi = i;
                            pj = j;
                        }
                    }
                }
                if (pi < 0) {
                    // det(xI - A) is the characteristic polynomial, never zero.
                    throw InternalVerificationError(
                        "characteristic matrix reduced to a singular shape");
                }
                if (pi != t) row_swap(t, pi);
                if (pj != t) col_swap(t, pj);

                // Clear column t below the pivot.  Remainders of smaller
                // degree may appear; then reselect the pivot.
                bool dirty = false;
                for (int i = t + 1; i < n; ++i) {
                    if (m[i][t].is_zero()) continue;
                    auto [q, r] = poly_divmod(m[i][t], m[t][t]);
                    row_axpy(i, t, q);
                    if (!r.is_zero()) dirty = true;
                }
                if (dirty) continue;

                // Clear row t to the right of the pivot.
                for (int j = t + 1; j < n; ++j) {
                    if (m[t][j].is_zero()) continue;
                    auto [q, r] = poly_divmod(m[t][j], m[t][t]);
                    col_axpy(j, t, q);
                    if (!r.is_zero()) dirty = true;
                }
                if (dirty) continue;

                // Enforce divisibility: the pivot must divide every remaining
                // entry.  Folding an offending row into row t surfaces a
                // smaller-degree remainder on the next pass.
                bool fixed_up = false;
                for (int i = t + 1; i < n && !fixed_up; ++i) {
                    for (int j = t + 1; j < n && !fixed_up; ++j) {
                        if (m[i][j].is_zero()) continue;
                        if (!poly_divmod(m[i][j], m[t][t]).second.is_zero()) {
                            row_add(t, i);
                            fixed_up = true;
                        }
                    }
                }
                if (fixed_up) continue;
                break;
            }
            if (!m[t][t].is_monic()) {
                row_scale(t, m[t][t].leading().inverse());
            }
        }
    }
};

// Applies the polynomial u to A, acting on the basis vector e_j; i.e. the
// vector u(A) e_j, computed by Horner without forming u(A).
std::vector<Scalar> poly_apply_basis(const Polynomial& u, const Matrix& a, int j) {
    const FieldSpec& field = a.field();
    int n = a.rows();
    std::vector<Scalar> acc(n, Scalar::zero(field));
    if (u.is_zero()) return acc;
    for (int d = u.degree(); d >= 0; --d) {
        std::vector<Scalar> next(n, Scalar::zero(field));
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                if (a.at(r, c).is_zero() || acc[c].is_zero()) continue;
                next[r] = next[r] + a.at(r, c) * acc[c];
            }
        }
        next[j] = next[j] + u.coeff(d);
        acc = std::move(next);
    }
    return acc;
}

std::vector<Scalar> mat_apply(const Matrix& a, const std::vector<Scalar>& v) {
    const FieldSpec& field = a.field();
    int n = a.rows();
    std::vector<Scalar> out(n, Scalar::zero(field));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (a.at(r, c).is_zero() || v[c].is_zero()) continue;
            out[r] = out[r] + a.at(r, c) * v[c];
        }
    }
    return out;
}

}  // namespace

FrobeniusForm frobenius_form(const Matrix& a) {
    if (!a.is_square()) {
        throw NotSquareError("canonical form requires a square matrix");
    }
    const FieldSpec& field = a.field();
    int n = a.rows();
    if (n == 0) {
        return FrobeniusForm{{}, Matrix(field, 0, 0)};
    }

    SmithState state(a);
    state.reduce();

    std::vector<Polynomial> factors;
    std::vector<int> source;
    for (int t = 0; t < n; ++t) {
        const Polynomial& d = state.m[t][t];
        if (d.is_zero()) {
            throw InternalVerificationError("zero invariant factor");
        }
        if (d.degree() >= 1) {
            factors.push_back(d);
            source.push_back(t);
        }
    }

    Matrix p(field, n, n);
    int col = 0;
    for (std::size_t idx = 0; idx < factors.size(); ++idx) {
        int t = source[idx];
        // Generator of the cyclic summand annihilated by factors[idx].
        std::vector<Scalar> w(n, Scalar::zero(field));
        for (int j = 0; j < n; ++j) {
            const Polynomial& u = state.uinv[j][t];
            if (u.is_zero()) continue;
            std::vector<Scalar> part = poly_apply_basis(u, a, j);
            for (int r = 0; r < n; ++r) w[r] = w[r] + part[r];
        }
        int m = factors[idx].degree();
        for (int step = 0; step < m; ++step) {
            if (col >= n) {
                throw InternalVerificationError("invariant factor degrees exceed n");
            }
            for (int r = 0; r < n; ++r) p.set(r, col, w[r]);
            ++col;
            if (step + 1 < m) w = mat_apply(a, w);
        }
    }
    if (col != n) {
        throw InternalVerificationError("invariant factor degrees do not sum to n");
    }

    // Mandatory self-check of the whole computation.
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!factors[i].is_monic()) {
            throw InternalVerificationError("invariant factor not monic");
        }
        if (i + 1 < factors.size() &&
            !poly_divmod(factors[i + 1], factors[i]).second.is_zero()) {
            throw InternalVerificationError("invariant factors violate divisibility");
        }
    }
    if (mat_det(p).is_zero()) {
        throw InternalVerificationError("canonical basis is singular");
    }
    std::vector<Matrix> comps;
    comps.reserve(factors.size());
    for (const Polynomial& f : factors) comps.push_back(companion(f));
    if (mat_conjugate(a, p) != block_diag(comps)) {
        throw InternalVerificationError("conjugation does not reproduce the canonical form");
    }

    return FrobeniusForm{std::move(factors), std::move(p)};
}

BlockSpec BlockSpec::invertible(const Polynomial& q) {
    if (q.is_zero() || q.degree() < 1) {
        throw InvalidArgumentError("invertible block needs degree >= 1");
    }
    if (!q.is_monic()) {
        throw NotMonicError("invertible block polynomial must be monic");
    }
    if (q.coeff(0).is_zero()) {
        throw InvalidArgumentError("invertible block needs a nonzero constant term");
    }
    return BlockSpec(Kind::Invertible, q);
}

BlockSpec BlockSpec::zero_one(const FieldSpec& field) {
    return BlockSpec(Kind::ZeroOne, Polynomial::x_power(field, 1));
}

BlockSpec BlockSpec::x_power(const FieldSpec& field, int m) {
    if (m < 2) {
        throw InvalidArgumentError("shift block needs size >= 2 (size 1 is ZeroOne)");
    }
    return BlockSpec(Kind::XPower, Polynomial::x_power(field, m));
}

Matrix realize_blocks(const FieldSpec& field, const std::vector<BlockSpec>& blocks) {
    if (blocks.empty()) return Matrix(field, 0, 0);
    std::vector<Matrix> mats;
    mats.reserve(blocks.size());
    for (const BlockSpec& b : blocks) {
        if (b.field() != field) {
            throw MixedFieldsError("block field does not match requested field");
        }
        mats.push_back(b.realize());
    }
    return block_diag(mats);
}

std::pair<std::vector<BlockSpec>, Matrix> coprime_split_block(const Polynomial& f) {
    if (f.is_zero() || f.degree() < 1) {
        throw InvalidArgumentError("coprime split needs degree >= 1");
    }
    if (!f.is_monic()) {
        throw NotMonicError("coprime split needs a monic polynomial");
    }
    const FieldSpec& field = f.field();
    int n = f.degree();
    auto [m, g] = strip_x_power(f);

    std::vector<BlockSpec> blocks;
    if (m == 1) {
        blocks.push_back(BlockSpec::zero_one(field));
    } else if (m >= 2) {
        blocks.push_back(BlockSpec::x_power(field, m));
    }
    if (g.degree() >= 1) {
        blocks.push_back(BlockSpec::invertible(g));
    }

    if (m == 0 || g.degree() == 0) {
        // Single block; no basis change needed.
        return {std::move(blocks), Matrix::identity(field, n)};
    }

    // Basis of F[x]/(f) adapted to the splitting:
    //   columns 0..m-1:    g * x^j   (the shift part),
    //   columns m..n-1:    x^{m+j}   (the invertible part).
    // Q is lower triangular with diagonal g(0), ..., g(0), 1, ..., 1.
    int r = g.degree();
    Matrix q(field, n, n);
    for (int j = 0; j < m; ++j) {
        for (int l = 0; l <= r; ++l) {
            q.set(l + j, j, g.coeff(l));
        }
    }
    for (int j = 0; j < r; ++j) {
        q.set(m + j, m + j, Scalar::one(field));
    }
    return {std::move(blocks), std::move(q)};
}

namespace {

// Structural recognizer: if `a` is exactly a direct sum of realized blocks,
// return them; otherwise nullopt.  Segment boundaries are read off the runs
// of exact ones on the subdiagonal, then confirmed by rebuilding the direct
// sum and comparing entrywise.
std::optional<std::vector<BlockSpec>> recognize_block_diagonal(const Matrix& a) {
    const FieldSpec& field = a.field();
    int n = a.rows();
    std::vector<BlockSpec> blocks;
    int offset = 0;
    while (offset < n) {
        int run = 0;
        while (offset + run + 1 < n && a.at(offset + run + 1, offset + run).is_one()) {
            ++run;
        }
        int m = run + 1;
        // Candidate polynomial from the last column of the segment.
        std::vector<Scalar> coeffs;
        coeffs.reserve(static_cast<std::size_t>(m) + 1);
        for (int i = 0; i < m; ++i) {
            coeffs.push_back(-a.at(offset + i, offset + m - 1));
        }
        coeffs.push_back(Scalar::one(field));
        Polynomial f(field, std::move(coeffs));
        bool constant_zero = f.coeff(0).is_zero();
        bool pure_power = f == Polynomial::x_power(field, m);
        if (!constant_zero) {
            blocks.push_back(BlockSpec::invertible(f));
        } else if (pure_power) {
            blocks.push_back(m == 1 ? BlockSpec::zero_one(field)
                                    : BlockSpec::x_power(field, m));
        } else {
            return std::nullopt;  // mixed companion block: needs splitting
        }
        offset += m;
    }
    if (realize_blocks(field, blocks) != a) return std::nullopt;
    return blocks;
}

}  // namespace

BlockForm block_form(const Matrix& a) {
    if (!a.is_square()) {
        throw NotSquareError("canonical form requires a square matrix");
    }
    const FieldSpec& field = a.field();
    int n = a.rows();
    if (n == 0) {
        return BlockForm{{}, Matrix(field, 0, 0)};
    }

    std::vector<BlockSpec> blocks;
    Matrix transform = Matrix::identity(field, n);

    if (auto direct = recognize_block_diagonal(a)) {
        blocks = std::move(*direct);
    } else {
        FrobeniusForm frob = frobenius_form(a);
        std::vector<Matrix> q_parts;
        q_parts.reserve(frob.factors.size());
        for (const Polynomial& f : frob.factors) {
            auto [part_blocks, q] = coprime_split_block(f);
            for (BlockSpec& b : part_blocks) blocks.push_back(std::move(b));
            q_parts.push_back(std::move(q));
        }
        transform = frob.transform * block_diag(q_parts);
    }

    // Mandatory self-check: conjugation, block sizes, and rank accounting.
    int size_sum = 0;
    int expected_rank = 0;
    for (const BlockSpec& b : blocks) {
        size_sum += b.size();
        switch (b.kind()) {
            case BlockSpec::Kind::Invertible: expected_rank += b.size(); break;
            case BlockSpec::Kind::ZeroOne: break;
            case BlockSpec::Kind::XPower: expected_rank += b.size() - 1; break;
        }
    }
    if (size_sum != n) {
        throw InternalVerificationError("block sizes do not sum to n");
    }
    if (mat_det(transform).is_zero()) {
        throw InternalVerificationError("block-form transform is singular");
    }
    if (mat_conjugate(a, transform) != realize_blocks(field, blocks)) {
        throw InternalVerificationError("conjugation does not reproduce the block form");
    }
    if (mat_rank(a) != expected_rank) {
        throw InternalVerificationError("block classification disagrees with the rank");
    }

    return BlockForm{std::move(blocks), std::move(transform)};
}

}  // namespace unitnil::canonical
