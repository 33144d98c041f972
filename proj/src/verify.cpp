#include "unitnil/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "unitnil/errors.hpp"

namespace unitnil::verify {

namespace {

// The budget check bounds the enumeration size p^(n^2) by a uint64, which
// forces n <= 7 for every prime p; 8 leaves headroom.
constexpr int kKernelMaxDim = 8;
// Candidates are scanned in chunks handed out to threads through an atomic
// counter, so the set of examined indices is thread-count independent.
constexpr std::uint64_t kKernelChunk = 8192;

using KernelMat = std::uint32_t[kKernelMaxDim][kKernelMaxDim];

struct KernelProblem {
    int n = 0;
    std::uint32_t p = 2;
    int k_eff = 1;
    KernelMat a = {};
};

// Candidate index -> matrix digits, row-major with entry (0,0) the most
// significant base-p digit, so ascending index is ascending lexicographic
// order on (N_00, N_01, ..., N_{n-1,n-1}).
inline void kernel_decode(const KernelProblem& pr, std::uint64_t idx, KernelMat out) {
    for (int e = pr.n * pr.n - 1; e >= 0; --e) {
        out[e / pr.n][e % pr.n] = static_cast<std::uint32_t>(idx % pr.p);
        idx /= pr.p;
    }
}

inline bool kernel_is_zero(int n, const KernelMat m) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (m[i][j] != 0) return false;
        }
    }
    return true;
}

inline void kernel_mul(const KernelProblem& pr, const KernelMat x, const KernelMat y,
                       KernelMat out) {
    for (int i = 0; i < pr.n; ++i) {
        for (int j = 0; j < pr.n; ++j) {
            std::uint64_t acc = 0;
            for (int l = 0; l < pr.n; ++l) {
                acc += static_cast<std::uint64_t>(x[i][l]) * y[l][j] % pr.p;
            }
            out[i][j] = static_cast<std::uint32_t>(acc % pr.p);
        }
    }
}

// Is N^{k_eff} == 0?  Powers are built one multiplication at a time so the
// scan can stop at the first zero power.
inline bool kernel_nilpotent(const KernelProblem& pr, const KernelMat nmat) {
    if (kernel_is_zero(pr.n, nmat)) return true;
    KernelMat cur;
    KernelMat nxt;
    for (int i = 0; i < pr.n; ++i) {
        for (int j = 0; j < pr.n; ++j) cur[i][j] = nmat[i][j];
    }
    for (int power = 2; power <= pr.k_eff; ++power) {
        kernel_mul(pr, cur, nmat, nxt);
        if (kernel_is_zero(pr.n, nxt)) return true;
        for (int i = 0; i < pr.n; ++i) {
            for (int j = 0; j < pr.n; ++j) cur[i][j] = nxt[i][j];
        }
    }
    return false;
}

// Is det(A - N) != 0 mod p?  Division-free elimination: row_r <- piv * row_r
// - fac * row_col scales the determinant by a nonzero factor, so only the
// existence of a pivot in every column matters.
inline bool kernel_det_nonzero(const KernelProblem& pr, const KernelMat nmat) {
    KernelMat w;
    for (int i = 0; i < pr.n; ++i) {
        for (int j = 0; j < pr.n; ++j) {
            w[i][j] = (pr.a[i][j] + pr.p - nmat[i][j]) % pr.p;
        }
    }
    for (int col = 0; col < pr.n; ++col) {
        int pivot_row = -1;
        for (int r = col; r < pr.n; ++r) {
            if (w[r][col] != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) return false;
        if (pivot_row != col) {
            for (int j = col; j < pr.n; ++j) std::swap(w[col][j], w[pivot_row][j]);
        }
        const std::uint64_t piv = w[col][col];
        for (int r = col + 1; r < pr.n; ++r) {
            const std::uint64_t fac = w[r][col];
            if (fac == 0) continue;
            for (int j = col; j < pr.n; ++j) {
                const std::uint64_t keep = piv * w[r][j] % pr.p;
                const std::uint64_t drop = fac * w[col][j] % pr.p;
                w[r][j] = static_cast<std::uint32_t>((keep + pr.p - drop) % pr.p);
            }
        }
    }
    return true;
}

inline bool kernel_check(const KernelProblem& pr, std::uint64_t idx) {
    KernelMat nmat;
    kernel_decode(pr, idx, nmat);
    // Nilpotent matrices have zero trace; reject the bulk of candidates on
    // one addition per row.
    std::uint64_t trace = 0;
    for (int i = 0; i < pr.n; ++i) trace += nmat[i][i];
    if (trace % pr.p != 0) return false;
    return kernel_nilpotent(pr, nmat) && kernel_det_nonzero(pr, nmat);
}

// Returns the smallest passing candidate index, or `total` if none passes.
// Shared `best` only ever holds indices of verified hits, so (a) a chunk
// starting at or past `best` can be skipped -- everything in it is larger
// than an already-found hit -- and (b) the scan of indices below the final
// minimum is never cut short.  The result is therefore the global
// lexicographic minimum regardless of thread count or scheduling.
std::uint64_t kernel_scan(const KernelProblem& pr, std::uint64_t total, int jobs) {
    std::atomic<std::uint64_t> best{total};
    std::atomic<std::uint64_t> next_chunk{0};
    const std::uint64_t num_chunks = (total + kKernelChunk - 1) / kKernelChunk;
#pragma omp parallel num_threads(jobs)
    {
        for (;;) {
            const std::uint64_t chunk = next_chunk.fetch_add(1, std::memory_order_relaxed);
            if (chunk >= num_chunks) break;
            const std::uint64_t start = chunk * kKernelChunk;
            // Chunks are handed out in ascending order, so once a chunk
            // starts at or past a recorded hit, every later chunk does too.
            if (start >= best.load(std::memory_order_acquire)) break;
            const std::uint64_t stop = std::min(start + kKernelChunk, total);
            for (std::uint64_t idx = start; idx < stop; ++idx) {
                if (idx >= best.load(std::memory_order_relaxed)) break;
                if (kernel_check(pr, idx)) {
                    std::uint64_t cur = best.load(std::memory_order_acquire);
                    while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                    }
                    break;
                }
            }
        }
    }
    return best.load();
}

// Shared validation for both oracle implementations; returns (p, total).
std::pair<std::uint64_t, std::uint64_t> oracle_preflight(const Matrix& a, int k,
                                                         const OracleBudget& budget) {
    if (a.field().kind() != FieldSpec::Kind::Prime) {
        throw RationalsUnsupportedError(
            "exhaustive_feasible: brute-force enumeration needs a finite field");
    }
    if (a.rows() != a.cols()) {
        throw NotSquareError("exhaustive_feasible: matrix must be square");
    }
    if (k < 1) throw InvalidArgumentError("exhaustive_feasible: k must be >= 1");
    const std::uint64_t p = a.field().modulus();
    const int cells = a.rows() * a.cols();
    std::uint64_t total = 1;
    for (int e = 0; e < cells; ++e) {
        if (total > budget.max_candidates / p) {
            throw BudgetExceededError("exhaustive_feasible: " + std::to_string(p) + "^" +
                                      std::to_string(cells) + " candidates exceed budget " +
                                      std::to_string(budget.max_candidates));
        }
        total *= p;
    }
    return {p, total};
}

Matrix candidate_matrix(const FieldSpec& field, int n, std::uint64_t p, std::uint64_t idx) {
    Matrix m(field, n, n);
    for (int e = n * n - 1; e >= 0; --e) {
        m.set(e / n, e % n, Scalar::of_int(field, static_cast<long long>(idx % p)));
        idx /= p;
    }
    return m;
}

}  // namespace

VerifyReport verify_decomposition(const Matrix& a, const Matrix& u, const Matrix& n, int k) {
    if (k < 1) throw InvalidArgumentError("verify_decomposition: k must be >= 1");
    if (!(a.field() == u.field()) || !(a.field() == n.field())) {
        throw MixedFieldsError("verify_decomposition: matrices over different fields");
    }
    if (a.rows() != u.rows() || a.cols() != u.cols() || a.rows() != n.rows() ||
        a.cols() != n.cols()) {
        throw DimensionMismatchError("verify_decomposition: matrices must share one shape");
    }
    if (a.rows() != a.cols()) {
        throw NotSquareError("verify_decomposition: matrices must be square");
    }
    VerifyReport report{};
    report.sum_ok = (u + n == a);
    report.unit_ok = !mat_det(u).is_zero();
    // For an n x n matrix, N^k = 0 iff N^min(k, n) = 0 (a nilpotent matrix
    // has index at most n), so probing to min(k, n) settles every k.
    const int cap = std::min(k, std::max(1, a.rows()));
    report.index_of_n = nilpotency_index(n, cap);
    report.nilpotent_ok = report.index_of_n.has_value();
    return report;
}

OracleOutcome exhaustive_feasible(const Matrix& a, int k, OracleBudget budget, int jobs) {
    if (jobs < 1) throw InvalidArgumentError("exhaustive_feasible: jobs must be >= 1");
    const auto [p, total] = oracle_preflight(a, k, budget);
    const int n = a.rows();
    if (n > kKernelMaxDim) {
        throw InternalVerificationError("exhaustive_feasible: dimension passed budget check");
    }
    KernelProblem pr;
    pr.n = n;
    pr.p = static_cast<std::uint32_t>(p);
    pr.k_eff = std::min(k, std::max(1, n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            pr.a[i][j] = static_cast<std::uint32_t>(a.at(i, j).residue());
        }
    }

    const std::uint64_t found = kernel_scan(pr, total, jobs);
    if (found >= total) {
        return OracleOutcome{false, std::nullopt, 0, total};
    }
    Matrix witness = candidate_matrix(a.field(), n, p, found);
    // Re-establish the witness's properties with the generic exact
    // arithmetic before handing it out.
    if (!mat_pow(witness, pr.k_eff).is_zero() || mat_det(a - witness).is_zero()) {
        throw InternalVerificationError("exhaustive_feasible: witness failed re-verification");
    }
    return OracleOutcome{true, std::move(witness), found, total};
}

OracleOutcome exhaustive_feasible_reference(const Matrix& a, int k, OracleBudget budget) {
    const auto [p, total] = oracle_preflight(a, k, budget);
    const int n = a.rows();
    const int k_eff = std::min(k, std::max(1, n));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Matrix cand = candidate_matrix(a.field(), n, p, idx);
        if (mat_pow(cand, k_eff).is_zero() && !mat_det(a - cand).is_zero()) {
            return OracleOutcome{true, std::move(cand), idx, total};
        }
    }
    return OracleOutcome{false, std::nullopt, 0, total};
}

Matrix random_matrix_of_rank(int n, int r, const FieldSpec& field, std::uint64_t seed) {
    if (n < 0 || r < 0 || r > n) {
        throw InvalidArgumentError("random_matrix_of_rank: need 0 <= r <= n");
    }
    std::mt19937_64 rng(seed);
    const auto draw = [&]() {
        if (field.kind() == FieldSpec::Kind::Prime) {
            return Scalar::of_int(field, static_cast<long long>(rng() % field.modulus()));
        }
        return Scalar::of_int(field, static_cast<long long>(rng() % 19) - 9);
    };
    const auto sample = [&](int rows, int cols) {
        Matrix m(field, rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) m.set(i, j, draw());
        }
        return m;
    };
    Matrix left = sample(n, r);
    while (mat_rank(left) != r) left = sample(n, r);
    Matrix right = sample(r, n);
    while (mat_rank(right) != r) right = sample(r, n);
    Matrix product = left * right;
    // left has full column rank, so rank(left * right) = rank(right) = r;
    // check it anyway before returning.
    if (mat_rank(product) != r) {
        throw InternalVerificationError("random_matrix_of_rank: product rank drifted");
    }
    return product;
}

}  // namespace unitnil::verify
