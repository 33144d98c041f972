#ifndef UNITNIL_VERIFY_HPP
#define UNITNIL_VERIFY_HPP

#include <cstdint>
#include <optional>

#include "unitnil/matrix.hpp"

namespace unitnil::verify {

// Outcome of checking a claimed decomposition A = U + N against its three
// defining properties.
struct VerifyReport {
    bool sum_ok;        // A == U + N entrywise
    bool unit_ok;       // det U != 0
    bool nilpotent_ok;  // N^k == 0
    // Smallest j with N^j == 0 when nilpotent_ok (indices are probed up to
    // min(k, n)); nullopt when N^k != 0.
    std::optional<int> index_of_n;

    bool overall() const { return sum_ok && unit_ok && nilpotent_ok; }
};

// Checks the three properties independently of how (U, N) were produced.
VerifyReport verify_decomposition(const Matrix& a, const Matrix& u, const Matrix& n, int k);

// Cap on the brute-force enumeration size p^(n^2).
struct OracleBudget {
    std::uint64_t max_candidates = std::uint64_t{1} << 26;
};

struct OracleOutcome {
    bool feasible;
    // The lexicographically first N with N^k = 0 and det(A - N) != 0, when
    // one exists.  Lexicographic order compares entries row-major, entry
    // (0,0) most significant.
    std::optional<Matrix> witness;
    // Enumeration index of the witness (0 = zero matrix); 0 when infeasible.
    std::uint64_t witness_index;
    // Total enumeration size p^(n^2).
    std::uint64_t candidates;
};

// Brute-force feasibility oracle over a prime field: enumerates every
// N in M_n(F_p) in lexicographic order and returns the first N with
// N^k = 0 and det(A - N) != 0.  The result (including the witness) is
// identical for every jobs >= 1; jobs > 1 only splits the scan across
// OpenMP threads.  Throws RationalsUnsupportedError over the rationals and
// BudgetExceededError when p^(n^2) exceeds the budget.
OracleOutcome exhaustive_feasible(const Matrix& a, int k, OracleBudget budget = {},
                                  int jobs = 1);

// Same contract, computed with the generic exact-arithmetic matrix
// operations and no filtering shortcuts.  Kept as an independent reference
// implementation for testing and benchmarking the fast scan.
OracleOutcome exhaustive_feasible_reference(const Matrix& a, int k, OracleBudget budget = {});

// Deterministic seeded matrix with exact rank r: a product L * R of a
// uniformly resampled full-rank n x r and r x n pair (entries -9..9 over the
// rationals).  The result's rank is re-checked before returning.
Matrix random_matrix_of_rank(int n, int r, const FieldSpec& field, std::uint64_t seed);

}  // namespace unitnil::verify

#endif  // UNITNIL_VERIFY_HPP
