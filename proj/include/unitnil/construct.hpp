#ifndef UNITNIL_CONSTRUCT_HPP
#define UNITNIL_CONSTRUCT_HPP

#include <optional>
#include <vector>

#include "unitnil/canonical.hpp"
#include "unitnil/matrix.hpp"

namespace unitnil::construct {

// The special nilpotent gadget N_{r,s,k} (indices 1-based, matching the
// construction's bookkeeping):
//   N = e_{r,r} + e_{s,r} - e_{r,s+k-2} - sum_{i=0}^{k-2} e_{s,s+i}
//       + sum_{i=0}^{k-3} e_{s+i+1,s+i}.
// It has rank k-1 and nilpotency index exactly k, and is similar to the
// single shift chain of length k padded with zeros.
// Preconditions: 2 <= k <= n, 1 <= r < s <= n, s + k - 2 <= n.
Matrix special_nilpotent(int n, int r, int s, int k, const FieldSpec& field);

// The invertible basis matrix Q exhibiting that similarity:
//   Q^{-1} * (shift chain of length k in the top-left corner) * Q
//     == special_nilpotent(n, r, s, k).
// Columns: col r = e_1; col s+i = e_{i+2} - e_1 for i = 0..k-2; the remaining
// columns take e_{k+1}, ..., e_n in increasing position order (1-based).
Matrix special_nilpotent_basis(int n, int r, int s, int k, const FieldSpec& field);

// One gadget's 1-based index triple (r, s, k).
struct GadgetIndex {
    int r;
    int s;
    int k;
    bool operator==(const GadgetIndex&) const = default;
};

// Index triples of the gadgets summed by complement_for_invertible for an
// invertible host of size t absorbing z zero blocks (empty when z == 0).
// Writing z = c(k-1) + d with 0 <= d < k-1:
//   N_{i, t+1+(i-1)(k-1), k} for i = 1..c, plus N_{c+1, t+1+c(k-1), d+1}
//   when d > 0.
std::vector<GadgetIndex> invertible_complement_parts(int t, int z, int k);

// Index triples of the gadgets summed by complement_for_nilpotent for a
// shift-block host of size t absorbing z zero blocks.
//   z < k-2:   the single gadget N_{1, t, z+2};
//   z >= k-2:  writing z-k+2 = c(k-1) + d with 0 <= d < k-1:
//              N_{1, t, k}, then N_{i, t+(i-1)(k-1), k} for i = 2..c+1,
//              plus N_{c+2, t+(c+1)(k-1), d+1} when d > 0.
std::vector<GadgetIndex> nilpotent_complement_parts(int t, int z, int k);

// Nilpotent complement for the block B = companion(q) + z zero blocks
// (size (t+z) x (t+z), t = deg q): returns N_B with N_B^k = 0 such that
// B + N_B is invertible.  Capacity: z <= t(k-1).  Both conclusions are
// re-verified before returning.
Matrix complement_for_invertible(const Polynomial& q, int z, int k);

// Nilpotent complement for the block C = (shift block of size t) + z zero
// blocks: returns N_C with N_C^k = 0 such that C + N_C is invertible.
// Capacity: z <= t(k-1) - k.  Both conclusions are re-verified.
Matrix complement_for_nilpotent(int t, int z, int k, const FieldSpec& field);

// Maximum rank of an n x n nilpotent matrix N with N^k = 0: n - ceil(n/k).
int nilpotent_max_rank(int n, int k);

// Whether A = U + N with U invertible and N^k = 0 is possible:
// k * rank(A) >= n.
bool feasible(const Matrix& a, int k);

// One host block together with the number of zero blocks routed to it.
struct HostSlot {
    canonical::BlockSpec block;
    int zeros_assigned;
};

// Result of routing every ZeroOne block to a host: the hosts in assignment
// order, and the permutation of block positions that lists each host
// immediately followed by its assigned zeros (permutation[new] = old index).
struct HostAssignment {
    std::vector<HostSlot> hosts;
    std::vector<int> permutation;
};

// Greedy routing of ZeroOne blocks to hosts.  Hosts are taken as all
// Invertible blocks (input order) then all XPower blocks (input order);
// zeros fill the hosts in that order up to each capacity (t(k-1) for an
// invertible host, t(k-1) - k for a shift host).  Throws
// DistributionImpossibleError when the total capacity falls short, which
// happens exactly when k * rank < n.
HostAssignment distribute_zeros(const std::vector<canonical::BlockSpec>& blocks, int k);

struct Certificate {
    int rank_a;
    int index_n;
    HostAssignment assignment;
};

struct Decomposition {
    Matrix unit;       // U, invertible
    Matrix nilpotent;  // N, with N^k = 0
    int k;
    Certificate certificate;
};

// Decides and constructs A = U + N with det U != 0 and N^k = 0.  Returns
// nullopt exactly when k * rank(A) < n.  On success every invariant
// (sum, invertibility, nilpotence within k, rank(N) <= n - ceil(n/k)) has
// been re-verified; an internal check failure throws
// InternalVerificationError and indicates a bug, never bad input.
std::optional<Decomposition> decompose(const Matrix& a, int k);

}  // namespace unitnil::construct

#endif  // UNITNIL_CONSTRUCT_HPP
