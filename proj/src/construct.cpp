#include "unitnil/construct.hpp"

#include <string>

namespace unitnil::construct {

using canonical::BlockForm;
using canonical::BlockSpec;

namespace {

void check_gadget_indices(int n, int r, int s, int k) {
    if (!(2 <= k && k <= n && 1 <= r && r < s && s <= n && s + k - 2 <= n)) {
        throw IndexConstraintError(
            "gadget indices violate 2 <= k <= n, 1 <= r < s <= n, s+k-2 <= n: " +
            std::string("(n,r,s,k) = (") + std::to_string(n) + "," + std::to_string(r) +
            "," + std::to_string(s) + "," + std::to_string(k) + ")");
    }
}

// Shift chain of length k in the top-left corner of an n x n matrix.
Matrix corner_chain(int n, int k, const FieldSpec& field) {
    Matrix s(field, n, n);
    Scalar one = Scalar::one(field);
    for (int i = 0; i + 1 < k; ++i) s.set(i + 1, i, one);
    return s;
}

}  // namespace

Matrix special_nilpotent(int n, int r, int s, int k, const FieldSpec& field) {
    check_gadget_indices(n, r, s, k);
    // 0-based positions.
    int rr = r - 1;
    int ss = s - 1;
    Matrix m(field, n, n);
    Scalar one = Scalar::one(field);
    Scalar minus_one = -one;
    m.set(rr, rr, one);
    m.set(ss, rr, one);
    m.set(rr, ss + k - 2, minus_one);
    for (int i = 0; i <= k - 2; ++i) {
        m.set(ss, ss + i, minus_one);
    }
    for (int i = 0; i <= k - 3; ++i) {
        m.set(ss + i + 1, ss + i, one);
    }
    return m;
}

Matrix special_nilpotent_basis(int n, int r, int s, int k, const FieldSpec& field) {
    check_gadget_indices(n, r, s, k);
    int rr = r - 1;
    int ss = s - 1;
    Matrix q(field, n, n);
    Scalar one = Scalar::one(field);
    // col rr = e_0; col ss+i = e_{i+1} - e_0 for i = 0..k-2.
    q.set(0, rr, one);
    for (int i = 0; i <= k - 2; ++i) {
        q.set(i + 1, ss + i, one);
        q.set(0, ss + i, -one);
    }
    // Remaining columns take e_k, e_{k+1}, ... in increasing position order.
    int next = k;
    for (int j = 0; j < n; ++j) {
        if (j == rr || (j >= ss && j <= ss + k - 2)) continue;
        q.set(next, j, one);
        ++next;
    }
    return q;
}

std::vector<GadgetIndex> invertible_complement_parts(int t, int z, int k) {
    std::vector<GadgetIndex> parts;
    if (z == 0) return parts;
    int c = z / (k - 1);
    int d = z % (k - 1);
    for (int i = 1; i <= c; ++i) {
        parts.push_back({i, t + 1 + (i - 1) * (k - 1), k});
    }
    if (d > 0) {
        parts.push_back({c + 1, t + 1 + c * (k - 1), d + 1});
    }
    return parts;
}

std::vector<GadgetIndex> nilpotent_complement_parts(int t, int z, int k) {
    std::vector<GadgetIndex> parts;
    if (z < k - 2) {
        parts.push_back({1, t, z + 2});
        return parts;
    }
    int w = z - k + 2;
    int c = w / (k - 1);
    int d = w % (k - 1);
    parts.push_back({1, t, k});
    for (int i = 2; i <= c + 1; ++i) {
        parts.push_back({i, t + (i - 1) * (k - 1), k});
    }
    if (d > 0) {
        parts.push_back({c + 2, t + (c + 1) * (k - 1), d + 1});
    }
    return parts;
}

namespace {

Matrix sum_gadgets(int n, const std::vector<GadgetIndex>& parts, const FieldSpec& field) {
    Matrix total(field, n, n);
    for (const GadgetIndex& g : parts) {
        total = total + special_nilpotent(n, g.r, g.s, g.k, field);
    }
    return total;
}

void verify_complement(const Matrix& host, const Matrix& comp, int k, const char* what) {
    auto idx = nilpotency_index(comp, std::max(k, 1));
    if (!idx.has_value()) {
        throw InternalVerificationError(std::string(what) +
                                        ": complement is not nilpotent within k");
    }
    if (mat_det(host + comp).is_zero()) {
        throw InternalVerificationError(std::string(what) +
                                        ": host plus complement is singular");
    }
}

}  // namespace

Matrix complement_for_invertible(const Polynomial& q, int z, int k) {
    if (q.is_zero() || q.degree() < 1) {
        throw InvalidArgumentError("invertible host needs a polynomial of degree >= 1");
    }
    if (!q.is_monic()) {
        throw NotMonicError("invertible host polynomial must be monic");
    }
    if (q.coeff(0).is_zero()) {
        throw InvalidArgumentError("invertible host polynomial needs q(0) != 0");
    }
    if (z < 0 || k < 1) {
        throw InvalidArgumentError("complement needs z >= 0 and k >= 1");
    }
    int t = q.degree();
    if (static_cast<long long>(z) > static_cast<long long>(t) * (k - 1)) {
        throw CapacityExceededError("invertible host of size " + std::to_string(t) +
                                    " cannot absorb " + std::to_string(z) +
                                    " zero blocks at k = " + std::to_string(k));
    }
    const FieldSpec& field = q.field();
    int n = t + z;
    Matrix comp = sum_gadgets(n, invertible_complement_parts(t, z, k), field);

    std::vector<Matrix> host_blocks{companion(q)};
    if (z > 0) host_blocks.push_back(Matrix(field, z, z));
    verify_complement(block_diag(host_blocks), comp, k, "complement_for_invertible");
    return comp;
}

Matrix complement_for_nilpotent(int t, int z, int k, const FieldSpec& field) {
    if (t < 2) {
        throw InvalidArgumentError("shift host needs size t >= 2");
    }
    if (z < 0 || k < 2) {
        throw InvalidArgumentError("complement needs z >= 0 and k >= 2");
    }
    if (static_cast<long long>(z) > static_cast<long long>(t) * (k - 1) - k) {
        throw CapacityExceededError("shift host of size " + std::to_string(t) +
                                    " cannot absorb " + std::to_string(z) +
                                    " zero blocks at k = " + std::to_string(k));
    }
    int n = t + z;
    Matrix comp = sum_gadgets(n, nilpotent_complement_parts(t, z, k), field);

    std::vector<Matrix> host_blocks{corner_chain(t, t, field)};
    if (z > 0) host_blocks.push_back(Matrix(field, z, z));
    verify_complement(block_diag(host_blocks), comp, k, "complement_for_nilpotent");
    return comp;
}

int nilpotent_max_rank(int n, int k) {
    if (n < 1 || k < 1) {
        throw InvalidArgumentError("nilpotent_max_rank needs n >= 1, k >= 1");
    }
    return n - (n + k - 1) / k;
}

bool feasible(const Matrix& a, int k) {
    if (!a.is_square()) {
        throw NotSquareError("feasibility requires a square matrix");
    }
    if (k < 1) {
        throw InvalidArgumentError("feasibility requires k >= 1");
    }
    return static_cast<long long>(k) * mat_rank(a) >= a.rows();
}

HostAssignment distribute_zeros(const std::vector<BlockSpec>& blocks, int k) {
    if (k < 2) {
        throw InvalidArgumentError("distribution requires k >= 2");
    }
    std::vector<int> host_order;
    std::vector<int> zero_order;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].kind() == BlockSpec::Kind::Invertible) {
            host_order.push_back(static_cast<int>(i));
        } else if (blocks[i].kind() == BlockSpec::Kind::ZeroOne) {
            zero_order.push_back(static_cast<int>(i));
        }
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].kind() == BlockSpec::Kind::XPower) {
            host_order.push_back(static_cast<int>(i));
        }
    }

    auto capacity_of = [&](const BlockSpec& b) -> long long {
        long long t = b.size();
        if (b.kind() == BlockSpec::Kind::Invertible) return t * (k - 1);
        return t * (k - 1) - k;
    };

    long long total_capacity = 0;
    for (int idx : host_order) total_capacity += capacity_of(blocks[idx]);
    if (total_capacity < static_cast<long long>(zero_order.size())) {
        throw DistributionImpossibleError(
            "only " + std::to_string(total_capacity) + " zero blocks fit but " +
            std::to_string(zero_order.size()) + " are present (k = " +
            std::to_string(k) + ")");
    }

    HostAssignment out;
    std::size_t next_zero = 0;
    for (int idx : host_order) {
        long long cap = capacity_of(blocks[idx]);
        int take = static_cast<int>(
            std::min<long long>(cap, static_cast<long long>(zero_order.size() - next_zero)));
        out.hosts.push_back(HostSlot{blocks[idx], take});
        out.permutation.push_back(idx);
        for (int j = 0; j < take; ++j) {
            out.permutation.push_back(zero_order[next_zero + j]);
        }
        next_zero += take;
    }
    if (next_zero != zero_order.size() || out.permutation.size() != blocks.size()) {
        throw InternalVerificationError("zero-block routing left blocks unassigned");
    }
    return out;
}

std::optional<Decomposition> decompose(const Matrix& a, int k) {
    if (!a.is_square()) {
        throw NotSquareError("decomposition requires a square matrix");
    }
    if (k < 1) {
        throw InvalidArgumentError("decomposition requires k >= 1");
    }
    const FieldSpec& field = a.field();
    int n = a.rows();
    int rank_a = mat_rank(a);
    if (static_cast<long long>(k) * rank_a < n) {
        return std::nullopt;
    }

    if (k == 1 || rank_a == n) {
        // A itself is the unit (k = 1 forces N = 0; feasibility already
        // implies rank n here).
        if (mat_det(a).is_zero()) {
            throw InternalVerificationError("full-rank matrix with zero determinant");
        }
        return Decomposition{a, Matrix(field, n, n), k,
                             Certificate{rank_a, 1, HostAssignment{}}};
    }

    int kk = std::min(k, n);  // N^n = 0 is all one can use inside M_n
    BlockForm form = canonical::block_form(a);

    HostAssignment assignment;
    try {
        assignment = distribute_zeros(form.blocks, kk);
    } catch (const DistributionImpossibleError&) {
        // Capacity shortfall is equivalent to k * rank < n, which was
        // excluded above.
        throw InternalVerificationError(
            "zero-block routing failed although the rank bound holds");
    }

    // Coordinate permutation induced by reordering the blocks.
    std::vector<int> block_start(form.blocks.size(), 0);
    int acc = 0;
    for (std::size_t i = 0; i < form.blocks.size(); ++i) {
        block_start[i] = acc;
        acc += form.blocks[i].size();
    }
    std::vector<int> sigma;
    sigma.reserve(n);
    for (int old_idx : assignment.permutation) {
        for (int c = 0; c < form.blocks[static_cast<std::size_t>(old_idx)].size(); ++c) {
            sigma.push_back(block_start[static_cast<std::size_t>(old_idx)] + c);
        }
    }
    Matrix pi = permutation_matrix(field, sigma);
    Matrix total = form.transform * pi;

    // Complements, embedded at the host windows of the permuted form.
    Matrix embedded(field, n, n);
    int offset = 0;
    for (const HostSlot& slot : assignment.hosts) {
        int t = slot.block.size();
        int z = slot.zeros_assigned;
        Matrix comp = slot.block.kind() == BlockSpec::Kind::Invertible
                          ? complement_for_invertible(slot.block.poly(), z, kk)
                          : complement_for_nilpotent(t, z, kk, field);
        for (int i = 0; i < t + z; ++i) {
            for (int j = 0; j < t + z; ++j) {
                if (!comp.at(i, j).is_zero()) {
                    embedded.set(offset + i, offset + j, comp.at(i, j));
                }
            }
        }
        offset += t + z;
    }
    if (offset != n) {
        throw InternalVerificationError("host windows do not cover the matrix");
    }

    Matrix nilp = total * (-embedded) * mat_inverse(total);
    Matrix unit = a - nilp;

    // Mandatory re-verification of every claimed invariant.
    if (unit + nilp != a) {
        throw InternalVerificationError("decomposition does not sum to the input");
    }
    if (mat_det(unit).is_zero()) {
        throw InternalVerificationError("constructed unit part is singular");
    }
    auto index = nilpotency_index(nilp, kk);
    if (!index.has_value()) {
        throw InternalVerificationError("constructed nilpotent part exceeds index k");
    }
    if (mat_rank(nilp) > nilpotent_max_rank(n, k)) {
        throw InternalVerificationError("constructed nilpotent part exceeds the rank bound");
    }

    return Decomposition{std::move(unit), std::move(nilp), k,
                         Certificate{rank_a, *index, std::move(assignment)}};
}

}  // namespace unitnil::construct
