#ifndef UNITNIL_CANONICAL_HPP
#define UNITNIL_CANONICAL_HPP

#include <utility>
#include <vector>

#include "unitnil/matrix.hpp"
#include "unitnil/poly.hpp"

namespace unitnil::canonical {

// Invariant-factor canonical form: the nontrivial invariant factors
// f_1 | f_2 | ... | f_s (monic, each of degree >= 1, degrees summing to n)
// together with an invertible P such that
//     P^{-1} A P = diag(companion(f_1), ..., companion(f_s)).
struct FrobeniusForm {
    std::vector<Polynomial> factors;
    Matrix transform;
};

// Computes the invariant-factor form of a square matrix.  The result is
// re-verified internally (conjugation identity, divisibility chain, degree
// sum); failure of any check throws InternalVerificationError.
FrobeniusForm frobenius_form(const Matrix& a);

// One diagonal block of the refined form.  Three kinds:
//   Invertible  - companion of a monic q with q(0) != 0, deg q >= 1;
//   ZeroOne     - the 1x1 zero block (companion of x);
//   XPower      - the m x m nilpotent shift block, m >= 2 (companion of x^m).
class BlockSpec {
public:
    enum class Kind { Invertible, ZeroOne, XPower };

    static BlockSpec invertible(const Polynomial& q);
    static BlockSpec zero_one(const FieldSpec& field);
    static BlockSpec x_power(const FieldSpec& field, int m);

    Kind kind() const { return kind_; }
    const FieldSpec& field() const { return poly_.field(); }
    // Block dimension.
    int size() const { return poly_.degree(); }
    // The monic polynomial whose companion this block is (x for ZeroOne,
    // x^m for XPower).
    const Polynomial& poly() const { return poly_; }

    Matrix realize() const { return companion(poly_); }

    bool operator==(const BlockSpec& other) const {
        return kind_ == other.kind_ && poly_ == other.poly_;
    }

private:
    BlockSpec(Kind kind, Polynomial poly) : kind_(kind), poly_(std::move(poly)) {}

    Kind kind_;
    Polynomial poly_;
};

// Direct sum of the realizations (an empty list gives the 0x0 matrix).
Matrix realize_blocks(const FieldSpec& field, const std::vector<BlockSpec>& blocks);

// Splits one invariant factor f = x^m * g (with g(0) != 0) into the blocks
// [shift part, invertible part] and returns the invertible Q with
//     Q^{-1} companion(f) Q = realize_blocks(split).
// Either part may be absent (m == 0, or g constant).
std::pair<std::vector<BlockSpec>, Matrix> coprime_split_block(const Polynomial& f);

// Refined canonical form: blocks of the three kinds plus an invertible
// transform with transform^{-1} A transform == realize_blocks(blocks).
struct BlockForm {
    std::vector<BlockSpec> blocks;
    Matrix transform;
};

// Computes the refined form.  Inputs that are already an exact direct sum of
// realized blocks are recognized structurally and returned with the identity
// transform; everything else goes through the invariant-factor form and the
// coprime splitting.  The result is re-verified internally (conjugation,
// block classification, rank accounting); failures throw
// InternalVerificationError.
BlockForm block_form(const Matrix& a);

}  // namespace unitnil::canonical

#endif  // UNITNIL_CANONICAL_HPP
