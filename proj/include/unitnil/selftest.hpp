#ifndef UNITNIL_SELFTEST_HPP
#define UNITNIL_SELFTEST_HPP

#include <ostream>

#include "unitnil/matrix.hpp"

namespace unitnil::selftest {

// Pinned 9x9 reference matrices.  These tables are frozen by hand from the
// defining formulas and are deliberately NOT produced by the construction
// code, so they can catch transcription slips in either direction.

// special_nilpotent(9, 1, 3, 5).
Matrix pinned_gadget_1_3_5(const FieldSpec& field);
// special_nilpotent(9, 2, 7, 4).
Matrix pinned_gadget_2_7_4(const FieldSpec& field);
// special_nilpotent(9, 1, 4, 4).
Matrix pinned_gadget_1_4_4(const FieldSpec& field);
// special_nilpotent(9, 1, 2, 5).
Matrix pinned_gadget_1_2_5(const FieldSpec& field);

// B = companion(x^2 - x - 1) + seven 1x1 zero blocks.
Matrix pinned_invertible_host(const FieldSpec& field);
// B plus its complement for k = 5 (invertible).
Matrix pinned_invertible_host_sum(const FieldSpec& field);
// C = 4x4 shift block + five 1x1 zero blocks.
Matrix pinned_nilpotent_host(const FieldSpec& field);
// C plus its complement for k = 4 (invertible).
Matrix pinned_nilpotent_host_sum(const FieldSpec& field);

// Replays the pinned constructions entrywise over Q and F_11, decomposes both
// host matrices end to end, and sweeps the gadget similarity identity for all
// valid (n, r, s, k) with n <= max_sweep_n.  Prints one line per check group;
// returns the number of failures (0 = all good).
int run(std::ostream& out, int max_sweep_n = 8);

}  // namespace unitnil::selftest

#endif  // UNITNIL_SELFTEST_HPP
