#include "unitnil/selftest.hpp"

#include <vector>

#include "unitnil/construct.hpp"
#include "unitnil/poly.hpp"

namespace unitnil::selftest {

namespace {

using Table = std::vector<std::vector<long long>>;

const Table kGadget_1_3_5 = {
    {1, 0, 0, 0, 0, -1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, -1, -1, -1, -1, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
};

const Table kGadget_2_7_4 = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, -1, -1, -1},
    {0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0},
};

const Table kGadget_1_4_4 = {
    {1, 0, 0, 0, 0, -1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, -1, -1, -1, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
};

const Table kGadget_1_2_5 = {
    {1, 0, 0, 0, -1, 0, 0, 0, 0},
    {1, -1, -1, -1, -1, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
};

const Table kInvertibleHost = {
    {0, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
};

const Table kInvertibleHostSum = {
    {1, 1, 0, 0, 0, -1, 0, 0, 0},
    {1, 2, 0, 0, 0, 0, 0, 0, -1},
    {1, 0, -1, -1, -1, -1, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, -1, -1, -1},
    {0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0},
};

const Table kNilpotentHost = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
};

const Table kNilpotentHostSum = {
    {1, 0, 0, 0, 0, -1, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, -1},
    {0, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 1, -1, -1, -1, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, -1, -1, -1},
    {0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0},
};

Matrix from_table(const FieldSpec& field, const Table& t) {
    return Matrix::from_ints(field, t);
}

class Reporter {
public:
    Reporter(std::ostream& out) : out_(out) {}

    void check(const std::string& label, bool ok) {
        out_ << "  " << label << " ... " << (ok ? "ok" : "FAIL") << '\n';
        if (!ok) ++failures_;
    }

    int failures() const { return failures_; }

private:
    std::ostream& out_;
    int failures_ = 0;
};

}  // namespace

Matrix pinned_gadget_1_3_5(const FieldSpec& field) { return from_table(field, kGadget_1_3_5); }
Matrix pinned_gadget_2_7_4(const FieldSpec& field) { return from_table(field, kGadget_2_7_4); }
Matrix pinned_gadget_1_4_4(const FieldSpec& field) { return from_table(field, kGadget_1_4_4); }
Matrix pinned_gadget_1_2_5(const FieldSpec& field) { return from_table(field, kGadget_1_2_5); }
Matrix pinned_invertible_host(const FieldSpec& field) { return from_table(field, kInvertibleHost); }
Matrix pinned_invertible_host_sum(const FieldSpec& field) {
    return from_table(field, kInvertibleHostSum);
}
Matrix pinned_nilpotent_host(const FieldSpec& field) { return from_table(field, kNilpotentHost); }
Matrix pinned_nilpotent_host_sum(const FieldSpec& field) {
    return from_table(field, kNilpotentHostSum);
}

int run(std::ostream& out, int max_sweep_n) {
    using namespace unitnil::construct;
    Reporter rep(out);

    for (bool rational : {true, false}) {
        FieldSpec field = rational ? FieldSpec::rationals() : FieldSpec::prime(11);
        std::string tag = rational ? " (Q)" : " (F_11)";

        rep.check("gadget (9,1,3,5) matches pinned table" + tag,
                  special_nilpotent(9, 1, 3, 5, field) == pinned_gadget_1_3_5(field));
        rep.check("gadget (9,2,7,4) matches pinned table" + tag,
                  special_nilpotent(9, 2, 7, 4, field) == pinned_gadget_2_7_4(field));
        rep.check("gadget (9,1,4,4) matches pinned table" + tag,
                  special_nilpotent(9, 1, 4, 4, field) == pinned_gadget_1_4_4(field));

        Matrix b = pinned_invertible_host(field);
        Matrix nb = complement_for_invertible(
            Polynomial::from_ints(field, {-1, -1, 1}), 7, 5);
        rep.check("invertible-host complement is the pinned gadget sum" + tag,
                  nb == pinned_gadget_1_3_5(field) + pinned_gadget_2_7_4(field));
        rep.check("invertible-host sum matches pinned table" + tag,
                  b + nb == pinned_invertible_host_sum(field));
        rep.check("invertible-host sum is invertible" + tag,
                  !mat_det(b + nb).is_zero());
        auto db = decompose(b, 5);
        rep.check("decompose reproduces the invertible-host complement" + tag,
                  db.has_value() && db->nilpotent == -nb && db->unit == b + nb);

        Matrix c = pinned_nilpotent_host(field);
        Matrix nc = complement_for_nilpotent(4, 5, 4, field);
        rep.check("shift-host complement is the pinned gadget sum" + tag,
                  nc == pinned_gadget_1_4_4(field) + pinned_gadget_2_7_4(field));
        rep.check("shift-host sum matches pinned table" + tag,
                  c + nc == pinned_nilpotent_host_sum(field));
        rep.check("shift-host sum is invertible" + tag,
                  !mat_det(c + nc).is_zero());
        auto dc = decompose(c, 4);
        rep.check("decompose reproduces the shift-host complement" + tag,
                  dc.has_value() && dc->nilpotent == -nc && dc->unit == c + nc);

        Matrix chain(field, 9, 9);
        for (int i = 0; i + 1 < 5; ++i) chain.set(i + 1, i, Scalar::one(field));
        Matrix qb = special_nilpotent_basis(9, 1, 2, 5, field);
        rep.check("basis conjugation reproduces gadget (9,1,2,5)" + tag,
                  mat_conjugate(chain, qb) == pinned_gadget_1_2_5(field));
    }

    // Similarity sweep: every valid gadget has rank k-1, index exactly k, and
    // is the conjugate of the corner chain by the pinned basis matrix.
    {
        FieldSpec field = FieldSpec::rationals();
        bool ok = true;
        int tuples = 0;
        for (int n = 2; n <= max_sweep_n && ok; ++n) {
            for (int k = 2; k <= n && ok; ++k) {
                for (int r = 1; r <= n && ok; ++r) {
                    for (int s = r + 1; s + k - 2 <= n && ok; ++s) {
                        ++tuples;
                        Matrix g = special_nilpotent(n, r, s, k, field);
                        Matrix q = special_nilpotent_basis(n, r, s, k, field);
                        Matrix chain(field, n, n);
                        for (int i = 0; i + 1 < k; ++i) {
                            chain.set(i + 1, i, Scalar::one(field));
                        }
                        if (mat_rank(g) != k - 1) ok = false;
                        if (nilpotency_index(g, k) != k) ok = false;
                        if (mat_conjugate(chain, q) != g) ok = false;
                    }
                }
            }
        }
        rep.check("similarity sweep over " + std::to_string(tuples) +
                      " gadgets up to n = " + std::to_string(max_sweep_n),
                  ok && tuples > 0);
    }

    return rep.failures();
}

}  // namespace unitnil::selftest
