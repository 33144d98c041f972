#include <doctest.h>

#include <cstdint>
#include <vector>

#include "unitnil/construct.hpp"
#include "unitnil/errors.hpp"
#include "unitnil/matrix.hpp"
#include "unitnil/selftest.hpp"
#include "unitnil/verify.hpp"

using namespace unitnil;
using verify::OracleBudget;
using verify::OracleOutcome;

namespace {

Matrix nth_matrix(const FieldSpec& field, int n, std::uint64_t idx) {
    const std::uint64_t p = field.modulus();
    Matrix m(field, n, n);
    for (int e = n * n - 1; e >= 0; --e) {
        m.set(e / n, e % n, Scalar::of_int(field, static_cast<long long>(idx % p)));
        idx /= p;
    }
    return m;
}

std::uint64_t space_size(const FieldSpec& field, int n) {
    std::uint64_t total = 1;
    for (int e = 0; e < n * n; ++e) total *= field.modulus();
    return total;
}

bool passes_generic(const Matrix& a, const Matrix& cand, int k) {
    const int k_eff = std::min(k, std::max(1, a.rows()));
    return mat_pow(cand, k_eff).is_zero() && !mat_det(a - cand).is_zero();
}

void check_same_outcome(const OracleOutcome& lhs, const OracleOutcome& rhs) {
    CHECK(lhs.feasible == rhs.feasible);
    CHECK(lhs.witness_index == rhs.witness_index);
    CHECK(lhs.candidates == rhs.candidates);
    CHECK(lhs.witness.has_value() == rhs.witness.has_value());
    if (lhs.witness && rhs.witness) CHECK(*lhs.witness == *rhs.witness);
}

}  // namespace

TEST_SUITE("verify") {
    TEST_CASE("verify_decomposition accepts the identity split") {
        const auto q = FieldSpec::rationals();
        const Matrix a = Matrix::identity(q, 2);
        const auto report = verify::verify_decomposition(a, a, Matrix(q, 2, 2), 1);
        CHECK(report.sum_ok);
        CHECK(report.unit_ok);
        CHECK(report.nilpotent_ok);
        CHECK(report.overall());
        REQUIRE(report.index_of_n.has_value());
        CHECK(*report.index_of_n == 1);
    }

    TEST_CASE("verify_decomposition accepts the 2x2 worked split") {
        const auto q = FieldSpec::rationals();
        const Matrix a = Matrix::from_ints(q, {{0, 0}, {1, 0}});
        const Matrix u = Matrix::from_ints(q, {{1, -1}, {2, -1}});
        const Matrix n = Matrix::from_ints(q, {{-1, 1}, {-1, 1}});
        const auto report = verify::verify_decomposition(a, u, n, 2);
        CHECK(report.overall());
        REQUIRE(report.index_of_n.has_value());
        CHECK(*report.index_of_n == 2);
    }

    TEST_CASE("verify_decomposition accepts constructed splits on the 9x9 hosts") {
        for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(11)}) {
            const Matrix b = selftest::pinned_invertible_host(field);
            const auto dec = construct::decompose(b, 5);
            REQUIRE(dec.has_value());
            const auto report = verify::verify_decomposition(b, dec->unit, dec->nilpotent, 5);
            CHECK(report.overall());
            REQUIRE(report.index_of_n.has_value());
            CHECK(*report.index_of_n == 5);

            const Matrix c = selftest::pinned_nilpotent_host(field);
            const auto dec2 = construct::decompose(c, 4);
            REQUIRE(dec2.has_value());
            const auto report2 = verify::verify_decomposition(c, dec2->unit, dec2->nilpotent, 4);
            CHECK(report2.overall());
        }
    }

    TEST_CASE("verify_decomposition flags each broken property") {
        const auto q = FieldSpec::rationals();
        const Matrix b = selftest::pinned_invertible_host(q);
        const auto dec = construct::decompose(b, 5);
        REQUIRE(dec.has_value());
        const Matrix e11 = Matrix::from_ints(q, std::vector<std::vector<long long>>(
                                                    9, std::vector<long long>(9, 0)));

        SUBCASE("sum mismatch") {
            const auto report = verify::verify_decomposition(b, dec->unit, Matrix(q, 9, 9), 5);
            CHECK_FALSE(report.sum_ok);
            CHECK(report.nilpotent_ok);  // the zero matrix is still nilpotent
            CHECK_FALSE(report.overall());
        }
        SUBCASE("singular unit part") {
            const auto report =
                verify::verify_decomposition(dec->nilpotent, Matrix(q, 9, 9), dec->nilpotent, 5);
            CHECK_FALSE(report.unit_ok);
            CHECK_FALSE(report.overall());
        }
        SUBCASE("nilpotency spoiled while the sum is preserved") {
            Matrix bump = e11;
            bump.set(0, 0, Scalar::one(q));
            const auto report =
                verify::verify_decomposition(b, dec->unit - bump, dec->nilpotent + bump, 5);
            CHECK(report.sum_ok);
            CHECK_FALSE(report.nilpotent_ok);
            CHECK_FALSE(report.index_of_n.has_value());
            CHECK_FALSE(report.overall());
        }
        SUBCASE("index bound is the given k, not the matrix size") {
            // dec->nilpotent has index 5, so it fails the k = 4 check.
            const auto report = verify::verify_decomposition(b, dec->unit, dec->nilpotent, 4);
            CHECK(report.sum_ok);
            CHECK_FALSE(report.nilpotent_ok);
        }
    }

    TEST_CASE("verify_decomposition validates its inputs") {
        const auto q = FieldSpec::rationals();
        const auto f2 = FieldSpec::prime(2);
        const Matrix a = Matrix::identity(q, 2);
        CHECK_THROWS_AS(verify::verify_decomposition(a, a, Matrix(f2, 2, 2), 1),
                        MixedFieldsError);
        CHECK_THROWS_AS(verify::verify_decomposition(a, a, Matrix(q, 3, 3), 1),
                        DimensionMismatchError);
        CHECK_THROWS_AS(verify::verify_decomposition(Matrix(q, 2, 3), Matrix(q, 2, 3),
                                                     Matrix(q, 2, 3), 1),
                        NotSquareError);
        CHECK_THROWS_AS(verify::verify_decomposition(a, a, Matrix(q, 2, 2), 0),
                        InvalidArgumentError);
    }

    TEST_CASE("oracle rejects a rank-deficient 3x3 instance") {
        const auto f2 = FieldSpec::prime(2);
        const Matrix a = Matrix::from_ints(f2, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
        const auto out = verify::exhaustive_feasible(a, 2);
        CHECK_FALSE(out.feasible);
        CHECK_FALSE(out.witness.has_value());
        CHECK(out.candidates == 512);
        CHECK(construct::feasible(a, 2) == false);
    }

    TEST_CASE("oracle returns the zero witness on invertible input") {
        const auto f2 = FieldSpec::prime(2);
        const auto out = verify::exhaustive_feasible(Matrix::identity(f2, 3), 1);
        REQUIRE(out.feasible);
        CHECK(out.witness_index == 0);
        REQUIRE(out.witness.has_value());
        CHECK(out.witness->is_zero());
    }

    TEST_CASE("oracle finds a witness for the rank-2 shift") {
        const auto f2 = FieldSpec::prime(2);
        const Matrix a = Matrix::from_ints(f2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
        const auto out = verify::exhaustive_feasible(a, 2);
        REQUIRE(out.feasible);
        REQUIRE(out.witness.has_value());
        CHECK(passes_generic(a, *out.witness, 2));
        // Lexicographically first: nothing below the reported index passes.
        for (std::uint64_t idx = 0; idx < out.witness_index; ++idx) {
            CHECK_FALSE(passes_generic(a, nth_matrix(f2, 3, idx), 2));
        }
        CHECK(*out.witness == nth_matrix(f2, 3, out.witness_index));
    }

    TEST_CASE("oracle enforces budget, field, and argument contracts") {
        const auto f101 = FieldSpec::prime(101);
        CHECK_THROWS_AS(verify::exhaustive_feasible(Matrix::identity(f101, 3), 2),
                        BudgetExceededError);
        const auto f2 = FieldSpec::prime(2);
        CHECK_THROWS_AS(verify::exhaustive_feasible(Matrix::identity(f2, 2), 2, {8}),
                        BudgetExceededError);
        CHECK_THROWS_AS(verify::exhaustive_feasible(Matrix::identity(FieldSpec::rationals(), 2), 2),
                        RationalsUnsupportedError);
        CHECK_THROWS_AS(verify::exhaustive_feasible(Matrix(f2, 2, 3), 2), NotSquareError);
        CHECK_THROWS_AS(verify::exhaustive_feasible(Matrix::identity(f2, 2), 0),
                        InvalidArgumentError);
        CHECK_THROWS_AS(verify::exhaustive_feasible(Matrix::identity(f2, 2), 2, {}, 0),
                        InvalidArgumentError);
    }

    TEST_CASE("fast scan agrees with the reference on every 2x2 instance") {
        for (const auto& field : {FieldSpec::prime(2), FieldSpec::prime(3)}) {
            const std::uint64_t instances = space_size(field, 2);
            for (std::uint64_t ai = 0; ai < instances; ++ai) {
                const Matrix a = nth_matrix(field, 2, ai);
                for (int k : {1, 2}) {
                    check_same_outcome(verify::exhaustive_feasible(a, k),
                                       verify::exhaustive_feasible_reference(a, k));
                }
            }
        }
    }

    TEST_CASE("fast scan agrees with the reference on sampled 3x3 instances") {
        const auto f2 = FieldSpec::prime(2);
        for (std::uint64_t step = 0; step < 12; ++step) {
            const Matrix a = nth_matrix(f2, 3, (step * 37 + 5) % 512);
            check_same_outcome(verify::exhaustive_feasible(a, 2),
                               verify::exhaustive_feasible_reference(a, 2));
        }
    }

    TEST_CASE("oracle outcome matches the rank criterion and the constructor") {
        const auto f2 = FieldSpec::prime(2);
        for (std::uint64_t ai = 0; ai < 16; ++ai) {
            const Matrix a = nth_matrix(f2, 2, ai);
            for (int k : {1, 2}) {
                const auto out = verify::exhaustive_feasible(a, k);
                CHECK(out.feasible == construct::feasible(a, k));
                const auto dec = construct::decompose(a, k);
                CHECK(out.feasible == dec.has_value());
                if (dec) {
                    CHECK(verify::verify_decomposition(a, dec->unit, dec->nilpotent, k).overall());
                }
            }
        }
    }

    TEST_CASE("scan result is independent of the job count") {
        const auto f2 = FieldSpec::prime(2);
        const auto f3 = FieldSpec::prime(3);
        const std::vector<Matrix> cases = {
            Matrix::from_ints(f2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}),
            Matrix::from_ints(f2, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
            Matrix::identity(f3, 2),
            verify::random_matrix_of_rank(3, 2, f3, 7),
        };
        for (const auto& a : cases) {
            const auto base = verify::exhaustive_feasible(a, 2, {}, 1);
            for (int jobs : {2, 4}) {
                check_same_outcome(base, verify::exhaustive_feasible(a, 2, {}, jobs));
            }
        }
    }

    TEST_CASE("oracle handles the empty matrix") {
        const auto f2 = FieldSpec::prime(2);
        const auto out = verify::exhaustive_feasible(Matrix(f2, 0, 0), 1);
        CHECK(out.feasible);
        CHECK(out.candidates == 1);
        REQUIRE(out.witness.has_value());
        CHECK(out.witness->rows() == 0);
    }

    TEST_CASE("random_matrix_of_rank hits the requested rank exactly") {
        const std::vector<FieldSpec> fields = {FieldSpec::prime(2), FieldSpec::prime(3),
                                               FieldSpec::prime(7), FieldSpec::rationals()};
        for (const auto& field : fields) {
            for (int n = 0; n <= 12; ++n) {
                for (int r = 0; r <= n; ++r) {
                    for (std::uint64_t seed = 0; seed < 10; ++seed) {
                        const Matrix m = verify::random_matrix_of_rank(n, r, field, seed);
                        CHECK(m.rows() == n);
                        CHECK(m.cols() == n);
                        CHECK(mat_rank(m) == r);
                    }
                }
            }
        }
    }

    TEST_CASE("random_matrix_of_rank is deterministic in the seed") {
        const auto f7 = FieldSpec::prime(7);
        CHECK(verify::random_matrix_of_rank(5, 3, f7, 42) ==
              verify::random_matrix_of_rank(5, 3, f7, 42));
        CHECK_FALSE(verify::random_matrix_of_rank(5, 3, f7, 42) ==
                    verify::random_matrix_of_rank(5, 3, f7, 43));
        CHECK(verify::random_matrix_of_rank(4, 0, f7, 9).is_zero());
        CHECK_THROWS_AS(verify::random_matrix_of_rank(3, 4, f7, 0), InvalidArgumentError);
        CHECK_THROWS_AS(verify::random_matrix_of_rank(-1, 0, f7, 0), InvalidArgumentError);
    }
}
