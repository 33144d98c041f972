// Acceptance harness: each criterion prints one [PASS]/[FAIL] line with its
// elapsed time; a stated time budget is part of the criterion.  Run all, or
// a single one with --only N.  Exit code 0 iff every executed criterion
// passed.
#include <chrono>
#include <cstdint>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "unitnil/canonical.hpp"
#include "unitnil/construct.hpp"
#include "unitnil/errors.hpp"
#include "unitnil/matrix.hpp"
#include "unitnil/poly.hpp"
#include "unitnil/selftest.hpp"
#include "unitnil/verify.hpp"

using namespace unitnil;

namespace {

struct Checker {
    int failures = 0;
    std::vector<std::string> messages;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failures;
        if (messages.size() < 8) messages.push_back(what);
    }
};

// The n-th matrix in lexicographic entry order over F_p (row-major digits,
// entry (0,0) most significant) -- the same order the oracle scans.
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

// Shift chain of length k in the top-left corner of an n x n matrix.
Matrix corner_chain(const FieldSpec& field, int n, int k) {
    Matrix m(field, n, n);
    for (int i = 0; i + 1 < k; ++i) m.set(i + 1, i, Scalar::one(field));
    return m;
}

std::string fnum(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

// ---- criterion 1 ---------------------------------------------------------
// B = companion(x^2 - x - 1) + 7 zero blocks in M_9, k = 5: the constructed
// complement equals the hand-pinned tables for the gadget sum
// N_{1,3,5} + N_{2,7,4} entrywise, and B plus the complement is invertible.
// Over Q and F_11, exact.
void criterion1(Checker& c) {
    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(11)}) {
        const std::string tag = " (" + field.str() + ")";
        const Matrix b = selftest::pinned_invertible_host(field);
        const Matrix expected =
            selftest::pinned_gadget_1_3_5(field) + selftest::pinned_gadget_2_7_4(field);
        const auto dec = construct::decompose(b, 5);
        c.expect(dec.has_value(), "decompose(B, 5) must succeed" + tag);
        if (!dec) continue;
        const Matrix complement = -dec->nilpotent;
        c.expect(complement == expected, "complement != pinned N_{1,3,5} + N_{2,7,4}" + tag);
        c.expect(b + complement == selftest::pinned_invertible_host_sum(field),
                 "B + complement != pinned sum table" + tag);
        c.expect(!mat_det(b + complement).is_zero(), "B + complement is singular" + tag);
        c.expect(mat_pow(complement, 5).is_zero(), "complement^5 != 0" + tag);
        c.expect(dec->unit == b + complement, "U != B + complement" + tag);
    }
}

// ---- criterion 2 ---------------------------------------------------------
// C = 4x4 nilpotent shift block + 5 zero blocks in M_9, k = 4: complement
// equals the pinned N_{1,4,4} + N_{2,7,4}; C plus the complement invertible.
void criterion2(Checker& c) {
    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(11)}) {
        const std::string tag = " (" + field.str() + ")";
        const Matrix host = selftest::pinned_nilpotent_host(field);
        c.expect(host == corner_chain(field, 9, 4), "pinned host is not shift(4) + zeros" + tag);
        const Matrix expected =
            selftest::pinned_gadget_1_4_4(field) + selftest::pinned_gadget_2_7_4(field);
        const auto dec = construct::decompose(host, 4);
        c.expect(dec.has_value(), "decompose(C, 4) must succeed" + tag);
        if (!dec) continue;
        const Matrix complement = -dec->nilpotent;
        c.expect(complement == expected, "complement != pinned N_{1,4,4} + N_{2,7,4}" + tag);
        c.expect(host + complement == selftest::pinned_nilpotent_host_sum(field),
                 "C + complement != pinned sum table" + tag);
        c.expect(!mat_det(host + complement).is_zero(), "C + complement is singular" + tag);
        c.expect(mat_pow(complement, 4).is_zero(), "complement^4 != 0" + tag);
    }
}

// ---- criterion 3 ---------------------------------------------------------
// For every A in M_2(F_2), M_3(F_2), M_2(F_3) and every k in 1..n:
// decompose succeeds <=> k * rank(A) >= n <=> the exhaustive oracle finds a
// witness; every success passes the verifier.
void criterion3(Checker& c) {
    const struct {
        std::uint64_t p;
        int n;
    } spaces[] = {{2, 2}, {2, 3}, {3, 2}};
    for (const auto& sp : spaces) {
        const auto field = FieldSpec::prime(sp.p);
        const std::uint64_t total = space_size(field, sp.n);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const Matrix a = nth_matrix(field, sp.n, idx);
            const int rank = mat_rank(a);
            for (int k = 1; k <= sp.n; ++k) {
                const std::string tag = "A#" + std::to_string(idx) + " in M_" +
                                        std::to_string(sp.n) + "(F_" + std::to_string(sp.p) +
                                        "), k=" + std::to_string(k);
                const bool thm = static_cast<long long>(k) * rank >= sp.n;
                const auto dec = construct::decompose(a, k);
                c.expect(dec.has_value() == thm, "decompose verdict != rank criterion: " + tag);
                c.expect(construct::feasible(a, k) == thm, "feasible() != rank criterion: " + tag);
                const auto oracle = verify::exhaustive_feasible(a, k);
                c.expect(oracle.feasible == thm, "oracle verdict != rank criterion: " + tag);
                if (dec) {
                    c.expect(
                        verify::verify_decomposition(a, dec->unit, dec->nilpotent, k).overall(),
                        "constructed split fails the verifier: " + tag);
                }
            }
        }
    }
}

// ---- criterion 4 ---------------------------------------------------------
// 50 seeded random A in M_4(F_2), k in {2,3,4}: the constructor's verdict
// matches the 65536-candidate oracle.
void criterion4(Checker& c) {
    const auto f2 = FieldSpec::prime(2);
    for (int i = 0; i < 50; ++i) {
        const int rank = i % 5;  // 0..4, all ranks exercised
        const Matrix a = verify::random_matrix_of_rank(4, rank, f2, 1000 + i);
        for (int k : {2, 3, 4}) {
            const std::string tag =
                "seed " + std::to_string(1000 + i) + ", rank " + std::to_string(rank) +
                ", k=" + std::to_string(k);
            const auto dec = construct::decompose(a, k);
            const auto oracle = verify::exhaustive_feasible(a, k);
            c.expect(oracle.candidates == 65536, "oracle candidate count: " + tag);
            c.expect(dec.has_value() == oracle.feasible,
                     "constructor and oracle disagree: " + tag);
            if (dec) {
                c.expect(verify::verify_decomposition(a, dec->unit, dec->nilpotent, k).overall(),
                         "constructed split fails the verifier: " + tag);
            }
        }
    }
}

// ---- criterion 5 ---------------------------------------------------------
// 200 seeded instances over F_p, p in {2,3,5,7,101}, n in 2..12, target rank
// r in ceil(n/k)..n: decompose returns (U, N) with A = U + N, det U != 0,
// N^k = 0, rank(N) <= n - ceil(n/k).  Plus 50 instances over Q with n <= 8.
void criterion5(Checker& c) {
    const auto run_one = [&](const FieldSpec& field, int n, std::uint64_t seed, int i) {
        const int k = 1 + static_cast<int>((seed + i) % n);
        const int threshold = (n + k - 1) / k;
        const int r = threshold + static_cast<int>((i / 3) % (n - threshold + 1));
        const Matrix a = verify::random_matrix_of_rank(n, r, field, seed);
        const std::string tag = field.str() + ", n=" + std::to_string(n) +
                                ", r=" + std::to_string(r) + ", k=" + std::to_string(k) +
                                ", seed " + std::to_string(seed);
        const auto dec = construct::decompose(a, k);
        c.expect(dec.has_value(), "in-threshold instance not decomposed: " + tag);
        if (!dec) return;
        c.expect(dec->unit + dec->nilpotent == a, "A != U + N: " + tag);
        c.expect(!mat_det(dec->unit).is_zero(), "det U = 0: " + tag);
        c.expect(mat_pow(dec->nilpotent, std::min(k, n)).is_zero(), "N^k != 0: " + tag);
        c.expect(mat_rank(dec->nilpotent) <= n - threshold,
                 "rank(N) > n - ceil(n/k): " + tag);
    };
    const std::uint64_t primes[] = {2, 3, 5, 7, 101};
    for (int i = 0; i < 200; ++i) {
        const auto field = FieldSpec::prime(primes[i % 5]);
        const int n = 2 + (i * 7) % 11;  // 2..12
        run_one(field, n, 31337 + i, i);
    }
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + (i * 3) % 7;  // 2..8
        run_one(FieldSpec::rationals(), n, 77000 + i, i);
    }
}

// ---- criterion 6 ---------------------------------------------------------
// A = e_{12} in M_n for n = k + 2, k in {2,3,4} is infeasible.
void criterion6(Checker& c) {
    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
        for (int k : {2, 3, 4}) {
            const int n = k + 2;
            Matrix a(field, n, n);
            a.set(0, 1, Scalar::one(field));
            const std::string tag =
                field.str() + ", n=" + std::to_string(n) + ", k=" + std::to_string(k);
            c.expect(!construct::feasible(a, k), "e_12 reported feasible: " + tag);
            c.expect(!construct::decompose(a, k).has_value(),
                     "decompose produced a split for e_12: " + tag);
        }
    }
}

// ---- criterion 7 ---------------------------------------------------------
// For all n <= 8 and valid (r, s, k) (1 <= r < s, 2 <= k, s + k - 2 <= n):
// rank(N_{r,s,k}) = k - 1, nilpotency index exactly k, and the explicit
// basis Q satisfies Q^{-1} (corner shift chain of length k) Q = N_{r,s,k}.
void criterion7(Checker& c) {
    const auto q = FieldSpec::rationals();
    int swept = 0;
    for (int n = 2; n <= 8; ++n) {
        for (int k = 2; k <= n; ++k) {
            for (int r = 1; r < n; ++r) {
                for (int s = r + 1; s + k - 2 <= n; ++s) {
                    const std::string tag = "(n,r,s,k)=(" + std::to_string(n) + "," +
                                            std::to_string(r) + "," + std::to_string(s) + "," +
                                            std::to_string(k) + ")";
                    const Matrix g = construct::special_nilpotent(n, r, s, k, q);
                    c.expect(mat_rank(g) == k - 1, "rank != k-1 at " + tag);
                    const auto index = nilpotency_index(g, k);
                    c.expect(index.has_value() && *index == k, "index != k at " + tag);
                    const Matrix basis = construct::special_nilpotent_basis(n, r, s, k, q);
                    c.expect(!mat_det(basis).is_zero(), "basis not invertible at " + tag);
                    c.expect(mat_conjugate(corner_chain(q, n, k), basis) == g,
                             "basis similarity fails at " + tag);
                    ++swept;
                }
            }
        }
    }
    c.expect(swept > 100, "sweep unexpectedly small");
}

// ---- criterion 8 ---------------------------------------------------------
// J_r (first row all -1, subdiagonal ones) has det (-1)^r for r = 1..10,
// over Q and F_3.
void criterion8(Checker& c) {
    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
        for (int r = 1; r <= 10; ++r) {
            Matrix j(field, r, r);
            for (int col = 0; col < r; ++col) j.set(0, col, -Scalar::one(field));
            for (int i = 0; i + 1 < r; ++i) j.set(i + 1, i, Scalar::one(field));
            const Scalar expected =
                (r % 2 == 0) ? Scalar::one(field) : -Scalar::one(field);
            c.expect(mat_det(j) == expected,
                     "det(J_" + std::to_string(r) + ") != (-1)^" + std::to_string(r) + " over " +
                         field.str());
        }
    }
}

// ---- criterion 9 ---------------------------------------------------------
// 100 seeded random A over F_5 and Q (n <= 10): the refined block transform
// P is invertible with P^{-1} A P equal to the realized blocks, the
// invariant factors form a divisibility chain, and the nullity of A equals
// the count of zero plus shift blocks.
void criterion9(Checker& c) {
    const auto run_one = [&](const FieldSpec& field, int i) {
        const int n = 2 + (i * 5) % 9;  // 2..10
        const int r = (i * 3) % (n + 1);
        const Matrix a = verify::random_matrix_of_rank(n, r, field, 91000 + i);
        const std::string tag = field.str() + ", n=" + std::to_string(n) +
                                ", r=" + std::to_string(r) + ", seed " + std::to_string(91000 + i);
        const auto bf = canonical::block_form(a);
        c.expect(!mat_det(bf.transform).is_zero(), "transform singular: " + tag);
        c.expect(mat_conjugate(a, bf.transform) ==
                     canonical::realize_blocks(field, bf.blocks),
                 "P^{-1} A P != realized blocks: " + tag);
        int kernel_blocks = 0;
        for (const auto& b : bf.blocks) {
            if (b.kind() != canonical::BlockSpec::Kind::Invertible) ++kernel_blocks;
        }
        c.expect(kernel_blocks == n - r, "nullity != zero+shift block count: " + tag);
        const auto ff = canonical::frobenius_form(a);
        for (std::size_t f = 0; f + 1 < ff.factors.size(); ++f) {
            const auto [quot, rem] = poly_divmod(ff.factors[f + 1], ff.factors[f]);
            (void)quot;
            c.expect(rem.is_zero(), "divisibility chain broken: " + tag);
        }
    };
    for (int i = 0; i < 50; ++i) run_one(FieldSpec::prime(5), i);
    for (int i = 0; i < 50; ++i) run_one(FieldSpec::rationals(), i);
}

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;  // 0 = no stated bound
    std::function<void(Checker&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--help") == 0) {
            std::cout << "usage: acceptance [--only N]\n";
            return 0;
        } else {
            std::cerr << "unknown argument: " << argv[i] << "\n";
            return 1;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "worked 9x9 invertible-host example, exact over Q and F_11", 1.0, criterion1},
        {2, "worked 9x9 shift-host example, exact over Q and F_11", 1.0, criterion2},
        {3, "iff certified exhaustively on M_2(F_2), M_3(F_2), M_2(F_3)", 120.0, criterion3},
        {4, "constructor matches 65536-candidate oracle on 50 seeded M_4(F_2)", 300.0,
         criterion4},
        {5, "invariants on 200 seeded F_p + 50 seeded Q instances", 120.0, criterion5},
        {6, "e_12 in M_{k+2} infeasible for k in {2,3,4}", 1.0, criterion6},
        {7, "gadget rank/index/similarity sweep for all n <= 8", 30.0, criterion7},
        {8, "det(J_r) = (-1)^r for r = 1..10 over Q and F_3", 0.0, criterion8},
        {9, "canonical-form contract on 100 seeded A over F_5 and Q", 60.0, criterion9},
    };

    int failed = 0;
    int executed = 0;
    for (const auto& crit : criteria) {
        if (only != 0 && crit.id != only) continue;
        ++executed;
        Checker checker;
        std::string aborted;
        const auto start = std::chrono::steady_clock::now();
        try {
            crit.run(checker);
        } catch (const std::exception& e) {
            aborted = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = crit.budget_seconds == 0.0 || elapsed <= crit.budget_seconds;
        const bool pass = checker.failures == 0 && aborted.empty() && in_budget;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << crit.id << ": " << crit.title << "  ["
                  << fnum(elapsed) << " s";
        if (crit.budget_seconds > 0.0) std::cout << ", budget " << fnum(crit.budget_seconds);
        std::cout << "]\n";
        if (!aborted.empty()) std::cout << "       aborted: " << aborted << "\n";
        if (!in_budget) std::cout << "       time budget exceeded\n";
        if (checker.failures > 0) {
            std::cout << "       " << checker.failures << " failed check(s); first:\n";
            for (const auto& m : checker.messages) std::cout << "         - " << m << "\n";
        }
        if (!pass) ++failed;
    }
    if (executed == 0) {
        std::cerr << "--only " << only << " matches no criterion (1.."
                  << criteria.back().id << ")\n";
        return 1;
    }
    std::cout << (failed == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failed) + " criterion(s) FAILED")
              << " (" << executed << " executed)\n";
    return failed == 0 ? 0 : 1;
}
