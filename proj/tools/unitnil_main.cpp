#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "unitnil/canonical.hpp"
#include "unitnil/construct.hpp"
#include "unitnil/errors.hpp"
#include "unitnil/io.hpp"
#include "unitnil/selftest.hpp"
#include "unitnil/verify.hpp"

namespace {

using namespace unitnil;

// Exit codes: 0 success / feasible / verified, 2 infeasible, 3 verification
// failed, 1 input or usage error.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerifyFailed = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgumentError("cannot open \"" + path + "\" for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw InvalidArgumentError("failed while reading \"" + path + "\"");
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgumentError("cannot open \"" + path + "\" for writing");
    out << text;
    if (!out) throw InvalidArgumentError("failed while writing \"" + path + "\"");
}

io::Instance load_instance(const std::string& path) { return io::parse_instance(read_file(path)); }

int checked_k(long long k) {
    if (k < 1 || k > 1000000) throw InvalidArgumentError("k must lie in 1..1000000");
    return static_cast<int>(k);
}

// --k wins over a "k" recorded in the instance file.
int resolve_k(bool flag_given, long long flag_value, const std::optional<int>& instance_k) {
    if (flag_given) return checked_k(flag_value);
    if (instance_k) return checked_k(*instance_k);
    throw InvalidArgumentError("no k given: pass --k or store \"k\" in the instance file");
}

FieldSpec parse_field_flag(const std::string& text) {
    if (text == "q") return FieldSpec::rationals();
    if (text.rfind("fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
            digits.size() > 19) {
            throw InvalidArgumentError("--field fp:<p> needs a decimal p, got \"" + text + "\"");
        }
        return FieldSpec::prime(std::stoull(digits));
    }
    throw InvalidArgumentError("--field must be fp:<p> or q, got \"" + text + "\"");
}

struct CommonArgs {
    std::string input;
    std::string output;
    long long k = 0;
    bool k_given = false;
};

int run_feasible(const CommonArgs& args) {
    const auto inst = load_instance(args.input);
    const int k = resolve_k(args.k_given, args.k, inst.k);
    if (inst.matrix.rows() != inst.matrix.cols()) {
        throw InvalidArgumentError("feasible needs a square matrix");
    }
    const int n = inst.matrix.rows();
    const int rank = mat_rank(inst.matrix);
    const bool ok = construct::feasible(inst.matrix, k);
    std::cout << "n = " << n << ", rank(A) = " << rank << ", k = " << k << "\n";
    std::cout << "k * rank(A) = " << static_cast<long long>(k) * rank << (ok ? " >= " : " < ")
              << n << ": decomposition " << (ok ? "exists" : "is impossible") << "\n";
    return ok ? kExitOk : kExitInfeasible;
}

int run_decompose(const CommonArgs& args) {
    const auto inst = load_instance(args.input);
    const int k = resolve_k(args.k_given, args.k, inst.k);
    const auto dec = construct::decompose(inst.matrix, k);
    if (!dec) {
        const int n = inst.matrix.rows();
        std::cout << "infeasible: k * rank(A) = "
                  << static_cast<long long>(k) * mat_rank(inst.matrix) << " < n = " << n << "\n";
        if (!args.output.empty()) {
            write_file(args.output, io::render_infeasible(inst.matrix, k));
            std::cout << "wrote " << args.output << "\n";
        }
        return kExitInfeasible;
    }
    std::cout << "decomposed: A = U + N over " << inst.matrix.field().str() << " (n = "
              << inst.matrix.rows() << ", k = " << k << ")\n";
    std::cout << "rank(A) = " << dec->certificate.rank_a << ", index(N) = "
              << dec->certificate.index_n << "\n";
    std::cout << "U =\n" << dec->unit.str() << "N =\n" << dec->nilpotent.str();
    if (!args.output.empty()) {
        write_file(args.output, io::render_decomposed(inst.matrix, *dec));
        std::cout << "wrote " << args.output << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& path_a, const std::string& path_u, const std::string& path_n,
               const CommonArgs& args) {
    const auto inst_a = load_instance(path_a);
    const auto inst_u = load_instance(path_u);
    const auto inst_n = load_instance(path_n);
    const int k = resolve_k(args.k_given, args.k, inst_a.k);
    const auto report =
        verify::verify_decomposition(inst_a.matrix, inst_u.matrix, inst_n.matrix, k);
    std::cout << "A = U + N:      " << (report.sum_ok ? "ok" : "FAIL") << "\n";
    std::cout << "U invertible:   " << (report.unit_ok ? "ok" : "FAIL") << "\n";
    std::cout << "N^" << k << " = 0:        " << (report.nilpotent_ok ? "ok" : "FAIL") << "\n";
    if (report.index_of_n) std::cout << "index(N) = " << *report.index_of_n << "\n";
    std::cout << (report.overall() ? "verified" : "verification FAILED") << "\n";
    if (!args.output.empty()) {
        write_file(args.output,
                   io::render_verify(inst_a.matrix, inst_u.matrix, inst_n.matrix, k, report));
        std::cout << "wrote " << args.output << "\n";
    }
    return report.overall() ? kExitOk : kExitVerifyFailed;
}

int run_canon(const CommonArgs& args) {
    const auto inst = load_instance(args.input);
    const auto form = canonical::block_form(inst.matrix);
    std::cout << form.blocks.size() << " block(s):\n";
    for (std::size_t i = 0; i < form.blocks.size(); ++i) {
        const auto& b = form.blocks[i];
        const char* kind = b.kind() == canonical::BlockSpec::Kind::Invertible ? "invertible"
                           : b.kind() == canonical::BlockSpec::Kind::ZeroOne ? "zero"
                                                                             : "x_power";
        std::cout << "  block " << i << ": " << kind << ", size " << b.size() << ", poly "
                  << b.poly().str() << "\n";
    }
    if (!args.output.empty()) {
        write_file(args.output, io::render_block_form(form));
        std::cout << "wrote " << args.output << "\n";
    }
    return kExitOk;
}

int run_oracle(const CommonArgs& args, long long jobs, std::uint64_t budget, bool budget_given) {
    const auto inst = load_instance(args.input);
    const int k = resolve_k(args.k_given, args.k, inst.k);
    verify::OracleBudget ob;
    if (budget_given) ob.max_candidates = budget;
    if (jobs < 1 || jobs > 4096) throw InvalidArgumentError("--jobs must lie in 1..4096");
    const auto out = verify::exhaustive_feasible(inst.matrix, k, ob, static_cast<int>(jobs));
    std::cout << "candidates: " << out.candidates << ", feasible: "
              << (out.feasible ? "yes" : "no") << "\n";
    if (out.witness) {
        std::cout << "first witness (index " << out.witness_index << "):\n" << out.witness->str();
    }
    if (!args.output.empty()) {
        write_file(args.output, io::render_oracle(out, k));
        std::cout << "wrote " << args.output << "\n";
    }
    return out.feasible ? kExitOk : kExitInfeasible;
}

int run_gen(const CommonArgs& args, long long n, long long rank, bool rank_given,
            const std::string& field_text, std::uint64_t seed) {
    if (n < 0 || n > 1024) throw InvalidArgumentError("--n must lie in 0..1024");
    const long long r = rank_given ? rank : n;
    if (r < 0 || r > n) throw InvalidArgumentError("--rank must lie in 0..n");
    const FieldSpec field = parse_field_flag(field_text);
    const Matrix m = verify::random_matrix_of_rank(static_cast<int>(n), static_cast<int>(r),
                                                   field, seed);
    std::optional<int> k;
    if (args.k_given) k = checked_k(args.k);
    const std::string text = io::render_instance(m, k);
    if (!args.output.empty()) {
        write_file(args.output, text);
        std::cout << "wrote " << args.output << " (n = " << n << ", rank = " << r << ", "
                  << field.str() << ", seed = " << seed << ")\n";
    } else {
        std::cout << text;
    }
    return kExitOk;
}

int run_selftest(long long sweep_n) {
    if (sweep_n < 0 || sweep_n > 12) throw InvalidArgumentError("--n must lie in 0..12");
    const int failures = selftest::run(std::cout, static_cast<int>(sweep_n));
    if (failures == 0) {
        std::cout << "selftest: all checks passed\n";
        return kExitOk;
    }
    std::cout << "selftest: " << failures << " check(s) FAILED\n";
    return kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit-plus-nilpotent decomposition of square matrices: A = U + N with U "
                 "invertible and N^k = 0, possible iff k * rank(A) >= n"};
    app.require_subcommand(1);

    CommonArgs common;
    long long jobs = 1;
    std::uint64_t budget = 0;
    long long gen_n = 0;
    long long gen_rank = 0;
    std::string gen_field = "fp:2";
    std::uint64_t gen_seed = 0;
    long long sweep_n = 8;
    std::string verify_a;
    std::string verify_u;
    std::string verify_n;

    const auto add_k = [&](CLI::App* sub) {
        return sub->add_option("--k", common.k, "nilpotency bound k (overrides the instance's k)");
    };
    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("-i,--input", common.input, "instance JSON file")->required();
    };
    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", common.output, "write the machine-readable result here");
    };

    CLI::App* feas = app.add_subcommand("feasible", "decide whether A = U + N is possible");
    add_input(feas);
    CLI::Option* feas_k = add_k(feas);

    CLI::App* deco = app.add_subcommand("decompose", "construct A = U + N");
    add_input(deco);
    add_output(deco);
    CLI::Option* deco_k = add_k(deco);

    CLI::App* veri = app.add_subcommand("verify", "check a claimed decomposition A = U + N");
    veri->add_option("A", verify_a, "instance file for A")->required();
    veri->add_option("U", verify_u, "instance file for U")->required();
    veri->add_option("N", verify_n, "instance file for N")->required();
    add_output(veri);
    CLI::Option* veri_k = add_k(veri);

    CLI::App* cano = app.add_subcommand("canon", "refined canonical block form of A");
    add_input(cano);
    add_output(cano);

    CLI::App* orac = app.add_subcommand("oracle", "brute-force feasibility check over F_p");
    add_input(orac);
    add_output(orac);
    CLI::Option* orac_k = add_k(orac);
    orac->add_option("--jobs", jobs, "worker threads for the scan (result is identical)");
    CLI::Option* orac_budget =
        orac->add_option("--budget", budget, "max candidate count p^(n^2) to allow");

    CLI::App* gen = app.add_subcommand("gen", "write a seeded random instance of exact rank");
    gen->add_option("--n", gen_n, "matrix size")->required();
    CLI::Option* gen_rank_opt = gen->add_option("--rank", gen_rank, "target rank (default n)");
    gen->add_option("--field", gen_field, "fp:<p> or q (default fp:2)");
    gen->add_option("--seed", gen_seed, "RNG seed (default 0)");
    add_output(gen);
    CLI::Option* gen_k = add_k(gen);

    CLI::App* self = app.add_subcommand(
        "selftest", "replay the pinned worked examples and the gadget similarity sweep");
    self->add_option("--n", sweep_n, "largest size in the gadget sweep (default 8)");

    try {
        app.parse(argc, argv);
        const auto k_given = [](const CLI::Option* opt) { return opt->count() > 0; };
        if (feas->parsed()) {
            common.k_given = k_given(feas_k);
            return run_feasible(common);
        }
        if (deco->parsed()) {
            common.k_given = k_given(deco_k);
            return run_decompose(common);
        }
        if (veri->parsed()) {
            common.k_given = k_given(veri_k);
            return run_verify(verify_a, verify_u, verify_n, common);
        }
        if (cano->parsed()) return run_canon(common);
        if (orac->parsed()) {
            common.k_given = k_given(orac_k);
            return run_oracle(common, jobs, budget, orac_budget->count() > 0);
        }
        if (gen->parsed()) {
            common.k_given = k_given(gen_k);
            return run_gen(common, gen_n, gen_rank, gen_rank_opt->count() > 0, gen_field,
                           gen_seed);
        }
        if (self->parsed()) return run_selftest(sweep_n);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const InternalVerificationError& e) {
        std::cerr << "INTERNAL ERROR (a self-check failed; this is a bug): " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
