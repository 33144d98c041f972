#include "unitnil/io.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include <json.hpp>

#include "unitnil/errors.hpp"

namespace unitnil::io {

namespace {

using ojson = nlohmann::ordered_json;

bool canonical_uint(const std::string& s) {
    if (s.empty()) return false;
    if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; })) {
        return false;
    }
    return s.size() == 1 || s[0] != '0';
}

// Canonical signed decimal: optional '-', no leading zeros, no "-0".
bool canonical_int(const std::string& s) {
    if (!s.empty() && s[0] == '-') return s != "-0" && canonical_uint(s.substr(1));
    return canonical_uint(s);
}

Scalar parse_prime_entry(const FieldSpec& field, const std::string& s, const std::string& where) {
    if (!canonical_uint(s)) {
        throw ParseError(where + ": \"" + s + "\" is not a canonical nonnegative decimal");
    }
    if (s.size() > 19 || std::stoull(s) >= field.modulus()) {
        throw EntryOutOfFieldError(where + ": \"" + s + "\" is not reduced modulo " +
                                   std::to_string(field.modulus()));
    }
    return Scalar::of_int(field, static_cast<long long>(std::stoull(s)));
}

Scalar parse_rational_entry(const FieldSpec& field, const std::string& s,
                            const std::string& where) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!canonical_int(s)) {
            throw ParseError(where + ": \"" + s + "\" is not a canonical integer");
        }
    } else {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!canonical_int(num) || !canonical_uint(den)) {
            throw ParseError(where + ": \"" + s + "\" is not of the form int or int/uint");
        }
        if (den == "0") {
            throw EntryOutOfFieldError(where + ": \"" + s + "\" has a zero denominator");
        }
    }
    mpq_class value(s, 10);
    value.canonicalize();
    return Scalar::of_rational(field, value);
}

Scalar parse_entry(const FieldSpec& field, const std::string& s, const std::string& where) {
    if (field.kind() == FieldSpec::Kind::Prime) return parse_prime_entry(field, s, where);
    return parse_rational_entry(field, s, where);
}

const ojson& require_key(const ojson& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing \"") + key + "\"");
    return *it;
}

int require_dim(const ojson& obj, const char* key) {
    const ojson& j = require_key(obj, key);
    if (!j.is_number_integer() && !j.is_number_unsigned()) {
        throw ParseError(std::string("\"") + key + "\" must be an integer");
    }
    const long long v = j.is_number_unsigned()
                            ? static_cast<long long>(std::min<std::uint64_t>(
                                  j.get<std::uint64_t>(), std::uint64_t{1} << 62))
                            : j.get<long long>();
    if (v < 0 || v > 16384) {
        throw ParseError(std::string("\"") + key + "\" must lie in 0..16384");
    }
    return static_cast<int>(v);
}

FieldSpec parse_field(const ojson& root) {
    const ojson& jf = require_key(root, "field");
    if (!jf.is_object()) throw ParseError("\"field\" must be an object");
    const ojson& jk = require_key(jf, "kind");
    if (!jk.is_string()) throw ParseError("\"field.kind\" must be a string");
    const std::string kind = jk.get<std::string>();
    if (kind == "q") return FieldSpec::rationals();
    if (kind != "fp") throw ParseError("\"field.kind\" must be \"fp\" or \"q\"");
    const ojson& jp = require_key(jf, "p");
    if (!jp.is_number_integer() && !jp.is_number_unsigned()) {
        throw ParseError("\"field.p\" must be an integer");
    }
    if (!jp.is_number_unsigned() && jp.get<long long>() < 0) {
        throw ParseError("\"field.p\" must be positive");
    }
    return FieldSpec::prime(jp.get<std::uint64_t>());  // NotPrimeError on bad p
}

ojson instance_json(const Matrix& m, std::optional<int> k) {
    ojson j = ojson::object();
    ojson field = ojson::object();
    if (m.field().kind() == FieldSpec::Kind::Prime) {
        field["kind"] = "fp";
        field["p"] = m.field().modulus();
    } else {
        field["kind"] = "q";
    }
    j["field"] = std::move(field);
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ojson rows = ojson::array();
    for (int i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (int jj = 0; jj < m.cols(); ++jj) row.push_back(entry_string(m.at(i, jj)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    if (k) j["k"] = *k;
    return j;
}

ojson certificate_json(int rank_a, std::optional<int> index_of_n, int n, int k) {
    ojson c = ojson::object();
    c["rank_A"] = rank_a;
    if (index_of_n) c["index_of_N"] = *index_of_n;
    c["n"] = n;
    c["threshold_ceil_n_over_k"] = (n + k - 1) / k;
    return c;
}

std::string dump_doc(const ojson& j) { return j.dump(2) + "\n"; }

const char* kind_name(canonical::BlockSpec::Kind kind) {
    switch (kind) {
        case canonical::BlockSpec::Kind::Invertible:
            return "invertible";
        case canonical::BlockSpec::Kind::ZeroOne:
            return "zero";
        case canonical::BlockSpec::Kind::XPower:
            return "x_power";
    }
    return "?";
}

}  // namespace

Instance parse_instance(const std::string& text) {
    ojson root;
    try {
        root = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("instance must be a JSON object");
    const FieldSpec field = parse_field(root);
    const int rows = require_dim(root, "rows");
    const int cols = require_dim(root, "cols");
    const ojson& jent = require_key(root, "entries");
    if (!jent.is_array() || static_cast<int>(jent.size()) != rows) {
        throw ParseError("\"entries\" must be an array of " + std::to_string(rows) + " rows");
    }
    Matrix m(field, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const ojson& jrow = jent[i];
        if (!jrow.is_array() || static_cast<int>(jrow.size()) != cols) {
            throw ParseError("entries[" + std::to_string(i) + "] must be an array of " +
                             std::to_string(cols) + " strings");
        }
        for (int j = 0; j < cols; ++j) {
            const ojson& cell = jrow[j];
            const std::string where =
                "entries[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            if (!cell.is_string()) throw ParseError(where + " must be a string");
            m.set(i, j, parse_entry(field, cell.get<std::string>(), where));
        }
    }
    std::optional<int> k;
    if (root.contains("k")) {
        const ojson& jk = root["k"];
        if (!jk.is_number_integer() && !jk.is_number_unsigned()) {
            throw ParseError("\"k\" must be an integer");
        }
        const long long v = jk.is_number_unsigned()
                                ? static_cast<long long>(std::min<std::uint64_t>(
                                      jk.get<std::uint64_t>(), std::uint64_t{1} << 62))
                                : jk.get<long long>();
        if (v < -1000000000 || v > 1000000000) throw ParseError("\"k\" is out of range");
        k = static_cast<int>(v);
    }
    return Instance{std::move(m), k};
}

std::string entry_string(const Scalar& value) {
    if (value.field().kind() == FieldSpec::Kind::Prime) {
        return std::to_string(value.residue());
    }
    return value.rational().get_str();
}

std::string render_instance(const Matrix& m, std::optional<int> k) {
    return dump_doc(instance_json(m, k));
}

std::string render_decomposed(const Matrix& a, const construct::Decomposition& dec) {
    ojson j = ojson::object();
    j["status"] = "decomposed";
    j["k"] = dec.k;
    j["U"] = instance_json(dec.unit, std::nullopt);
    j["N"] = instance_json(dec.nilpotent, std::nullopt);
    j["certificate"] =
        certificate_json(dec.certificate.rank_a, dec.certificate.index_n, a.rows(), dec.k);
    return dump_doc(j);
}

std::string render_infeasible(const Matrix& a, int k) {
    ojson j = ojson::object();
    j["status"] = "infeasible";
    j["k"] = k;
    j["certificate"] = certificate_json(mat_rank(a), std::nullopt, a.rows(), k);
    return dump_doc(j);
}

std::string render_verify(const Matrix& a, const Matrix& u, const Matrix& n, int k,
                          const verify::VerifyReport& report) {
    (void)u;
    (void)n;
    ojson j = ojson::object();
    j["status"] = report.overall() ? "verified" : "failed";
    j["k"] = k;
    ojson checks = ojson::object();
    checks["sum_ok"] = report.sum_ok;
    checks["unit_ok"] = report.unit_ok;
    checks["nilpotent_ok"] = report.nilpotent_ok;
    j["checks"] = std::move(checks);
    j["certificate"] = certificate_json(mat_rank(a), report.index_of_n, a.rows(), k);
    return dump_doc(j);
}

std::string render_block_form(const canonical::BlockForm& form) {
    ojson j = ojson::object();
    ojson blocks = ojson::array();
    for (const auto& block : form.blocks) {
        ojson b = ojson::object();
        b["kind"] = kind_name(block.kind());
        b["size"] = block.size();
        ojson coeffs = ojson::array();
        for (int i = 0; i <= block.poly().degree(); ++i) {
            coeffs.push_back(entry_string(block.poly().coeff(i)));
        }
        b["poly"] = std::move(coeffs);
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    j["transform"] = instance_json(form.transform, std::nullopt);
    return dump_doc(j);
}

std::string render_oracle(const verify::OracleOutcome& outcome, int k) {
    ojson j = ojson::object();
    j["status"] = outcome.feasible ? "feasible" : "infeasible";
    j["k"] = k;
    j["candidates"] = std::to_string(outcome.candidates);
    if (outcome.witness) {
        j["witness_index"] = std::to_string(outcome.witness_index);
        j["witness"] = instance_json(*outcome.witness, std::nullopt);
    }
    return dump_doc(j);
}

}  // namespace unitnil::io
