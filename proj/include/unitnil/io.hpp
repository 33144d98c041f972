#ifndef UNITNIL_IO_HPP
#define UNITNIL_IO_HPP

#include <optional>
#include <string>

#include "unitnil/canonical.hpp"
#include "unitnil/construct.hpp"
#include "unitnil/matrix.hpp"
#include "unitnil/verify.hpp"

namespace unitnil::io {

// One matrix instance as carried by the JSON instance files.
struct Instance {
    Matrix matrix;
    std::optional<int> k;
};

// Parses an instance document:
//   {"field": {"kind": "fp", "p": 7} | {"kind": "q"},
//    "rows": R, "cols": C,
//    "entries": [["0", "1"], ["1", "1"]],   // strings; "a" or "a/b" over q
//    "k": 5}                                 // optional
// Entries are strict: prime-field entries are canonical decimals in [0, p)
// (EntryOutOfFieldError otherwise); rational entries are "int" or "int/int"
// with a nonzero denominator.  Malformed documents raise ParseError with the
// offending field named; a composite p raises NotPrimeError.
Instance parse_instance(const std::string& text);

// Renders one entry the way instance files spell it ("3", "-1/2", ...).
std::string entry_string(const Scalar& value);

// Serializes a matrix (plus optional k) to the instance grammar.  Output is
// canonical: fixed key order, two-space indent, trailing newline, identical
// bytes for identical inputs.  parse_instance inverts it exactly.
std::string render_instance(const Matrix& m, std::optional<int> k = std::nullopt);

// Result documents.  All share {"status": ..., "k": ...} and a certificate
// {"rank_A", "index_of_N" (when a nilpotent part exists), "n",
// "threshold_ceil_n_over_k"}; U and N appear only with status "decomposed".
std::string render_decomposed(const Matrix& a, const construct::Decomposition& dec);
std::string render_infeasible(const Matrix& a, int k);
// status "verified" when the report is overall-true, else "failed"; the
// per-property booleans are included under "checks".
std::string render_verify(const Matrix& a, const Matrix& u, const Matrix& n, int k,
                          const verify::VerifyReport& report);
// Block-form document: {"blocks": [{"kind", "size", "poly"}...], "transform"}.
std::string render_block_form(const canonical::BlockForm& form);
// Oracle document: status feasible/infeasible, candidate count, and the
// witness with its enumeration index when one exists.  Counts are strings
// (they can exceed what JSON numbers carry losslessly).
std::string render_oracle(const verify::OracleOutcome& outcome, int k);

}  // namespace unitnil::io

#endif  // UNITNIL_IO_HPP
