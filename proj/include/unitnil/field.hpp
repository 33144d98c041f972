#ifndef UNITNIL_FIELD_HPP
#define UNITNIL_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "unitnil/errors.hpp"

namespace unitnil {

// Deterministic primality test, valid for all n < 2^31 (Miller-Rabin with
// bases 2, 3, 5, 7).
bool is_prime(std::uint64_t n);

// Identifies the coefficient field: either a prime field F_p with p < 2^31,
// or the rational numbers.
class FieldSpec {
public:
    enum class Kind { Prime, Rationals };

    // F_p.  Throws NotPrimeError unless 2 <= p < 2^31 and p is prime.
    static FieldSpec prime(std::uint64_t p);

    // The field of rational numbers.
    static FieldSpec rationals();

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::Prime; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }

    // The prime modulus.  Only valid for prime fields.
    std::uint32_t modulus() const;

    bool operator==(const FieldSpec& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

    // "F_7" or "Q".
    std::string str() const;

private:
    FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

// One field element.  Prime-field values are stored as a residue in [0, p);
// rational values as an exact GMP rational in canonical form.
class Scalar {
public:
    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);

    // Image of an integer: reduced mod p, or the exact rational v/1.
    static Scalar of_int(const FieldSpec& field, long long v);

    // Exact fraction num/den over the rationals.  Throws DivisionByZeroError
    // if den == 0, InvalidArgumentError if the field is not the rationals.
    static Scalar fraction(const FieldSpec& field, long long num, long long den);

    // Exact rational value.  Canonicalizes.  Rationals only.
    static Scalar of_rational(const FieldSpec& field, const mpq_class& v);

    const FieldSpec& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator-() const;

    // Multiplicative inverse.  Throws DivisionByZeroError on zero.
    Scalar inverse() const;
    Scalar operator/(const Scalar& other) const;

    // Comparing elements of different fields is a caller bug.
    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    // The residue in [0, p).  Prime fields only.
    std::uint64_t residue() const;

    // The exact value.  Rationals only.
    const mpq_class& rational() const;

    // "3" over F_p; "3", "-1/2" over the rationals.
    std::string str() const;

private:
    explicit Scalar(const FieldSpec& field) : field_(field), res_(0), rat_(0) {}

    void check_same_field(const Scalar& other) const;

    FieldSpec field_;
    std::uint64_t res_;  // Prime fields.
    mpq_class rat_;      // Rationals.
};

}  // namespace unitnil

#endif  // UNITNIL_FIELD_HPP
