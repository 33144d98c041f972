#include "unitnil/field.hpp"

#include <sstream>

namespace unitnil {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod64(result, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    // Miller-Rabin with bases {2, 3, 5, 7}: deterministic for n < 3'215'031'751,
    // which covers the whole supported range p < 2^31.
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31) || !is_prime(p)) {
        throw NotPrimeError("field modulus must be a prime in [2, 2^31): got " +
                            std::to_string(p));
    }
    return FieldSpec(Kind::Prime, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::rationals() { return FieldSpec(Kind::Rationals, 0); }

std::uint32_t FieldSpec::modulus() const {
    if (kind_ != Kind::Prime) {
        throw InvalidArgumentError("modulus() requires a prime field");
    }
    return p_;
}

std::string FieldSpec::str() const {
    if (kind_ == Kind::Rationals) return "Q";
    return "F_" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& field) { return Scalar(field); }

Scalar Scalar::one(const FieldSpec& field) { return of_int(field, 1); }

Scalar Scalar::of_int(const FieldSpec& field, long long v) {
    Scalar s(field);
    if (field.is_prime_field()) {
        long long p = field.modulus();
        long long r = v % p;
        if (r < 0) r += p;
        s.res_ = static_cast<std::uint64_t>(r);
    } else {
        s.rat_ = mpq_class(static_cast<long>(v));
    }
    return s;
}

Scalar Scalar::fraction(const FieldSpec& field, long long num, long long den) {
    if (!field.is_rationals()) {
        throw InvalidArgumentError("fraction() requires the rational field");
    }
    if (den == 0) {
        throw DivisionByZeroError("fraction with zero denominator");
    }
    Scalar s(field);
    s.rat_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::of_rational(const FieldSpec& field, const mpq_class& v) {
    if (!field.is_rationals()) {
        throw InvalidArgumentError("of_rational() requires the rational field");
    }
    Scalar s(field);
    s.rat_ = v;
    s.rat_.canonicalize();
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_prime_field() ? res_ == 1 % field_.modulus() : rat_ == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
    if (field_ != other.field_) {
        throw MixedFieldsError("scalars from different fields: " + field_.str() +
                               " vs " + other.field_.str());
    }
}

Scalar Scalar::operator+(const Scalar& other) const {
    check_same_field(other);
    Scalar s(field_);
    if (field_.is_prime_field()) {
        s.res_ = (res_ + other.res_) % field_.modulus();
    } else {
        s.rat_ = rat_ + other.rat_;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& other) const {
    check_same_field(other);
    Scalar s(field_);
    if (field_.is_prime_field()) {
        std::uint64_t p = field_.modulus();
        s.res_ = (res_ + p - other.res_) % p;
    } else {
        s.rat_ = rat_ - other.rat_;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& other) const {
    check_same_field(other);
    Scalar s(field_);
    if (field_.is_prime_field()) {
        s.res_ = (res_ * other.res_) % field_.modulus();
    } else {
        s.rat_ = rat_ * other.rat_;
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_prime_field()) {
        std::uint64_t p = field_.modulus();
        s.res_ = res_ == 0 ? 0 : p - res_;
    } else {
        s.rat_ = -rat_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw DivisionByZeroError("inverse of zero in " + field_.str());
    }
    Scalar s(field_);
    if (field_.is_prime_field()) {
        // Fermat: a^(p-2) mod p.
        s.res_ = powmod64(res_, field_.modulus() - 2, field_.modulus());
    } else {
        s.rat_ = 1 / rat_;
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& other) const {
    check_same_field(other);
    return *this * other.inverse();
}

bool Scalar::operator==(const Scalar& other) const {
    check_same_field(other);
    return field_.is_prime_field() ? res_ == other.res_ : rat_ == other.rat_;
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime_field()) {
        throw InvalidArgumentError("residue() requires a prime field");
    }
    return res_;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rationals()) {
        throw InvalidArgumentError("rational() requires the rational field");
    }
    return rat_;
}

std::string Scalar::str() const {
    if (field_.is_prime_field()) return std::to_string(res_);
    std::ostringstream out;
    out << rat_;
    return out.str();
}

}  // namespace unitnil
