#ifndef UNITNIL_POLY_HPP
#define UNITNIL_POLY_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "unitnil/field.hpp"
#include "unitnil/matrix.hpp"

namespace unitnil {

// Univariate polynomial over a FieldSpec.  Coefficients are stored in
// ascending order of degree with a nonzero leading coefficient; the zero
// polynomial has an empty coefficient vector and no degree.
class Polynomial {
public:
    // The zero polynomial.
    explicit Polynomial(const FieldSpec& field);

    // From ascending coefficients (trailing zeros stripped).
    Polynomial(const FieldSpec& field, std::vector<Scalar> coeffs);

    static Polynomial from_ints(const FieldSpec& field,
                                std::initializer_list<long long> ascending);
    static Polynomial constant(const Scalar& c);
    // x^m (m >= 0).
    static Polynomial x_power(const FieldSpec& field, int m);

    const FieldSpec& field() const { return field_; }

    bool is_zero() const { return coeffs_.empty(); }

    // Throws ZeroPolynomialError for the zero polynomial.
    int degree() const;

    // Coefficient of x^i (zero beyond the degree).
    Scalar coeff(int i) const;

    // Leading coefficient.  Throws ZeroPolynomialError for the zero polynomial.
    const Scalar& leading() const;

    bool is_monic() const;

    // Same polynomial scaled monic.  Throws ZeroPolynomialError on zero.
    Polynomial monic() const;

    Scalar eval(const Scalar& x) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // "x^2 - x - 1" style display (prime-field coefficients print as residues).
    std::string str() const;

private:
    void normalize();

    FieldSpec field_;
    std::vector<Scalar> coeffs_;
};

// Quotient and remainder with deg r < deg g.  Throws DivisionByZeroError when
// g == 0.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g);

// Monic gcd; gcd(0, 0) == 0.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

// Companion matrix of a monic polynomial of degree m >= 1: ones on the
// subdiagonal, the negated coefficients in the last column, so that the map
// sends e_i to e_{i+1} for i < m.  Throws NotMonicError / DegreeZeroError.
Matrix companion(const Polynomial& f);

// Factor f = x^m * g with g(0) != 0; returns (m, g).  Throws on the zero
// polynomial.
std::pair<int, Polynomial> strip_x_power(const Polynomial& f);

// f(A) by Horner's rule.  A square; the zero polynomial gives the zero matrix.
Matrix poly_at_matrix(const Polynomial& f, const Matrix& a);

}  // namespace unitnil

#endif  // UNITNIL_POLY_HPP
