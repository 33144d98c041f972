#include "unitnil/poly.hpp"

#include <sstream>

namespace unitnil {

Polynomial::Polynomial(const FieldSpec& field) : field_(field) {}

Polynomial::Polynomial(const FieldSpec& field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (const Scalar& c : coeffs_) {
        if (c.field() != field_) {
            throw MixedFieldsError("coefficient field does not match polynomial field");
        }
    }
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_ints(const FieldSpec& field,
                                 std::initializer_list<long long> ascending) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(ascending.size());
    for (long long v : ascending) coeffs.push_back(Scalar::of_int(field, v));
    return Polynomial(field, std::move(coeffs));
}

Polynomial Polynomial::constant(const Scalar& c) {
    return Polynomial(c.field(), {c});
}

Polynomial Polynomial::x_power(const FieldSpec& field, int m) {
    if (m < 0) throw InvalidArgumentError("x_power needs m >= 0");
    std::vector<Scalar> coeffs(static_cast<std::size_t>(m) + 1, Scalar::zero(field));
    coeffs.back() = Scalar::one(field);
    return Polynomial(field, std::move(coeffs));
}

int Polynomial::degree() const {
    if (is_zero()) throw ZeroPolynomialError("zero polynomial has no degree");
    return static_cast<int>(coeffs_.size()) - 1;
}

Scalar Polynomial::coeff(int i) const {
    if (i < 0) throw InvalidArgumentError("negative coefficient index");
    if (i >= static_cast<int>(coeffs_.size())) return Scalar::zero(field_);
    return coeffs_[static_cast<std::size_t>(i)];
}

const Scalar& Polynomial::leading() const {
    if (is_zero()) throw ZeroPolynomialError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Polynomial::is_monic() const { return !is_zero() && leading().is_one(); }

Polynomial Polynomial::monic() const {
    Scalar inv = leading().inverse();
    std::vector<Scalar> coeffs;
    coeffs.reserve(coeffs_.size());
    for (const Scalar& c : coeffs_) coeffs.push_back(c * inv);
    return Polynomial(field_, std::move(coeffs));
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (field_ != other.field_) throw MixedFieldsError("polynomials over different fields");
    std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
    std::vector<Scalar> coeffs;
    coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        coeffs.push_back(coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i)));
    }
    return Polynomial(field_, std::move(coeffs));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    if (field_ != other.field_) throw MixedFieldsError("polynomials over different fields");
    std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
    std::vector<Scalar> coeffs;
    coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        coeffs.push_back(coeff(static_cast<int>(i)) - other.coeff(static_cast<int>(i)));
    }
    return Polynomial(field_, std::move(coeffs));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (field_ != other.field_) throw MixedFieldsError("polynomials over different fields");
    if (is_zero() || other.is_zero()) return Polynomial(field_);
    std::vector<Scalar> coeffs(coeffs_.size() + other.coeffs_.size() - 1,
                               Scalar::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            coeffs[i + j] = coeffs[i + j] + coeffs_[i] * other.coeffs_[j];
        }
    }
    return Polynomial(field_, std::move(coeffs));
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (field_ != other.field_) throw MixedFieldsError("polynomials over different fields");
    if (coeffs_.size() != other.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != other.coeffs_[i]) return false;
    }
    return true;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Scalar c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        if (negative) cs = cs.substr(1);
        bool coeff_is_unit = (cs == "1");
        if (i == 0) {
            out << cs;
        } else {
            if (!coeff_is_unit) out << cs << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g) {
    if (f.field() != g.field()) throw MixedFieldsError("polynomials over different fields");
    if (g.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    const FieldSpec& field = f.field();
    if (f.is_zero()) return {Polynomial(field), Polynomial(field)};
    int dg = g.degree();
    if (f.degree() < dg) return {Polynomial(field), f};

    std::vector<Scalar> rem;
    rem.reserve(static_cast<std::size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) rem.push_back(f.coeff(i));
    std::vector<Scalar> quot(static_cast<std::size_t>(f.degree() - dg) + 1,
                             Scalar::zero(field));
    Scalar lead_inv = g.leading().inverse();
    for (int i = f.degree() - dg; i >= 0; --i) {
        Scalar factor = rem[static_cast<std::size_t>(i + dg)] * lead_inv;
        quot[static_cast<std::size_t>(i)] = factor;
        if (factor.is_zero()) continue;
        for (int j = 0; j <= dg; ++j) {
            rem[static_cast<std::size_t>(i + j)] =
                rem[static_cast<std::size_t>(i + j)] - factor * g.coeff(j);
        }
    }
    rem.erase(rem.begin() + dg, rem.end());
    return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    if (f.field() != g.field()) throw MixedFieldsError("polynomials over different fields");
    Polynomial a = f;
    Polynomial b = g;
    while (!b.is_zero()) {
        Polynomial r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Matrix companion(const Polynomial& f) {
    if (f.is_zero()) throw ZeroPolynomialError("companion of the zero polynomial");
    if (!f.is_monic()) throw NotMonicError("companion requires a monic polynomial");
    if (f.degree() < 1) throw DegreeZeroError("companion requires degree >= 1");
    int m = f.degree();
    Matrix c(f.field(), m, m);
    Scalar one = Scalar::one(f.field());
    for (int i = 0; i + 1 < m; ++i) {
        c.set(i + 1, i, one);
    }
    for (int i = 0; i < m; ++i) {
        c.set(i, m - 1, -f.coeff(i));
    }
    return c;
}

std::pair<int, Polynomial> strip_x_power(const Polynomial& f) {
    if (f.is_zero()) throw ZeroPolynomialError("cannot strip x-power from zero");
    int m = 0;
    while (f.coeff(m).is_zero()) ++m;
    std::vector<Scalar> coeffs;
    coeffs.reserve(static_cast<std::size_t>(f.degree() - m) + 1);
    for (int i = m; i <= f.degree(); ++i) coeffs.push_back(f.coeff(i));
    return {m, Polynomial(f.field(), std::move(coeffs))};
}

Matrix poly_at_matrix(const Polynomial& f, const Matrix& a) {
    if (!a.is_square()) throw NotSquareError("poly_at_matrix requires a square matrix");
    if (f.field() != a.field()) throw MixedFieldsError("polynomial and matrix fields differ");
    int n = a.rows();
    Matrix acc(a.field(), n, n);
    if (f.is_zero()) return acc;
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * a;
        Scalar c = f.coeff(i);
        if (!c.is_zero()) {
            for (int d = 0; d < n; ++d) acc.set(d, d, acc.at(d, d) + c);
        }
    }
    return acc;
}

}  // namespace unitnil
