#pragma once

// Exact arithmetic in two non-Archimedean valued fields:
//
//   * Q with the p-adic valuation (kind p_adic), elements are rationals;
//   * Q(t) with the t-adic valuation (kind t_adic), elements are reduced
//     fractions of polynomials with rational coefficients.
//
// Both value groups are Z. The residue field of Q(t) is Q, so every
// nonzero integer has t-adic valuation 0.

#include "tropsl/matrix.hpp"
#include "tropsl/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tropsl {

// Polynomial in t over Q, coefficients in increasing degree, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    explicit Polynomial(const Rational& c);

    static Polynomial monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    // Largest k with t^k dividing the polynomial; undefined for zero.
    long order() const;
    const Rational& leading() const { return coeffs_.back(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational evaluate(const Rational& t) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;

    // Euclidean division; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    // Monic gcd (zero only if both arguments are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    bool operator==(const Polynomial&) const = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Reduced fraction num/den with monic denominator; zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    explicit RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction t_power(long k);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    RationalFunction inverse() const;

    bool operator==(const RationalFunction&) const = default;

    std::string to_string() const;

private:
    struct Reduced {};
    // num/den already coprime; only the leading coefficient of den is fixed up.
    RationalFunction(Polynomial num, Polynomial den, Reduced);

    Polynomial num_;
    Polynomial den_;
};

enum class FieldKind { p_adic, t_adic };

class FieldConfig {
public:
    // Throws PreconditionError unless p is prime.
    static FieldConfig p_adic(long p);
    static FieldConfig rational_functions();
    // "qp:<prime>" or "qt".
    static FieldConfig parse(std::string_view text);

    FieldKind kind() const { return kind_; }
    long prime() const { return prime_; }
    std::string to_string() const;

    bool operator==(const FieldConfig&) const = default;

private:
    FieldConfig(FieldKind kind, long prime) : kind_(kind), prime_(prime) {}
    FieldKind kind_;
    long prime_;
};

// Either a rational or +infinity (the valuation of zero).
class Valuation {
public:
    Valuation() : value_(std::nullopt) {}
    explicit Valuation(Rational v) : value_(std::move(v)) {}
    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& value() const;

    friend Valuation operator+(const Valuation& a, const Valuation& b);
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
    friend bool operator==(const Valuation& a, const Valuation& b);

    std::string to_string() const;

private:
    std::optional<Rational> value_;
};

class ValuedElement {
public:
    ValuedElement() : rep_(Rational(0)) {}
    explicit ValuedElement(Rational q) : rep_(std::move(q)) {}
    explicit ValuedElement(RationalFunction f) : rep_(std::move(f)) {}

    FieldKind kind() const { return std::holds_alternative<Rational>(rep_) ? FieldKind::p_adic : FieldKind::t_adic; }
    bool is_zero() const;
    bool is_one() const;

    const Rational& as_rational() const;
    const RationalFunction& as_function() const;

    friend ValuedElement operator+(const ValuedElement& a, const ValuedElement& b);
    friend ValuedElement operator-(const ValuedElement& a, const ValuedElement& b);
    friend ValuedElement operator*(const ValuedElement& a, const ValuedElement& b);
    friend ValuedElement operator/(const ValuedElement& a, const ValuedElement& b);
    ValuedElement operator-() const;
    // PreconditionError on zero.
    ValuedElement inverse() const;

    bool operator==(const ValuedElement&) const = default;

    std::string to_string() const;

private:
    std::variant<Rational, RationalFunction> rep_;
};

enum class FieldOp { add, mul, inv, neg };

// Builds field elements in the representation matching cfg.
ValuedElement make_element(const FieldConfig& cfg, const Rational& q);
ValuedElement make_element(const FieldConfig& cfg, long q);
ValuedElement parse_element(const FieldConfig& cfg, std::string_view text);

Valuation valuation(const ValuedElement& a, const FieldConfig& cfg);

// inv and neg ignore b.
ValuedElement field_arith(const ValuedElement& a, const ValuedElement& b, FieldOp op);

using FieldMatrix = Matrix<ValuedElement>;

FieldMatrix identity_matrix(const FieldConfig& cfg, std::size_t n);
FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b);
// Gaussian elimination with exact pivots; requires a square matrix.
ValuedElement matrix_det(const FieldMatrix& g);
// PreconditionError if singular.
FieldMatrix matrix_inverse(const FieldMatrix& g);
bool is_integral(const FieldMatrix& g, const FieldConfig& cfg);

}  // namespace tropsl
