#pragma once

// The (max,+) semiring with bottom element -inf, tropical matrices and
// points of the tropical torus R^n / R(1,...,1).

#include "tropsl/matrix.hpp"
#include "tropsl/rational.hpp"
#include "tropsl/valued_field.hpp"

#include <optional>
#include <span>
#include <string>

namespace tropsl {

class TropicalScalar {
public:
    // The bottom element -inf.
    TropicalScalar() = default;
    TropicalScalar(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit lift
    TropicalScalar(long v) : value_(Rational(v)) {}        // NOLINT
    static TropicalScalar bottom() { return {}; }

    bool is_bottom() const { return !value_.has_value(); }
    // PreconditionError on bottom.
    const Rational& value() const;

    friend bool operator==(const TropicalScalar& a, const TropicalScalar& b);
    // -inf below every rational.
    friend bool operator<(const TropicalScalar& a, const TropicalScalar& b);

    // "-inf" or a rational string.
    std::string to_string() const;
    static TropicalScalar parse(std::string_view text);

private:
    std::optional<Rational> value_;
};

// a (+) b = max(a, b)
TropicalScalar trop_add(const TropicalScalar& a, const TropicalScalar& b);
// a (.) b = a + b, absorbing at -inf
TropicalScalar trop_mul(const TropicalScalar& a, const TropicalScalar& b);

using TropicalMatrix = Matrix<TropicalScalar>;

// Entry (i,j) is -v(g_ij); zero entries become -inf.
TropicalMatrix tropicalize_matrix(const FieldMatrix& g, const FieldConfig& cfg);

// y_i = max_j (M_ij + x_j). PreconditionError if some row is all -inf.
RationalVector trop_apply(const TropicalMatrix& m, std::span<const Rational> x);

// a (.) x, coordinatewise translation by a.
RationalVector trop_scale(const Rational& a, std::span<const Rational> x);

// A point of the tropical torus, stored as its mean-zero representative.
class TorusPoint {
public:
    TorusPoint() = default;
    // Canonicalizes: subtracts the arithmetic mean.
    explicit TorusPoint(std::span<const Rational> coords);

    std::size_t dim() const { return coords_.size(); }
    const RationalVector& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const TorusPoint&) const = default;

private:
    RationalVector coords_;
};

TorusPoint torus_canonicalize(std::span<const Rational> x);

}  // namespace tropsl
