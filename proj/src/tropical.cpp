#include "tropsl/tropical.hpp"

#include "tropsl/error.hpp"

namespace tropsl {

const Rational& TropicalScalar::value() const {
    if (!value_) throw PreconditionError("tropical scalar is -inf");
    return *value_;
}

bool operator==(const TropicalScalar& a, const TropicalScalar& b) {
    if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
    return *a.value_ == *b.value_;
}

bool operator<(const TropicalScalar& a, const TropicalScalar& b) {
    if (b.is_bottom()) return false;
    if (a.is_bottom()) return true;
    return *a.value_ < *b.value_;
}

std::string TropicalScalar::to_string() const { return is_bottom() ? "-inf" : format_rational(*value_); }

TropicalScalar TropicalScalar::parse(std::string_view text) {
    if (text == "-inf") return bottom();
    return TropicalScalar(parse_rational(text));
}

TropicalScalar trop_add(const TropicalScalar& a, const TropicalScalar& b) { return a < b ? b : a; }

TropicalScalar trop_mul(const TropicalScalar& a, const TropicalScalar& b) {
    if (a.is_bottom() || b.is_bottom()) return TropicalScalar::bottom();
    return TropicalScalar(Rational(a.value() + b.value()));
}

TropicalMatrix tropicalize_matrix(const FieldMatrix& g, const FieldConfig& cfg) {
    if (!g.square()) throw DimensionError("tropicalize_matrix: matrix is not square");
    TropicalMatrix m(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
            Valuation v = valuation(g(i, j), cfg);
            if (!v.is_infinite()) m(i, j) = TropicalScalar(Rational(-v.value()));
        }
    }
    return m;
}

RationalVector trop_apply(const TropicalMatrix& m, std::span<const Rational> x) {
    if (m.cols() != x.size()) throw DimensionError("trop_apply: matrix has " + std::to_string(m.cols()) +
                                                   " columns, vector has " + std::to_string(x.size()));
    RationalVector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        TropicalScalar acc = TropicalScalar::bottom();
        for (std::size_t j = 0; j < m.cols(); ++j) acc = trop_add(acc, trop_mul(m(i, j), TropicalScalar(x[j])));
        if (acc.is_bottom()) throw PreconditionError("trop_apply: row " + std::to_string(i) + " is entirely -inf");
        y[i] = acc.value();
    }
    return y;
}

RationalVector trop_scale(const Rational& a, std::span<const Rational> x) {
    RationalVector y(x.begin(), x.end());
    for (auto& v : y) v += a;
    return y;
}

TorusPoint::TorusPoint(std::span<const Rational> coords) : coords_(coords.begin(), coords.end()) {
    if (coords_.empty()) throw DimensionError("torus point needs at least one coordinate");
    Rational mean = 0;
    for (const auto& c : coords_) mean += c;
    mean /= static_cast<long>(coords_.size());
    for (auto& c : coords_) c -= mean;
}

TorusPoint torus_canonicalize(std::span<const Rational> x) { return TorusPoint(x); }

}  // namespace tropsl
