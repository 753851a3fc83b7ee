#include "tropsl/valued_field.hpp"

#include "tropsl/error.hpp"

#include <cctype>
#include <sstream>

namespace tropsl {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& c) {
    if (sgn(c) != 0) coeffs_.push_back(c);
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

long Polynomial::order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) != 0) return static_cast<long>(k);
    }
    return -1;
}

Rational Polynomial::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.trim();
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    Polynomial rem = a;
    std::vector<Rational> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        std::size_t shift = rem.degree() - b.degree();
        Rational c = rem.leading() / b.leading();
        quot[shift] = c;
        rem = rem - monomial(c, shift) * b;
    }
    return {Polynomial(std::move(quot)), rem};
}

// Monic remainders keep the rational coefficients from blowing up.
Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    if (!a.is_zero()) a = a.scaled(1 / a.leading());
    if (!b.is_zero()) b = b.scaled(1 / b.leading());
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        if (!r.is_zero()) r = r.scaled(1 / r.leading());
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (sgn(c) < 0) os << '-';
        else if (!first) os << '+';
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 't';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num, den);
    num = Polynomial::divmod(num, g).first;
    den = Polynomial::divmod(den, g).first;
    Rational lead = den.leading();
    num_ = num.scaled(1 / lead);
    den_ = den.scaled(1 / lead);
}

RationalFunction RationalFunction::t_power(long k) {
    if (k >= 0) return RationalFunction(Polynomial::monomial(1, k));
    return RationalFunction(Polynomial(Rational(1)), Polynomial::monomial(1, -k));
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Reduced) {
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial(Rational(1));
        return;
    }
    Rational lead = den.leading();
    num_ = lead == 1 ? std::move(num) : num.scaled(1 / lead);
    den_ = lead == 1 ? std::move(den) : den.scaled(1 / lead);
}

namespace {

bool is_one(const Polynomial& p) { return p.degree() == 0 && p.leading() == 1; }

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    return is_one(b) ? a : Polynomial::divmod(a, b).first;
}

}  // namespace

// Henrici's formulas: with reduced inputs only gcds of the small factors are needed.
RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    using R = RationalFunction::Reduced;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (is_one(a.den_) && is_one(b.den_)) return RationalFunction(a.num_ + b.num_, a.den_, R{});
    Polynomial g = Polynomial::gcd(a.den_, b.den_);
    if (is_one(g)) return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, R{});
    Polynomial da = exact_quotient(a.den_, g), db = exact_quotient(b.den_, g);
    Polynomial num = a.num_ * db + b.num_ * da;
    if (num.is_zero()) return RationalFunction();
    Polynomial h = Polynomial::gcd(num, g);
    return RationalFunction(exact_quotient(num, h), da * exact_quotient(b.den_, h), R{});
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    using R = RationalFunction::Reduced;
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    Polynomial g1 = Polynomial::gcd(a.num_, b.den_), g2 = Polynomial::gcd(b.num_, a.den_);
    return RationalFunction(exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2),
                            exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1), R{});
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    return RationalFunction(den_, num_, Reduced{});
}

std::string RationalFunction::to_string() const {
    if (den_ == Polynomial(Rational(1))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// FieldConfig

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

long p_adic_order(Integer n, long p) {
    long k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

}  // namespace

FieldConfig FieldConfig::p_adic(long p) {
    if (!is_prime(p)) throw PreconditionError("p-adic field needs a prime, got " + std::to_string(p));
    return FieldConfig(FieldKind::p_adic, p);
}

FieldConfig FieldConfig::rational_functions() { return FieldConfig(FieldKind::t_adic, 0); }

FieldConfig FieldConfig::parse(std::string_view text) {
    if (text == "qt") return rational_functions();
    if (text.substr(0, 3) == "qp:") {
        std::string digits(text.substr(3));
        if (digits.empty() || digits.size() > 9) throw ParseError("malformed field '" + std::string(text) + "'");
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw ParseError("malformed field '" + std::string(text) + "'");
            }
        }
        long p = std::stol(digits);
        if (!is_prime(p)) throw ParseError("field 'qp:" + digits + "' needs a prime");
        return p_adic(p);
    }
    throw ParseError("unknown field '" + std::string(text) + "', expected qp:<prime> or qt");
}

std::string FieldConfig::to_string() const {
    return kind_ == FieldKind::t_adic ? "qt" : "qp:" + std::to_string(prime_);
}

// ---------------------------------------------------------------------------
// Valuation

const Rational& Valuation::value() const {
    if (!value_) throw PreconditionError("valuation is infinite");
    return *value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
    return Valuation(*a.value_ + *b.value_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    int c = cmp(*a.value_, *b.value_);
    return c <=> 0;
}

bool operator==(const Valuation& a, const Valuation& b) { return (a <=> b) == 0; }

std::string Valuation::to_string() const { return is_infinite() ? "inf" : format_rational(*value_); }

// ---------------------------------------------------------------------------
// ValuedElement

bool ValuedElement::is_zero() const {
    if (auto q = std::get_if<Rational>(&rep_)) return sgn(*q) == 0;
    return std::get<RationalFunction>(rep_).is_zero();
}

bool ValuedElement::is_one() const {
    if (auto q = std::get_if<Rational>(&rep_)) return *q == 1;
    return std::get<RationalFunction>(rep_) == RationalFunction(Rational(1));
}

const Rational& ValuedElement::as_rational() const {
    if (auto q = std::get_if<Rational>(&rep_)) return *q;
    throw PreconditionError("element is a rational function, not a rational");
}

const RationalFunction& ValuedElement::as_function() const {
    if (auto f = std::get_if<RationalFunction>(&rep_)) return *f;
    throw PreconditionError("element is a rational, not a rational function");
}

namespace {

template <class Op>
ValuedElement combine(const ValuedElement& a, const ValuedElement& b, Op op) {
    if (a.kind() != b.kind()) throw PreconditionError("mixing elements of different fields");
    if (a.kind() == FieldKind::p_adic) return ValuedElement(Rational(op(a.as_rational(), b.as_rational())));
    return ValuedElement(RationalFunction(op(a.as_function(), b.as_function())));
}

}  // namespace

ValuedElement operator+(const ValuedElement& a, const ValuedElement& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

ValuedElement operator-(const ValuedElement& a, const ValuedElement& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

ValuedElement operator*(const ValuedElement& a, const ValuedElement& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

ValuedElement operator/(const ValuedElement& a, const ValuedElement& b) { return a * b.inverse(); }

ValuedElement ValuedElement::operator-() const {
    if (auto q = std::get_if<Rational>(&rep_)) return ValuedElement(Rational(-*q));
    return ValuedElement(-std::get<RationalFunction>(rep_));
}

ValuedElement ValuedElement::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    if (auto q = std::get_if<Rational>(&rep_)) return ValuedElement(Rational(1 / *q));
    return ValuedElement(std::get<RationalFunction>(rep_).inverse());
}

std::string ValuedElement::to_string() const {
    if (auto q = std::get_if<Rational>(&rep_)) return format_rational(*q);
    return std::get<RationalFunction>(rep_).to_string();
}

ValuedElement make_element(const FieldConfig& cfg, const Rational& q) {
    if (cfg.kind() == FieldKind::p_adic) return ValuedElement(q);
    return ValuedElement(RationalFunction(q));
}

ValuedElement make_element(const FieldConfig& cfg, long q) { return make_element(cfg, Rational(q)); }

// ---------------------------------------------------------------------------
// Parsing of rational-function expressions over t.

namespace {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("malformed element '" + std::string(text_) + "': " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Integer integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
            fail("floating point literals are not accepted");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    RationalFunction expr() {
        RationalFunction acc;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = unary();
        while (true) {
            if (accept('*')) acc = acc * unary();
            else if (accept('/')) {
                RationalFunction d = unary();
                if (d.is_zero()) fail("division by zero");
                acc = acc * d.inverse();
            } else {
                return acc;
            }
        }
    }

    RationalFunction unary() {
        if (accept('-')) return -unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = primary();
        if (!accept('^')) return base;
        Integer e = integer();
        if (e > 64) fail("exponent too large");
        RationalFunction r(Rational(1));
        for (long k = 0; k < e.get_si(); ++k) r = r * base;
        return r;
    }

    RationalFunction primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept('(')) {
            RationalFunction r = expr();
            if (!accept(')')) fail("missing ')'");
            return r;
        }
        if (accept('t')) return RationalFunction::t_power(1);
        return RationalFunction(Rational(integer()));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ValuedElement parse_element(const FieldConfig& cfg, std::string_view text) {
    if (cfg.kind() == FieldKind::p_adic) return ValuedElement(parse_rational(text));
    return ValuedElement(ExpressionParser(text).parse());
}

// ---------------------------------------------------------------------------

Valuation valuation(const ValuedElement& a, const FieldConfig& cfg) {
    if (a.kind() != cfg.kind()) throw PreconditionError("element does not belong to field " + cfg.to_string());
    if (a.is_zero()) return Valuation::infinity();
    if (cfg.kind() == FieldKind::p_adic) {
        const Rational& q = a.as_rational();
        long v = p_adic_order(abs(q.get_num()), cfg.prime()) - p_adic_order(q.get_den(), cfg.prime());
        return Valuation(Rational(v));
    }
    const RationalFunction& f = a.as_function();
    return Valuation(Rational(f.numerator().order() - f.denominator().order()));
}

ValuedElement field_arith(const ValuedElement& a, const ValuedElement& b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::mul: return a * b;
        case FieldOp::inv: return a.inverse();
        case FieldOp::neg: return -a;
    }
    throw PreconditionError("unknown field operation");
}

FieldMatrix identity_matrix(const FieldConfig& cfg, std::size_t n) {
    FieldMatrix m(n, n, make_element(cfg, 0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = make_element(cfg, 1);
    return m;
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
    if (a.rows() == 0 || b.cols() == 0) return FieldMatrix(a.rows(), b.cols());
    FieldMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            ValuedElement s = a(i, 0) * b(0, j);
            for (std::size_t k = 1; k < a.cols(); ++k) s = s + a(i, k) * b(k, j);
            c(i, j) = s;
        }
    }
    return c;
}

namespace {

ValuedElement one_like(const ValuedElement& x) {
    return x.kind() == FieldKind::p_adic ? ValuedElement(Rational(1)) : ValuedElement(RationalFunction(Rational(1)));
}

}  // namespace

ValuedElement matrix_det(const FieldMatrix& g) {
    if (!g.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = g.rows();
    if (n == 0) throw DimensionError("determinant of an empty matrix");
    FieldMatrix a = g;
    ValuedElement det = one_like(a(0, 0));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return det - det;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det = det * a(col, col);
        ValuedElement inv = a(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            ValuedElement f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) = a(i, j) - f * a(col, j);
        }
    }
    return det;
}

FieldMatrix matrix_inverse(const FieldMatrix& g) {
    if (!g.square() || g.rows() == 0) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = g.rows();
    FieldMatrix a = g;
    ValuedElement one = one_like(g(0, 0));
    FieldMatrix inv(n, n, one - one);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = one;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw PreconditionError("matrix is singular");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(pivot, j), a(col, j));
            std::swap(inv(pivot, j), inv(col, j));
        }
        ValuedElement s = a(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = a(col, j) * s;
            inv(col, j) = inv(col, j) * s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            ValuedElement f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(col, j);
                inv(i, j) = inv(i, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

bool is_integral(const FieldMatrix& g, const FieldConfig& cfg) {
    const Valuation zero(Rational(0));
    for (const auto& x : g.data()) {
        if (valuation(x, cfg) < zero) return false;
    }
    return true;
}

}  // namespace tropsl
