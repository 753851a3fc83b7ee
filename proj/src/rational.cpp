#include "tropsl/rational.hpp"

#include "tropsl/error.hpp"

#include <cctype>

namespace tropsl {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

RationalVector parse_rational_list(std::string_view text) {
    RationalVector out;
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty rational list");
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        out.push_back(parse_rational(s.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero_vector(std::span<const Rational> v) {
    for (const auto& x : v) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

RationalVector primitive_direction(std::span<const Rational> v) {
    Integer l = 1;
    for (const auto& x : v) {
        if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    Integer g = 0;
    for (const auto& x : v) {
        Integer n = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    RationalVector out(v.size());
    if (g == 0) return out;
    for (size_t i = 0; i < v.size(); ++i) {
        Integer n = v[i].get_num() * (l / v[i].get_den());
        out[i] = Rational(n / g);
    }
    return out;
}

}  // namespace tropsl
