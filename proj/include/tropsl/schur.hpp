#pragma once

// Partitions, semistandard Young tableaux, Kostka numbers and Schur
// polynomials S_lambda(z_1, ..., z_n), with the bialternant formula as an
// independent evaluation route.

#include "tropsl/execution.hpp"
#include "tropsl/rational.hpp"
#include "tropsl/roots.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tropsl {

class Partition {
public:
    // ParseError unless parts are nonnegative and weakly decreasing.
    explicit Partition(std::vector<long> parts);
    // "2,1,0"
    static Partition parse(std::string_view text);
    // (n, n-1, ..., 1)
    static Partition staircase(std::size_t n);
    // (1, 0, ..., 0)
    static Partition standard_rep(std::size_t n);

    std::size_t length() const { return parts_.size(); }
    long degree() const;
    const std::vector<long>& parts() const { return parts_; }
    long operator[](std::size_t i) const { return parts_[i]; }
    // Pads with zeros to n parts; DimensionError if that would drop a nonzero part.
    Partition padded(std::size_t n) const;
    Partition shifted(long m) const;
    // True when all parts agree (the trivial representation).
    bool is_rectangular() const;

    std::string to_string() const;
    bool operator==(const Partition&) const = default;

private:
    std::vector<long> parts_;
};

// Partial sums of lambda dominate those of sort(mu) and the degrees agree.
bool dominates(const Partition& lambda, const Exponent& mu);

// Number of SSYT of shape lambda and content mu. Depends only on the
// multiset of mu's entries. PreconditionError if |mu| != |lambda| or some
// entry of mu is negative.
std::int64_t kostka(const Partition& lambda, const Exponent& mu);

// Exponent vector -> coefficient; only nonzero coefficients are stored.
using SchurExpansion = std::map<Exponent, std::int64_t>;

SchurExpansion schur_expand(const Partition& lambda, std::size_t n, Execution exec = Execution::serial);

// Evaluates an expansion at a rational point.
Rational evaluate(const SchurExpansion& s, std::span<const Rational> z);

// det(z_j^(lambda_i + n - i)) / det(z_j^(n - i)). PreconditionError on
// repeated z values.
Rational bialternant_eval(const Partition& lambda, std::span<const Rational> z);

// Support of schur_expand, sorted lexicographically.
std::vector<Exponent> weights_of(const Partition& lambda, std::size_t n);

// The unique weight mu0 with mu0 - mu a nonnegative combination of the
// simple roots of `basis` for every weight mu. PreconditionError if none.
Exponent highest_weight(std::span<const Exponent> weights, const Basis& basis);

// All exponent vectors of n nonnegative entries summing to degree, in
// lexicographically decreasing order.
std::vector<Exponent> compositions(long degree, std::size_t n);

std::string format_exponent(const Exponent& e);

}  // namespace tropsl
