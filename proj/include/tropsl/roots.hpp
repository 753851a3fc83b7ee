#pragma once

// Bases of the type A_{n-1} root system {a_ij = e_i - e_j}. A basis is
// determined by an ordering (o_1, ..., o_n) of the coordinates; its simple
// roots are a_{o_1 o_2}, ..., a_{o_{n-1} o_n}. Indices are zero-based.

#include "tropsl/rational.hpp"

#include <string>
#include <vector>

namespace tropsl {

using Exponent = std::vector<long>;

class Basis {
public:
    // PreconditionError unless `order` is a permutation of 0..n-1.
    explicit Basis(std::vector<int> order);
    static Basis standard(std::size_t n);

    std::size_t dim() const { return order_.size(); }
    const std::vector<int>& order() const { return order_; }
    std::vector<RationalVector> simple_roots() const;

    // Coefficients of d in the simple roots, valid when d sums to zero:
    // the k-th coefficient is the partial sum d_{o_1} + ... + d_{o_k}.
    std::vector<long> simple_root_coordinates(const Exponent& d) const;
    // d is a nonnegative integer combination of the simple roots.
    bool is_nonnegative_combination(const Exponent& d) const;

    // The basis sigma(Delta): order (sigma(o_1), ..., sigma(o_n)).
    Basis permuted(const std::vector<int>& sigma) const;

    std::string to_string() const;

    bool operator==(const Basis&) const = default;

private:
    std::vector<int> order_;
};

// All n! bases, in lexicographic order of their orderings.
std::vector<Basis> enumerate_bases(std::size_t n);

// (sigma x)_{sigma(i)} = x_i.
RationalVector permute_coordinates(const std::vector<int>& sigma, const RationalVector& x);
Exponent permute_coordinates(const std::vector<int>& sigma, const Exponent& x);

}  // namespace tropsl
