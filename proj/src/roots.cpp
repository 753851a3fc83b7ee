#include "tropsl/roots.hpp"

#include "tropsl/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tropsl {

Basis::Basis(std::vector<int> order) : order_(std::move(order)) {
    std::vector<int> sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i)) throw PreconditionError("basis ordering is not a permutation");
    }
    if (order_.size() < 2) throw PreconditionError("root system needs n >= 2");
}

Basis Basis::standard(std::size_t n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return Basis(std::move(order));
}

std::vector<RationalVector> Basis::simple_roots() const {
    std::vector<RationalVector> roots;
    for (std::size_t k = 0; k + 1 < order_.size(); ++k) {
        RationalVector a(order_.size());
        a[order_[k]] = 1;
        a[order_[k + 1]] = -1;
        roots.push_back(std::move(a));
    }
    return roots;
}

std::vector<long> Basis::simple_root_coordinates(const Exponent& d) const {
    if (d.size() != order_.size()) throw DimensionError("weight and basis dimensions differ");
    std::vector<long> c;
    long partial = 0;
    for (std::size_t k = 0; k + 1 < order_.size(); ++k) {
        partial += d[order_[k]];
        c.push_back(partial);
    }
    return c;
}

bool Basis::is_nonnegative_combination(const Exponent& d) const {
    if (std::accumulate(d.begin(), d.end(), 0L) != 0) return false;
    for (long c : simple_root_coordinates(d)) {
        if (c < 0) return false;
    }
    return true;
}

Basis Basis::permuted(const std::vector<int>& sigma) const {
    std::vector<int> order(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) order[k] = sigma.at(order_[k]);
    return Basis(std::move(order));
}

std::string Basis::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k + 1 < order_.size(); ++k) {
        if (k) os << ',';
        os << 'a' << order_[k] + 1 << '_' << order_[k + 1] + 1;
    }
    os << '}';
    return os.str();
}

std::vector<Basis> enumerate_bases(std::size_t n) {
    if (n < 2) throw PreconditionError("enumerate_bases needs n >= 2");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<Basis> out;
    do {
        out.emplace_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

RationalVector permute_coordinates(const std::vector<int>& sigma, const RationalVector& x) {
    RationalVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[sigma.at(i)] = x[i];
    return y;
}

Exponent permute_coordinates(const std::vector<int>& sigma, const Exponent& x) {
    Exponent y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[sigma.at(i)] = x[i];
    return y;
}

}  // namespace tropsl
