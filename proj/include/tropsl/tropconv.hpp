#pragma once

// Tropical convexity in the torus R^n / R(1,...,1): types of points relative
// to a finite configuration M, the polyhedra X_T, and hull membership.
//
// Types use the min-twins Gamma'_k = {x_k <= x_i}. Their bounded cells cover
// the min-plus hull of M. hull_membership is the max-plus hull; the two are
// exchanged by x -> -x, M -> -M.

#include "tropsl/execution.hpp"
#include "tropsl/polyhedral.hpp"
#include "tropsl/tropical.hpp"

#include <vector>

namespace tropsl {

class PointConfiguration {
public:
    // PreconditionError if empty, DimensionError on mixed lengths.
    explicit PointConfiguration(std::vector<RationalVector> points);

    std::size_t size() const { return points_.size(); }
    std::size_t dim() const { return points_.front().dim(); }
    const TorusPoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<TorusPoint>& points() const { return points_; }

    PointConfiguration negated() const;

private:
    std::vector<TorusPoint> points_;
};

// T[k] lists the (zero-based) indices i with v_i - x in Gamma'_k, ascending.
using TypeVector = std::vector<std::vector<std::size_t>>;

TypeVector type_of(std::span<const Rational> x, const PointConfiguration& m);

// {x in A : v_ik - x_k <= v_ij - x_j for all k, i in T_k, j}.
Polyhedron cell_X_T(const TypeVector& t, const PointConfiguration& m);

// Max-plus projection y = max_i (lambda_i + v_i), lambda_i = min_k (x_k - v_ik),
// canonicalized.
RationalVector max_projection(std::span<const Rational> x, const PointConfiguration& m);
// Min-plus projection y = min_i (lambda_i + v_i), lambda_i = max_k (x_k - v_ik).
RationalVector min_projection(std::span<const Rational> x, const PointConfiguration& m);

// x lies in the max-plus hull of M.
bool hull_membership(std::span<const Rational> x, const PointConfiguration& m);
// x lies in the min-plus hull of M.
bool min_hull_membership(std::span<const Rational> x, const PointConfiguration& m);

// x lies in a bounded cell X_T, decided by "every T_k of type(x) is nonempty".
bool in_bounded_cell(std::span<const Rational> x, const PointConfiguration& m);
// Same question decided geometrically: X_{type(x)} has trivial recession cone.
bool in_bounded_cell_geometric(std::span<const Rational> x, const PointConfiguration& m);

struct PointClass {
    TypeVector type;
    bool max_hull = false;
    bool min_hull = false;
    bool bounded_cell = false;

    bool operator==(const PointClass&) const = default;
};

// Gamma_k = {x in A : x_k >= x_i} (max) or Gamma'_k = {x_k <= x_i} (min).
enum class GammaVariant { max, min };
std::vector<Cone> gamma_cones(std::size_t n, GammaVariant variant);

// Classifies every point; OpenMP over points when exec is parallel.
std::vector<PointClass> classify_points(const std::vector<RationalVector>& xs, const PointConfiguration& m,
                                        Execution exec = Execution::serial);

}  // namespace tropsl
