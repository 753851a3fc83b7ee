#include "tropsl/error.hpp"
#include "tropsl/linalg.hpp"
#include "tropsl/polyhedral.hpp"

#include <algorithm>
#include <set>

namespace tropsl {

bool ConvexHull::contains(std::span<const Rational> x) const {
    if (x.size() != ambient_dim) throw DimensionError("hull membership: point has wrong dimension");
    for (const auto& e : equalities) {
        if (dot(e.a, x) != e.b) return false;
    }
    for (const auto& f : facets) {
        if (!f.satisfied_by(x)) return false;
    }
    return true;
}

// Facets of conv(P) are the extreme rays of the dual cone
// {y in R^(d+1) : y_0 + y'.p >= 0 for all p in P}; its lineality space
// gives the equations of the affine hull.
ConvexHull convex_hull(const std::vector<RationalVector>& input) {
    if (input.empty()) throw PreconditionError("convex_hull: no points");
    const std::size_t d = input.front().size();
    for (const auto& p : input) {
        if (p.size() != d) throw DimensionError("convex_hull: points of mixed dimension");
    }
    std::vector<RationalVector> points = input;
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::vector<RationalVector> lifted;
    for (const auto& p : points) {
        RationalVector h{Rational(1)};
        h.insert(h.end(), p.begin(), p.end());
        lifted.push_back(std::move(h));
    }
    ConeGenerators dual = double_description(d + 1, lifted);

    ConvexHull hull;
    hull.ambient_dim = d;
    std::vector<std::size_t> pivots;
    std::vector<RationalVector> eq = rref(dual.lineality, d + 1, &pivots);
    for (const auto& row : eq) {
        RationalVector a(row.begin() + 1, row.end());
        hull.equalities.push_back({a, -row[0], false});
    }
    hull.dimension = d - eq.size();

    std::set<RationalVector> facet_rows;
    for (const auto& r : dual.rays) {
        RationalVector y = primitive_direction(reduce_modulo(r, eq, pivots));
        if (is_zero_vector(std::span<const Rational>(y).subspan(1))) continue;  // 1 >= 0
        facet_rows.insert(std::move(y));
    }
    for (const auto& y : facet_rows) {
        hull.facets.push_back({RationalVector(y.begin() + 1, y.end()), -y[0], false});
    }

    // p is a vertex iff the facet normals tight at p together with the
    // affine equations have rank d.
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<RationalVector> tight = dual.lineality;
        for (const auto& y : facet_rows) {
            if (sgn(dot(y, lifted[i])) == 0) tight.push_back(y);
        }
        if (rank(tight, d + 1) == d) hull.vertices.push_back(points[i]);
    }
    return hull;
}

}  // namespace tropsl
