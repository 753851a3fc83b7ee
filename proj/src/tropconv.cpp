#include "tropsl/tropconv.hpp"

#include "tropsl/error.hpp"

#include <algorithm>
#include <exception>

namespace tropsl {

namespace {

void check_point(std::span<const Rational> x, const PointConfiguration& m) {
    if (x.size() != m.dim()) throw DimensionError("point has wrong dimension for the configuration");
}

RationalVector canonical(const RationalVector& y) { return torus_canonicalize(y).coords(); }

}  // namespace

PointConfiguration::PointConfiguration(std::vector<RationalVector> points) {
    if (points.empty()) throw PreconditionError("point configuration is empty");
    for (const auto& p : points) {
        if (p.size() != points.front().size()) throw DimensionError("point configuration has mixed dimensions");
        if (p.empty()) throw DimensionError("point configuration has zero-dimensional points");
        points_.emplace_back(p);
    }
}

PointConfiguration PointConfiguration::negated() const {
    std::vector<RationalVector> neg;
    for (const auto& p : points_) {
        RationalVector q = p.coords();
        for (auto& c : q) c = -c;
        neg.push_back(std::move(q));
    }
    return PointConfiguration(std::move(neg));
}

TypeVector type_of(std::span<const Rational> x, const PointConfiguration& m) {
    check_point(x, m);
    const std::size_t n = m.dim();
    const RationalVector cx = torus_canonicalize(x).coords();
    TypeVector t(n);
    for (std::size_t i = 0; i < m.size(); ++i) {
        RationalVector d(n);
        for (std::size_t k = 0; k < n; ++k) d[k] = m[i][k] - cx[k];
        const Rational lo = *std::min_element(d.begin(), d.end());
        for (std::size_t k = 0; k < n; ++k) {
            if (d[k] == lo) t[k].push_back(i);
        }
    }
    return t;
}

Polyhedron cell_X_T(const TypeVector& t, const PointConfiguration& m) {
    const std::size_t n = m.dim();
    if (t.size() != n) throw DimensionError("type vector has wrong length");
    std::vector<LinearConstraint> ineq;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i : t[k]) {
            if (i >= m.size()) throw DimensionError("type vector refers to a missing point");
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                // x_k - x_j >= v_ik - v_ij
                RationalVector a(n);
                a[k] = 1;
                a[j] = -1;
                ineq.push_back({std::move(a), m[i][k] - m[i][j], false});
            }
        }
    }
    return Polyhedron(n, std::move(ineq), {{RationalVector(n, Rational(1)), 0, false}});
}

RationalVector max_projection(std::span<const Rational> x, const PointConfiguration& m) {
    check_point(x, m);
    const std::size_t n = m.dim();
    RationalVector y;
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rational lambda = x[0] - m[i][0];
        for (std::size_t k = 1; k < n; ++k) lambda = std::min<Rational>(lambda, x[k] - m[i][k]);
        if (i == 0) {
            y.resize(n);
            for (std::size_t k = 0; k < n; ++k) y[k] = lambda + m[i][k];
        } else {
            for (std::size_t k = 0; k < n; ++k) y[k] = std::max<Rational>(y[k], lambda + m[i][k]);
        }
    }
    return canonical(y);
}

RationalVector min_projection(std::span<const Rational> x, const PointConfiguration& m) {
    check_point(x, m);
    const std::size_t n = m.dim();
    RationalVector y;
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rational lambda = x[0] - m[i][0];
        for (std::size_t k = 1; k < n; ++k) lambda = std::max<Rational>(lambda, x[k] - m[i][k]);
        if (i == 0) {
            y.resize(n);
            for (std::size_t k = 0; k < n; ++k) y[k] = lambda + m[i][k];
        } else {
            for (std::size_t k = 0; k < n; ++k) y[k] = std::min<Rational>(y[k], lambda + m[i][k]);
        }
    }
    return canonical(y);
}

bool hull_membership(std::span<const Rational> x, const PointConfiguration& m) {
    return max_projection(x, m) == torus_canonicalize(x).coords();
}

bool min_hull_membership(std::span<const Rational> x, const PointConfiguration& m) {
    return min_projection(x, m) == torus_canonicalize(x).coords();
}

bool in_bounded_cell(std::span<const Rational> x, const PointConfiguration& m) {
    const TypeVector t = type_of(x, m);
    return std::none_of(t.begin(), t.end(), [](const auto& tk) { return tk.empty(); });
}

bool in_bounded_cell_geometric(std::span<const Rational> x, const PointConfiguration& m) {
    // Any X_T containing x has T inside type(x) coordinatewise, so it contains
    // X_type(x); x is in a bounded cell iff X_type(x) is bounded.
    return cell_X_T(type_of(x, m), m).is_bounded();
}

std::vector<PointClass> classify_points(const std::vector<RationalVector>& xs, const PointConfiguration& m,
                                        Execution exec) {
    std::vector<PointClass> out(xs.size());
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(xs.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8) if (exec == Execution::parallel)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        try {
            PointClass c;
            c.type = type_of(xs[k], m);
            c.max_hull = hull_membership(xs[k], m);
            c.min_hull = min_hull_membership(xs[k], m);
            c.bounded_cell = std::none_of(c.type.begin(), c.type.end(), [](const auto& tk) { return tk.empty(); });
            out[k] = std::move(c);
        } catch (...) {
#pragma omp critical(tropsl_classify_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<Cone> gamma_cones(std::size_t n, GammaVariant variant) {
    if (n < 2) throw PreconditionError("gamma_cones: need n >= 2");
    const int sign = variant == GammaVariant::max ? 1 : -1;
    std::vector<Cone> out;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<RationalVector> rows;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            RationalVector a(n);
            a[k] = sign;
            a[i] = -sign;
            rows.push_back(std::move(a));
        }
        out.push_back(Cone::in_apartment(n, std::move(rows)));
    }
    return out;
}

}  // namespace tropsl
