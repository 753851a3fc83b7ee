#include "tropsl/error.hpp"
#include "tropsl/linalg.hpp"
#include "tropsl/polyhedral.hpp"

#include <algorithm>
#include <set>

namespace tropsl {

namespace {

void check_dims(std::size_t dim, const std::vector<RationalVector>& rows, const char* what) {
    for (const auto& r : rows) {
        if (r.size() != dim) throw DimensionError(std::string(what) + " has wrong dimension");
    }
}

std::vector<LinearConstraint> homogeneous(const std::vector<RationalVector>& rows) {
    std::vector<LinearConstraint> out;
    out.reserve(rows.size());
    for (const auto& a : rows) out.push_back({a, 0, false});
    return out;
}

}  // namespace

Cone::Cone(std::size_t ambient_dim, std::vector<RationalVector> inequalities, std::vector<RationalVector> equalities)
    : dim_(ambient_dim), ineq_(std::move(inequalities)), eq_(std::move(equalities)) {
    check_dims(dim_, ineq_, "cone inequality");
    check_dims(dim_, eq_, "cone equality");
}

Cone Cone::in_apartment(std::size_t n, std::vector<RationalVector> inequalities) {
    return Cone(n, std::move(inequalities), {RationalVector(n, Rational(1))});
}

bool Cone::contains(std::span<const Rational> x) const {
    if (x.size() != dim_) throw DimensionError("cone membership: point has wrong dimension");
    for (const auto& e : eq_) {
        if (sgn(dot(e, x)) != 0) return false;
    }
    for (const auto& a : ineq_) {
        if (sgn(dot(a, x)) < 0) return false;
    }
    return true;
}

ConeGenerators Cone::generators() const { return double_description(dim_, ineq_, eq_); }

std::size_t Cone::dimension() const {
    ConeGenerators g = generators();
    std::vector<RationalVector> all = g.lineality;
    all.insert(all.end(), g.rays.begin(), g.rays.end());
    return rank(all, dim_);
}

Cone Cone::canonical() const {
    if (canonical_) return *this;
    ConeGenerators g = generators();
    std::vector<RationalVector> span = g.lineality;
    span.insert(span.end(), g.rays.begin(), g.rays.end());
    const std::size_t d = rank(span, dim_);

    // Equalities: the orthogonal complement of the cone's linear span.
    std::vector<std::size_t> pivots;
    std::vector<RationalVector> eq = rref(nullspace(span, dim_), dim_, &pivots);

    std::set<RationalVector> facets;
    for (const auto& a : ineq_) {
        std::vector<RationalVector> tight = g.lineality;
        bool implicit = true;
        for (const auto& r : g.rays) {
            if (sgn(dot(a, r)) == 0) tight.push_back(r);
            else implicit = false;
        }
        if (implicit) continue;
        if (rank(tight, dim_) + 1 != d) continue;
        facets.insert(primitive_direction(reduce_modulo(a, eq, pivots)));
    }
    Cone c(dim_, std::vector<RationalVector>(facets.begin(), facets.end()), std::move(eq));
    c.canonical_ = true;
    return c;
}

Cone Cone::negated() const {
    Cone c = *this;
    for (auto& a : c.ineq_) {
        for (auto& x : a) x = -x;
    }
    c.canonical_ = false;
    return c;
}

Cone Cone::permuted(const std::vector<int>& sigma) const {
    if (sigma.size() != dim_) throw DimensionError("permutation has wrong length");
    // (sigma x)_{sigma(i)} = x_i, so a.x = (sigma a).(sigma x).
    Cone c = *this;
    for (auto& a : c.ineq_) a = permute_coordinates(sigma, a);
    for (auto& e : c.eq_) e = permute_coordinates(sigma, e);
    c.canonical_ = false;
    return c;
}

Cone Cone::face(const std::vector<std::size_t>& tight) const {
    Cone c = *this;
    for (auto i : tight) c.eq_.push_back(ineq_.at(i));
    c.canonical_ = false;
    return c;
}

std::vector<Cone> Cone::faces() const {
    const Cone self = canonical();
    std::set<std::pair<std::vector<RationalVector>, std::vector<RationalVector>>> seen;
    std::vector<Cone> out{self};
    seen.insert({self.inequalities(), self.equalities()});
    for (std::size_t k = 0; k < out.size(); ++k) {
        // Facets of a face are faces; each facet comes from a tight inequality.
        const Cone current = out[k];
        for (std::size_t i = 0; i < current.inequalities().size(); ++i) {
            Cone f = current.face({i}).canonical();
            if (seen.insert({f.inequalities(), f.equalities()}).second) out.push_back(std::move(f));
        }
    }
    return out;
}

bool cone_contains(const Cone& c, std::span<const Rational> x) { return c.contains(x); }

bool cone_includes(const Cone& outer, const Cone& inner) {
    if (outer.ambient_dim() != inner.ambient_dim()) throw DimensionError("cone comparison: ambient dimensions differ");
    const std::size_t d = inner.ambient_dim();
    const auto ineq = homogeneous(inner.inequalities());
    const auto eq = homogeneous(inner.equalities());
    auto violated = [&](const RationalVector& a) {
        // inner contains a point with a.x < 0, i.e. (-a).x > 0
        RationalVector neg = a;
        for (auto& x : neg) x = -x;
        auto sys = ineq;
        sys.push_back({neg, 0, true});
        return fm_feasible(d, sys, eq);
    };
    for (const auto& a : outer.inequalities()) {
        if (violated(a)) return false;
    }
    for (const auto& e : outer.equalities()) {
        RationalVector neg = e;
        for (auto& x : neg) x = -x;
        if (violated(e) || violated(neg)) return false;
    }
    return true;
}

bool cone_equal(const Cone& c1, const Cone& c2) {
    if (c1.ambient_dim() != c2.ambient_dim()) throw DimensionError("cone_equal: ambient dimensions differ");
    const Cone a = c1.canonical();
    const Cone b = c2.canonical();
    return cone_includes(a, b) && cone_includes(b, a);
}

// ---------------------------------------------------------------------------

Fan::Fan(std::size_t ambient_dim, std::vector<RationalVector> equalities, std::vector<LabelledCone> maximal)
    : dim_(ambient_dim), eq_(std::move(equalities)), maximal_(std::move(maximal)) {
    check_dims(dim_, eq_, "fan equality");
    for (const auto& c : maximal_) {
        if (c.cone.ambient_dim() != dim_) throw DimensionError("fan cone has wrong ambient dimension");
    }
}

std::vector<Cone> Fan::all_cones() const {
    std::set<std::pair<std::vector<RationalVector>, std::vector<RationalVector>>> seen;
    std::vector<Cone> out;
    for (const auto& m : maximal_) {
        for (auto& f : m.cone.faces()) {
            if (seen.insert({f.inequalities(), f.equalities()}).second) out.push_back(std::move(f));
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < out.size(); ++i) order.push_back({out[i].dimension(), i});
    std::stable_sort(order.begin(), order.end(), [](auto x, auto y) { return x.first > y.first; });
    std::vector<Cone> sorted;
    sorted.reserve(out.size());
    for (auto [d, i] : order) sorted.push_back(out[i]);
    return sorted;
}

std::optional<std::size_t> Fan::locate(std::span<const Rational> x) const {
    for (std::size_t i = 0; i < maximal_.size(); ++i) {
        if (maximal_[i].cone.contains(x)) return i;
    }
    return std::nullopt;
}

bool fan_equal(const Fan& f1, const Fan& f2) {
    if (f1.ambient_dim() != f2.ambient_dim()) throw DimensionError("fan_equal: ambient dimensions differ");
    const auto& a = f1.maximal_cones();
    const auto& b = f2.maximal_cones();
    auto covered = [](const std::vector<LabelledCone>& xs, const std::vector<LabelledCone>& ys) {
        for (const auto& x : xs) {
            bool found = std::any_of(ys.begin(), ys.end(), [&](const LabelledCone& y) { return cone_equal(x.cone, y.cone); });
            if (!found) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

// ---------------------------------------------------------------------------

Polyhedron::Polyhedron(std::size_t ambient_dim, std::vector<LinearConstraint> inequalities,
                       std::vector<LinearConstraint> equalities)
    : dim_(ambient_dim), ineq_(std::move(inequalities)), eq_(std::move(equalities)) {
    for (const auto& c : ineq_) {
        if (c.a.size() != dim_) throw DimensionError("polyhedron inequality has wrong dimension");
        if (c.strict) throw PreconditionError("polyhedra are closed; strict inequality given");
    }
    for (const auto& c : eq_) {
        if (c.a.size() != dim_) throw DimensionError("polyhedron equality has wrong dimension");
    }
}

bool Polyhedron::contains(std::span<const Rational> x) const {
    if (x.size() != dim_) throw DimensionError("polyhedron membership: point has wrong dimension");
    for (const auto& e : eq_) {
        if (dot(e.a, x) != e.b) return false;
    }
    for (const auto& c : ineq_) {
        if (!c.satisfied_by(x)) return false;
    }
    return true;
}

bool Polyhedron::is_empty() const { return !fm_feasible(dim_, ineq_, eq_); }

Cone Polyhedron::recession_cone() const {
    std::vector<RationalVector> ineq, eq;
    for (const auto& c : ineq_) ineq.push_back(c.a);
    for (const auto& e : eq_) eq.push_back(e.a);
    return Cone(dim_, std::move(ineq), std::move(eq));
}

bool Polyhedron::is_bounded() const { return is_empty() || recession_cone().dimension() == 0; }

std::vector<std::size_t> Polyhedron::implicit_equalities() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ineq_.size(); ++i) {
        auto sys = ineq_;
        sys[i].strict = true;
        if (!fm_feasible(dim_, sys, eq_)) out.push_back(i);
    }
    return out;
}

std::optional<RationalVector> Polyhedron::relative_interior_point() const {
    if (is_empty()) return std::nullopt;
    std::vector<std::size_t> implicit = implicit_equalities();
    std::vector<LinearConstraint> ineq, eq = eq_;
    for (std::size_t i = 0; i < ineq_.size(); ++i) {
        if (std::find(implicit.begin(), implicit.end(), i) != implicit.end()) {
            eq.push_back({ineq_[i].a, ineq_[i].b, false});
        } else {
            ineq.push_back({ineq_[i].a, ineq_[i].b, true});
        }
    }
    return fm_find_point(dim_, ineq, eq);
}

std::size_t Polyhedron::dimension() const {
    if (is_empty()) throw PreconditionError("dimension of an empty polyhedron");
    std::vector<RationalVector> rows;
    for (const auto& e : eq_) rows.push_back(e.a);
    for (auto i : implicit_equalities()) rows.push_back(ineq_[i].a);
    return dim_ - rank(rows, dim_);
}

}  // namespace tropsl
