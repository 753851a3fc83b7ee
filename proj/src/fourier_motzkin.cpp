#include "tropsl/error.hpp"
#include "tropsl/linalg.hpp"
#include "tropsl/polyhedral.hpp"

#include <map>

namespace tropsl {

bool LinearConstraint::satisfied_by(std::span<const Rational> x) const {
    int c = cmp(dot(a, x), b);
    return strict ? c > 0 : c >= 0;
}

namespace {

struct Bound {
    Rational value;
    bool strict = false;
};

// Scales so the coefficient vector is primitive integral, then keeps only
// the tightest constraint per direction. Returns false on a violated
// constant constraint.
class ConstraintSet {
public:
    bool add(RationalVector a, Rational b, bool strict) {
        if (is_zero_vector(a)) {
            int c = sgn(-b);  // 0 >= b  <=>  -b >= 0
            return strict ? c > 0 : c >= 0;
        }
        RationalVector p = primitive_direction(a);
        // find the positive factor s with p = s * a
        std::size_t k = 0;
        while (sgn(a[k]) == 0) ++k;
        Rational s = p[k] / a[k];
        Rational nb = b * s;
        auto it = rows_.find(p);
        if (it == rows_.end()) {
            rows_.emplace(std::move(p), Bound{nb, strict});
        } else {
            int c = cmp(nb, it->second.value);
            if (c > 0) it->second = Bound{nb, strict};
            else if (c == 0) it->second.strict = it->second.strict || strict;
        }
        return true;
    }

    std::vector<LinearConstraint> constraints() const {
        std::vector<LinearConstraint> out;
        out.reserve(rows_.size());
        for (const auto& [a, bd] : rows_) out.push_back({a, bd.value, bd.strict});
        return out;
    }

private:
    std::map<RationalVector, Bound> rows_;
};

// Bounds for variable k given values of variables 0..k-1; coefficients of
// variables above k are zero in every constraint of `system`.
bool pick_value(const std::vector<LinearConstraint>& system, std::size_t k, RationalVector& x) {
    std::optional<Bound> lo, hi;
    for (const auto& c : system) {
        Rational rest = c.b;
        for (std::size_t j = 0; j < k; ++j) rest -= c.a[j] * x[j];
        int s = sgn(c.a[k]);
        if (s == 0) {
            int t = sgn(-rest);
            if (c.strict ? t <= 0 : t < 0) return false;
            continue;
        }
        Rational v = rest / c.a[k];
        auto tighten = [&](std::optional<Bound>& bd, bool better) {
            if (!bd || better) bd = Bound{v, c.strict};
            else if (v == bd->value) bd->strict = bd->strict || c.strict;
        };
        if (s > 0) tighten(lo, lo && v > lo->value);  // x_k >= v
        else tighten(hi, hi && v < hi->value);        // x_k <= v
    }
    if (lo && hi) {
        int c = cmp(lo->value, hi->value);
        if (c > 0) return false;
        if (c == 0) {
            if (lo->strict || hi->strict) return false;
            x[k] = lo->value;
            return true;
        }
        // Prefer an integer strictly inside the interval.
        Rational cand = Rational(lo->value.get_num() / lo->value.get_den()) + 1;
        if (cand < hi->value) x[k] = cand;
        else x[k] = (lo->value + hi->value) / 2;
        return true;
    }
    if (lo) {
        x[k] = Rational(lo->value.get_num() / lo->value.get_den()) + 1;
        return true;
    }
    if (hi) {
        Integer f = hi->value.get_num() / hi->value.get_den();
        x[k] = Rational(f) - 1;
        return true;
    }
    x[k] = 0;
    return true;
}

}  // namespace

std::optional<RationalVector> fm_find_point(std::size_t dim, const std::vector<LinearConstraint>& inequalities,
                                            const std::vector<LinearConstraint>& equalities) {
    for (const auto& c : inequalities) {
        if (c.a.size() != dim) throw DimensionError("fm: constraint has wrong dimension");
    }
    for (const auto& c : equalities) {
        if (c.a.size() != dim) throw DimensionError("fm: equality has wrong dimension");
    }

    // Solve the equalities: augmented rows [a | b] in RREF.
    std::vector<RationalVector> aug;
    for (const auto& e : equalities) {
        RationalVector r = e.a;
        r.push_back(e.b);
        aug.push_back(std::move(r));
    }
    std::vector<std::size_t> pivots;
    auto red = rref(aug, dim + 1, &pivots);
    for (auto p : pivots) {
        if (p == dim) return std::nullopt;  // 0 = nonzero
    }
    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_vars;
    for (std::size_t j = 0; j < dim; ++j) {
        if (!is_pivot[j]) free_vars.push_back(j);
    }
    const std::size_t m = free_vars.size();

    // x_pivot[k] = red[k][dim] - sum_{free j} red[k][j] x_j
    ConstraintSet initial;
    for (const auto& c : inequalities) {
        RationalVector a(m);
        Rational b = c.b;
        for (std::size_t f = 0; f < m; ++f) a[f] = c.a[free_vars[f]];
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            const Rational& coef = c.a[pivots[k]];
            if (sgn(coef) == 0) continue;
            b -= coef * red[k][dim];
            for (std::size_t f = 0; f < m; ++f) a[f] -= coef * red[k][free_vars[f]];
        }
        if (!initial.add(std::move(a), std::move(b), c.strict)) return std::nullopt;
    }

    // stages[k] holds the system over free variables 0..k-1.
    std::vector<std::vector<LinearConstraint>> stages(m + 1);
    stages[m] = initial.constraints();
    for (std::size_t k = m; k-- > 0;) {
        std::vector<const LinearConstraint*> pos, neg;
        ConstraintSet next;
        for (const auto& c : stages[k + 1]) {
            int s = sgn(c.a[k]);
            if (s > 0) pos.push_back(&c);
            else if (s < 0) neg.push_back(&c);
            else if (!next.add(c.a, c.b, c.strict)) return std::nullopt;
        }
        for (const auto* p : pos) {
            for (const auto* q : neg) {
                // combine so variable k cancels: (-q_k) p + p_k q
                Rational sp = -q->a[k];
                Rational sq = p->a[k];
                RationalVector a(m);
                for (std::size_t j = 0; j < m; ++j) a[j] = sp * p->a[j] + sq * q->a[j];
                a[k] = 0;
                if (!next.add(std::move(a), sp * p->b + sq * q->b, p->strict || q->strict)) return std::nullopt;
            }
        }
        stages[k] = next.constraints();
    }
    for (const auto& c : stages[0]) {
        int t = sgn(-c.b);
        if (c.strict ? t <= 0 : t < 0) return std::nullopt;
    }

    RationalVector y(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (!pick_value(stages[k + 1], k, y)) return std::nullopt;
    }
    RationalVector x(dim);
    for (std::size_t f = 0; f < m; ++f) x[free_vars[f]] = y[f];
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        Rational v = red[k][dim];
        for (std::size_t f = 0; f < m; ++f) v -= red[k][free_vars[f]] * y[f];
        x[pivots[k]] = v;
    }
    return x;
}

bool fm_feasible(std::size_t dim, const std::vector<LinearConstraint>& inequalities,
                 const std::vector<LinearConstraint>& equalities) {
    return fm_find_point(dim, inequalities, equalities).has_value();
}

}  // namespace tropsl
