#include "tropsl/error.hpp"
#include "tropsl/polyhedral.hpp"

#include <algorithm>
#include <set>

namespace tropsl {

TropicalPolynomial tropicalize(const SchurExpansion& s, const FieldConfig& cfg) {
    TropicalPolynomial f;
    for (const auto& [mu, c] : s) {
        Valuation v = valuation(make_element(cfg, Rational(c)), cfg);
        if (!v.is_infinite()) f.emplace(mu, -v.value());
    }
    return f;
}

ArgmaxResult trop_eval_argmax(const TropicalPolynomial& f, std::span<const Rational> x) {
    if (f.empty()) throw PreconditionError("trop_eval_argmax: empty tropical polynomial");
    ArgmaxResult r;
    bool first = true;
    for (const auto& [n, c] : f) {
        if (n.size() != x.size()) throw DimensionError("trop_eval_argmax: point has wrong dimension");
        Rational v = c;
        for (std::size_t i = 0; i < x.size(); ++i) v += n[i] * x[i];
        int cmp_v = first ? 1 : cmp(v, r.value);
        if (cmp_v > 0) {
            r.value = v;
            r.argmax.assign(1, n);
        } else if (cmp_v == 0) {
            r.argmax.push_back(n);
        }
        first = false;
    }
    return r;
}

namespace {

RationalVector to_rational(const Exponent& e) {
    RationalVector v;
    v.reserve(e.size());
    for (long x : e) v.emplace_back(x);
    return v;
}

}  // namespace

std::vector<DualCell> dual_complex(const TropicalPolynomial& f) {
    if (f.empty()) throw PreconditionError("dual_complex: empty tropical polynomial");
    const std::size_t n = f.begin()->first.size();
    std::vector<Exponent> exps;
    std::vector<Rational> heights;
    std::vector<RationalVector> lifted;
    for (const auto& [e, c] : f) {
        if (e.size() != n) throw DimensionError("dual_complex: exponents of mixed length");
        exps.push_back(e);
        heights.push_back(c);
        RationalVector q{c};
        for (long x : e) q.emplace_back(x);
        lifted.push_back(std::move(q));
    }
    const std::size_t m = exps.size();

    // Faces of the lifted polytope, as sets of lifted points.
    ConvexHull hull = convex_hull(lifted);
    std::vector<std::vector<std::size_t>> facet_sets;
    for (const auto& fc : hull.facets) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < m; ++i) {
            if (dot(fc.a, std::span<const Rational>(lifted[i]).subspan(0)) == fc.b) s.push_back(i);
        }
        facet_sets.push_back(std::move(s));
    }
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
    std::set<std::vector<std::size_t>> faces{all};
    std::vector<std::vector<std::size_t>> queue{all};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const auto current = queue[k];
        for (const auto& fs : facet_sets) {
            std::vector<std::size_t> meet;
            std::set_intersection(current.begin(), current.end(), fs.begin(), fs.end(), std::back_inserter(meet));
            if (meet.empty() || meet.size() == current.size()) continue;
            if (faces.insert(meet).second) queue.push_back(std::move(meet));
        }
    }

    // Cell of a face S: the points where every monomial of S attains the max.
    // It is nonempty exactly when S is an upper face of the lifted polytope.
    std::vector<DualCell> cells;
    for (const auto& s : faces) {
        const std::size_t s0 = s.front();
        const RationalVector n0 = to_rational(exps[s0]);
        std::vector<LinearConstraint> eq, ineq;
        for (std::size_t k = 0; k < m; ++k) {
            if (k == s0) continue;
            RationalVector a = n0;
            RationalVector nk = to_rational(exps[k]);
            for (std::size_t i = 0; i < n; ++i) a[i] -= nk[i];
            Rational b = heights[k] - heights[s0];
            bool in_face = std::binary_search(s.begin(), s.end(), k);
            (in_face ? eq : ineq).push_back({std::move(a), std::move(b), false});
        }
        Polyhedron region(n, std::move(ineq), std::move(eq));
        if (region.is_empty()) continue;
        std::vector<Exponent> label;
        for (auto i : s) label.push_back(exps[i]);
        cells.push_back({std::move(label), std::move(region)});
    }
    std::sort(cells.begin(), cells.end(), [](const DualCell& a, const DualCell& b) { return a.label < b.label; });
    return cells;
}

Cone normal_cone(const RationalVector& v, const std::vector<RationalVector>& points) {
    std::vector<RationalVector> ineq;
    for (const auto& p : points) {
        if (p.size() != v.size()) throw DimensionError("normal_cone: point has wrong dimension");
        RationalVector a(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) a[i] = v[i] - p[i];
        if (!is_zero_vector(a)) ineq.push_back(std::move(a));
    }
    return Cone(v.size(), std::move(ineq));
}

}  // namespace tropsl
