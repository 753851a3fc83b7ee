#include "tropsl/weight_fan.hpp"

#include "tropsl/error.hpp"
#include "tropsl/linalg.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <stdexcept>

namespace tropsl {

namespace {

RationalVector ones(std::size_t n) { return RationalVector(n, Rational(1)); }

std::optional<RationalVector> interior_point(const Cone& c) {
    std::vector<LinearConstraint> ineq, eq;
    for (const auto& a : c.inequalities()) ineq.push_back({a, 0, false});
    for (const auto& e : c.equalities()) eq.push_back({e, 0, false});
    return Polyhedron(c.ambient_dim(), std::move(ineq), std::move(eq)).relative_interior_point();
}

// First maximal cone of `xs` with no equal cone in `ys`.
std::optional<RationalVector> unmatched_point(const Fan& xs, const Fan& ys) {
    for (const auto& x : xs.maximal_cones()) {
        bool found = std::any_of(ys.maximal_cones().begin(), ys.maximal_cones().end(),
                                 [&](const LabelledCone& y) { return cone_equal(x.cone, y.cone); });
        if (!found) return interior_point(x.cone);
    }
    return std::nullopt;
}

}  // namespace

Cone cone_C_Delta(const std::vector<Exponent>& weights, const Basis& basis) {
    const std::size_t n = basis.dim();
    const Exponent mu0 = highest_weight(weights, basis);
    std::set<RationalVector> rows;
    for (const auto& mu : weights) {
        if (mu.size() != n) throw DimensionError("cone_C_Delta: weight has wrong length");
        RationalVector a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = mu0[i] - mu[i];
        if (!is_zero_vector(a)) rows.insert(primitive_direction(a));
    }
    return Cone::in_apartment(n, std::vector<RationalVector>(rows.begin(), rows.end()));
}

Cone weyl_cone(const Basis& basis) { return Cone::in_apartment(basis.dim(), basis.simple_roots()); }

Fan weyl_fan(std::size_t n) {
    std::vector<LabelledCone> cones;
    for (const auto& b : enumerate_bases(n)) cones.push_back({weyl_cone(b).canonical(), b.to_string()});
    return Fan(n, {ones(n)}, std::move(cones));
}

WeightFanReport fan_F_rho(const Partition& lambda, std::size_t n, Execution exec) {
    const Partition lam = lambda.padded(n);
    const std::vector<Exponent> weights = weights_of(lam, n);
    const std::vector<Basis> bases = enumerate_bases(n);
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(bases.size());

    std::vector<Exponent> mu0(bases.size());
    std::vector<Cone> cones(bases.size());
    std::exception_ptr failure;
    // Independent per basis; each iteration writes only its own slot.
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        try {
            mu0[k] = highest_weight(weights, bases[k]);
            cones[k] = cone_C_Delta(weights, bases[k]).canonical();
        } catch (...) {
#pragma omp critical(tropsl_fan_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    WeightFanReport report;
    std::vector<LabelledCone> maximal;
    for (std::size_t k = 0; k < bases.size(); ++k) {
        report.highest_weights.push_back({bases[k], mu0[k]});
        bool seen = std::any_of(maximal.begin(), maximal.end(),
                                [&](const LabelledCone& c) { return cone_equal(c.cone, cones[k]); });
        if (!seen) maximal.push_back({cones[k], format_exponent(mu0[k])});
    }
    for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
            if (mu0[i] == mu0[j]) report.coincidences.push_back({bases[i], bases[j]});
        }
    }
    report.fan = Fan(n, {ones(n)}, std::move(maximal));
    return report;
}

Fan dual_complex_fan(const TropicalPolynomial& f) {
    if (f.empty()) throw PreconditionError("dual_complex_fan: empty tropical polynomial");
    const std::size_t n = f.begin()->first.size();
    const RationalVector one = ones(n);
    std::vector<LabelledCone> maximal;
    for (const auto& cell : dual_complex(f)) {
        for (const auto& c : cell.region.inequalities()) {
            if (sgn(dot(c.a, one)) != 0) throw std::logic_error("dual cell is not invariant under (1,...,1)");
            if (sgn(c.b) != 0) throw PreconditionError("dual_complex_fan: cells are not cones (nonzero coefficients)");
        }
        for (const auto& c : cell.region.equalities()) {
            if (sgn(dot(c.a, one)) != 0) throw std::logic_error("dual cell is not invariant under (1,...,1)");
            if (sgn(c.b) != 0) throw PreconditionError("dual_complex_fan: cells are not cones (nonzero coefficients)");
        }
        if (cell.region.dimension() != n) continue;
        std::vector<RationalVector> ineq, eq{one};
        for (const auto& c : cell.region.inequalities()) {
            if (!is_zero_vector(c.a)) ineq.push_back(c.a);
        }
        for (const auto& c : cell.region.equalities()) eq.push_back(c.a);
        std::string label;
        for (const auto& e : cell.label) label += format_exponent(e);
        maximal.push_back({Cone(n, std::move(ineq), std::move(eq)).canonical(), std::move(label)});
    }
    return Fan(n, {one}, std::move(maximal));
}

FanComparison theorem_2_4_check(const Partition& lambda, std::size_t n, const FieldConfig& cfg, Execution exec) {
    const Partition lam = lambda.padded(n);
    const SchurExpansion s = schur_expand(lam, n, exec);
    FanComparison out;
    out.hypothesis_ok = std::all_of(s.begin(), s.end(), [&](const auto& term) {
        Valuation v = valuation(make_element(cfg, Rational(term.second)), cfg);
        return !v.is_infinite() && sgn(v.value()) == 0;
    });
    WeightFanReport weights = fan_F_rho(lam, n, exec);
    out.maximal_cones = weights.fan.maximal_cones().size();
    if (!out.hypothesis_ok) return out;

    Fan complex = dual_complex_fan(tropicalize(s, cfg));
    out.fans_equal = fan_equal(complex, weights.fan);
    if (!*out.fans_equal) {
        out.witness = unmatched_point(complex, weights.fan);
        if (!out.witness) out.witness = unmatched_point(weights.fan, complex);
    }
    return out;
}

std::vector<Stratum> strata(const Fan& fan) {
    const std::size_t span_dim = fan.ambient_dim() - rank(fan.equalities(), fan.ambient_dim());
    std::vector<Stratum> out;
    for (const auto& c : fan.all_cones()) {
        std::string label;
        for (const auto& m : fan.maximal_cones()) {
            if (!cone_includes(m.cone, c)) continue;
            if (!label.empty()) label += "&";
            label += m.label;
        }
        const std::size_t d = c.dimension();
        out.push_back({std::move(label), d, span_dim - d});
    }
    std::stable_sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) { return a.dimension > b.dimension; });
    return out;
}

}  // namespace tropsl
