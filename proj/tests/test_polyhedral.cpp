#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tropsl/error.hpp"
#include "tropsl/linalg.hpp"
#include "tropsl/polyhedral.hpp"
#include "tropsl/random.hpp"

#include <set>

using namespace tropsl;

namespace {

RationalVector rv(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

RationalVector random_vector(SeededRng& rng, std::size_t n, long range = 6) {
    RationalVector x(n);
    for (auto& c : x) c = oracle::q(rng.uniform(-range, range), rng.uniform(1, 3));
    for (auto& c : x) c.canonicalize();
    return x;
}

RationalVector exps(const Exponent& e) {
    RationalVector v;
    for (long x : e) v.emplace_back(x);
    return v;
}

// p lies in conv(qs): an independent feasibility problem in the weights.
bool in_convex_hull_by_weights(const RationalVector& p, const std::vector<RationalVector>& qs) {
    const std::size_t m = qs.size();
    std::vector<LinearConstraint> ineq, eq;
    for (std::size_t i = 0; i < m; ++i) {
        RationalVector a(m);
        a[i] = 1;
        ineq.push_back({a, 0, false});
    }
    eq.push_back({RationalVector(m, Rational(1)), 1, false});
    for (std::size_t k = 0; k < p.size(); ++k) {
        RationalVector a(m);
        for (std::size_t i = 0; i < m; ++i) a[i] = qs[i][k];
        eq.push_back({a, p[k], false});
    }
    return fm_feasible(m, ineq, eq);
}

}  // namespace

TEST_CASE("linear algebra") {
    RationalMatrix a{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    CHECK(determinant(a) == 18);
    CHECK(rank({rv({1, 2, 3}), rv({2, 4, 6}), rv({0, 1, 1})}, 3) == 2);
    auto ns = nullspace({rv({1, 1, 1})}, 3);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) CHECK(dot(v, rv({1, 1, 1})) == 0);
}

TEST_CASE("Fourier-Motzkin") {
    // x >= 0, y >= 0, x + y <= 1, x + y > 1 is infeasible
    std::vector<LinearConstraint> sys{
        {rv({1, 0}), 0, false}, {rv({0, 1}), 0, false}, {rv({-1, -1}), -1, false}, {rv({1, 1}), 1, true}};
    CHECK_FALSE(fm_feasible(2, sys));
    sys.back().strict = false;
    auto p = fm_find_point(2, sys);
    REQUIRE(p);
    for (const auto& c : sys) CHECK(c.satisfied_by(*p));
    // strict pair 0 < x < 1/3
    std::vector<LinearConstraint> thin{{rv({1}), 0, true}, {rv({-1}), Rational(-1, 3), true}};
    auto q = fm_find_point(1, thin);
    REQUIRE(q);
    CHECK(((*q)[0] > 0 && (*q)[0] < Rational(1, 3)));
    // equalities
    auto r = fm_find_point(3, {{rv({1, 0, 0}), 1, true}}, {{rv({1, 1, 1}), 0, false}, {rv({0, 1, -1}), 2, false}});
    REQUIRE(r);
    CHECK((*r)[0] + (*r)[1] + (*r)[2] == 0);
    CHECK((*r)[1] - (*r)[2] == 2);
    CHECK((*r)[0] > 1);
    CHECK_FALSE(fm_feasible(2, {}, {{rv({1, 1}), 0, false}, {rv({1, 1}), 1, false}}));
}

TEST_CASE("Fourier-Motzkin certificates on random systems") {
    SeededRng rng(12);
    int feasible = 0;
    for (int k = 0; k < 300; ++k) {
        const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 4));
        std::vector<LinearConstraint> sys;
        for (int c = 0; c < rng.uniform(1, 7); ++c) {
            RationalVector a(d);
            for (auto& x : a) x = rng.uniform(-3, 3);
            sys.push_back({a, rng.uniform(-4, 4), rng.coin()});
        }
        auto p = fm_find_point(d, sys);
        if (p) {
            ++feasible;
            for (const auto& c : sys) CHECK(c.satisfied_by(*p));
        } else {
            // no small grid point is feasible either
            std::vector<long> g(d, -6);
            while (true) {
                RationalVector x(d);
                for (std::size_t i = 0; i < d; ++i) x[i] = oracle::q(g[i], 2);
                bool ok = std::all_of(sys.begin(), sys.end(), [&](const LinearConstraint& c) { return c.satisfied_by(x); });
                CHECK_FALSE(ok);
                std::size_t i = 0;
                while (i < d && g[i] == 6) g[i++] = -6;
                if (i == d) break;
                ++g[i];
            }
        }
    }
    CHECK(feasible > 30);
}

TEST_CASE("double description") {
    // positive orthant of R^3
    auto g = double_description(3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
    CHECK(g.lineality.empty());
    CHECK(g.rays == std::vector<RationalVector>{rv({0, 0, 1}), rv({0, 1, 0}), rv({1, 0, 0})});
    // half-plane: lineality 1, one ray
    auto h = double_description(2, {rv({1, 0})});
    CHECK(h.lineality.size() == 1);
    CHECK(h.rays.size() == 1);
    // Weyl chamber in A, n = 3: rays (2,-1,-1)/... and (1,1,-2)/...
    auto w = double_description(3, {rv({1, -1, 0}), rv({0, 1, -1})}, {rv({1, 1, 1})});
    CHECK(w.lineality.empty());
    CHECK(w.rays == std::vector<RationalVector>{rv({1, 1, -2}), rv({2, -1, -1})});
}

TEST_CASE("double description rays are valid and extreme") {
    SeededRng rng(31);
    for (int k = 0; k < 150; ++k) {
        const std::size_t d = static_cast<std::size_t>(rng.uniform(2, 5));
        std::vector<RationalVector> ineq;
        for (int c = 0; c < rng.uniform(1, 8); ++c) {
            RationalVector a(d);
            for (auto& x : a) x = rng.uniform(-2, 2);
            ineq.push_back(a);
        }
        auto g = double_description(d, ineq);
        for (const auto& l : g.lineality) {
            for (const auto& a : ineq) CHECK(dot(a, l) == 0);
        }
        for (const auto& r : g.rays) {
            std::vector<RationalVector> tight = g.lineality;
            for (const auto& a : ineq) {
                CHECK(sgn(dot(a, r)) >= 0);
                if (sgn(dot(a, r)) == 0) tight.push_back(a);
            }
            // extreme modulo lineality: tight constraints cut out a line
            CHECK(rank(tight, d) == d - 1);
        }
        // a random feasible point is generated: it lies in the cone spanned
        RationalVector x = random_vector(rng, d);
        bool in_cone = std::all_of(ineq.begin(), ineq.end(), [&](const RationalVector& a) { return sgn(dot(a, x)) >= 0; });
        if (in_cone) {
            // x = sum l_i c_i + sum r_j m_j with m_j >= 0
            const std::size_t m = g.lineality.size() + g.rays.size();
            std::vector<LinearConstraint> pos, eq;
            for (std::size_t j = 0; j < g.rays.size(); ++j) {
                RationalVector a(m);
                a[g.lineality.size() + j] = 1;
                pos.push_back({a, 0, false});
            }
            for (std::size_t i = 0; i < d; ++i) {
                RationalVector a(m);
                for (std::size_t j = 0; j < g.lineality.size(); ++j) a[j] = g.lineality[j][i];
                for (std::size_t j = 0; j < g.rays.size(); ++j) a[g.lineality.size() + j] = g.rays[j][i];
                eq.push_back({a, x[i], false});
            }
            CHECK(fm_feasible(m, pos, eq));
        }
    }
}

TEST_CASE("cone equality and canonical forms") {
    Cone weyl = Cone::in_apartment(3, {rv({1, -1, 0}), rv({0, 1, -1})});
    Cone redundant = Cone::in_apartment(3, {rv({1, -1, 0}), rv({0, 1, -1}), rv({1, 0, -1}), rv({2, -1, -1})});
    CHECK(cone_equal(weyl, redundant));
    CHECK(weyl.canonical() == redundant.canonical());
    Cone a = Cone::in_apartment(2, {rv({1, -1})});
    Cone b = Cone::in_apartment(2, {rv({-1, 1})});
    CHECK_FALSE(cone_equal(a, b));
    CHECK(cone_equal(a.negated(), b));
    CHECK_THROWS_AS(cone_equal(a, weyl), DimensionError);
    CHECK(weyl.dimension() == 2);
    CHECK(Cone::in_apartment(3, {rv({1, -1, 0}), rv({-1, 1, 0})}).dimension() == 1);
    CHECK(weyl.faces().size() == 4);
    CHECK(cone_includes(Cone::in_apartment(3, {}), weyl));
    CHECK_FALSE(cone_includes(weyl, Cone::in_apartment(3, {})));
}

TEST_CASE("canonical forms decide set equality") {
    SeededRng rng(8);
    for (int k = 0; k < 150; ++k) {
        const std::size_t d = 3;
        std::vector<RationalVector> ineq;
        for (int c = 0; c < rng.uniform(1, 5); ++c) {
            RationalVector a(d);
            for (auto& x : a) x = rng.uniform(-2, 2);
            ineq.push_back(a);
        }
        Cone c(d, ineq);
        // adding a positive combination of existing rows never changes the set
        RationalVector extra(d);
        for (const auto& a : ineq) {
            Rational w = rng.uniform(0, 3);
            for (std::size_t i = 0; i < d; ++i) extra[i] += w * a[i];
        }
        auto more = ineq;
        more.push_back(extra);
        Cone c2(d, more);
        CHECK(cone_equal(c, c2));
        CHECK(c.canonical() == c2.canonical());
        // membership is preserved by canonicalization
        for (int t = 0; t < 10; ++t) {
            RationalVector x = random_vector(rng, d);
            CHECK(c.contains(x) == c.canonical().contains(x));
        }
    }
}

TEST_CASE("convex hull examples") {
    auto tri = convex_hull({rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
    CHECK(tri.vertices.size() == 3);
    CHECK(tri.dimension == 2);
    CHECK(tri.equalities.size() == 1);
    auto pt = convex_hull({rv({2, 2}), rv({2, 2})});
    CHECK(pt.vertices == std::vector<RationalVector>{rv({2, 2})});
    CHECK(pt.dimension == 0);
    std::vector<RationalVector> support;
    for (const auto& e : weights_of(Partition::parse("2,1,0"), 3)) support.push_back(exps(e));
    auto hex = convex_hull(support);
    CHECK(hex.vertices.size() == 6);
    CHECK(std::find(hex.vertices.begin(), hex.vertices.end(), rv({1, 1, 1})) == hex.vertices.end());
    CHECK(hex.contains(rv({1, 1, 1})));
    CHECK_FALSE(hex.contains(rv({3, 0, 0})));
    CHECK_THROWS_AS(convex_hull({}), PreconditionError);
}

TEST_CASE("convex hull vertices agree with a weight-feasibility oracle") {
    SeededRng rng(17);
    for (int k = 0; k < 60; ++k) {
        const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 4));
        std::vector<RationalVector> pts;
        for (int i = 0; i < rng.uniform(1, 8); ++i) {
            RationalVector p(d);
            for (auto& x : p) x = rng.uniform(-3, 3);
            pts.push_back(p);
        }
        auto hull = convex_hull(pts);
        std::set<RationalVector> distinct(pts.begin(), pts.end());
        for (const auto& p : distinct) {
            std::vector<RationalVector> others;
            for (const auto& q : distinct) {
                if (q != p) others.push_back(q);
            }
            bool vertex = others.empty() || !in_convex_hull_by_weights(p, others);
            bool reported = std::find(hull.vertices.begin(), hull.vertices.end(), p) != hull.vertices.end();
            CHECK(vertex == reported);
            CHECK(hull.contains(p));
        }
        for (int t = 0; t < 10; ++t) {
            RationalVector x = random_vector(rng, d, 4);
            CHECK(hull.contains(x) == in_convex_hull_by_weights(x, std::vector<RationalVector>(distinct.begin(), distinct.end())));
        }
    }
}

TEST_CASE("Newton polytopes of Schur polynomials") {
    for (std::size_t n = 2; n <= 4; ++n) {
        std::vector<long> parts(n, 0);
        std::function<void(std::size_t, long, long)> rec = [&](std::size_t i, long left, long cap) {
            if (i == n) {
                if (left != 0) return;
                Partition lambda(parts);
                std::vector<RationalVector> support;
                for (const auto& e : weights_of(lambda, n)) support.push_back(exps(e));
                std::set<RationalVector> perms;
                Exponent p = parts;
                std::sort(p.begin(), p.end());
                do perms.insert(exps(p));
                while (std::next_permutation(p.begin(), p.end()));
                auto hull = convex_hull(support);
                CHECK(std::set<RationalVector>(hull.vertices.begin(), hull.vertices.end()) == perms);
                return;
            }
            for (long v = std::min(left, cap); v >= 0; --v) {
                parts[i] = v;
                rec(i + 1, left - v, v);
            }
        };
        for (long deg = 0; deg <= (n == 4 ? 6 : 8); ++deg) rec(0, deg, deg);
    }
}

TEST_CASE("argmax evaluation") {
    auto f = tropicalize(schur_expand(Partition::standard_rep(3), 3), FieldConfig::rational_functions());
    auto r0 = trop_eval_argmax(f, rv({0, 0, 0}));
    CHECK(r0.value == 0);
    CHECK(r0.argmax.size() == 3);
    auto r1 = trop_eval_argmax(f, rv({1, 0, 0}));
    CHECK(r1.value == 1);
    CHECK(r1.argmax == std::vector<Exponent>{{1, 0, 0}});
    auto r2 = trop_eval_argmax(f, rv({1, 1, 0}));
    CHECK(r2.value == 1);
    CHECK(r2.argmax.size() == 2);
    CHECK_THROWS_AS(trop_eval_argmax({}, rv({1})), PreconditionError);
}

TEST_CASE("tropicalized coefficients") {
    auto s = schur_expand(Partition::parse("2,1,0"), 3);
    auto f = tropicalize(s, FieldConfig::p_adic(2));
    CHECK(f.at({1, 1, 1}) == -1);
    CHECK(f.at({2, 1, 0}) == 0);
}

TEST_CASE("dual complex examples") {
    const FieldConfig qt = FieldConfig::rational_functions();
    auto cells = dual_complex(tropicalize(schur_expand(Partition::standard_rep(3), 3), qt));
    std::size_t maximal = 0;
    for (const auto& c : cells) {
        if (c.label.size() == 1) {
            ++maximal;
            CHECK(c.region.dimension() == 3);
        }
    }
    CHECK(maximal == 3);
    CHECK(cells.size() == 7);

    TropicalPolynomial mono{{{2, 0}, Rational(5)}};
    auto single = dual_complex(mono);
    REQUIRE(single.size() == 1);
    CHECK(single[0].region.inequalities().empty());

    auto e2 = dual_complex(tropicalize(schur_expand(Partition::parse("1,1,0"), 3), qt));
    for (const auto& c : e2) {
        if (c.label.size() != 1) continue;
        // {x : x_k <= x_i} where k is the zero coordinate of the label
        std::size_t k = static_cast<std::size_t>(std::find(c.label[0].begin(), c.label[0].end(), 0L) - c.label[0].begin());
        std::vector<RationalVector> rows;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == k) continue;
            RationalVector a(3);
            a[i] = 1;
            a[k] = -1;
            rows.push_back(a);
        }
        std::vector<RationalVector> ineq;
        for (const auto& x : c.region.inequalities()) ineq.push_back(x.a);
        CHECK(cone_equal(Cone(3, ineq), Cone(3, rows)));
    }
}

TEST_CASE("dual complex covers R^n and matches argmax") {
    SeededRng rng(40);
    const FieldConfig qp2 = FieldConfig::p_adic(2);
    std::vector<TropicalPolynomial> fs{
        tropicalize(schur_expand(Partition::parse("2,1,0"), 3), qp2),
        tropicalize(schur_expand(Partition::parse("3,1,0"), 3), FieldConfig::p_adic(3)),
        tropicalize(schur_expand(Partition::parse("2,1,0,0"), 4), FieldConfig::rational_functions()),
    };
    // a polynomial with generic heights
    fs.push_back({{{2, 0}, Rational(1)}, {{1, 1}, Rational(3)}, {{0, 2}, Rational(-1, 2)}, {{1, 0}, Rational(0)}});
    for (const auto& f : fs) {
        auto cells = dual_complex(f);
        const std::size_t n = f.begin()->first.size();
        for (int k = 0; k < 120; ++k) {
            RationalVector x = random_vector(rng, n, 5);
            auto r = trop_eval_argmax(f, x);
            bool found_exact = false;
            int containing = 0;
            for (const auto& c : cells) {
                if (!c.region.contains(x)) continue;
                ++containing;
                if (c.label == r.argmax) found_exact = true;
            }
            CHECK(containing >= 1);
            CHECK(found_exact);
        }
        for (const auto& c : cells) {
            auto p = c.region.relative_interior_point();
            REQUIRE(p);
            CHECK(trop_eval_argmax(f, *p).argmax == c.label);
        }
    }
}

TEST_CASE("with zero lifts the dual complex is the normal fan") {
    const FieldConfig qt = FieldConfig::rational_functions();
    for (const char* l : {"2,1,0", "3,2,1", "2,0,0"}) {
        auto s = schur_expand(Partition::parse(l), 3);
        std::vector<RationalVector> pts;
        for (const auto& [e, c] : s) pts.push_back(exps(e));
        auto hull = convex_hull(pts);
        for (const auto& c : dual_complex(tropicalize(s, qt))) {
            if (c.region.dimension() != 3) continue;
            REQUIRE(c.label.size() == 1);
            std::vector<RationalVector> ineq;
            for (const auto& x : c.region.inequalities()) {
                CHECK(x.b == 0);
                ineq.push_back(x.a);
            }
            CHECK(cone_equal(Cone(3, ineq), normal_cone(exps(c.label[0]), pts)));
            CHECK(std::find(hull.vertices.begin(), hull.vertices.end(), exps(c.label[0])) != hull.vertices.end());
        }
    }
}

TEST_CASE("polyhedra") {
    // unit square
    Polyhedron sq(2, {{rv({1, 0}), 0, false}, {rv({0, 1}), 0, false}, {rv({-1, 0}), -1, false}, {rv({0, -1}), -1, false}});
    CHECK_FALSE(sq.is_empty());
    CHECK(sq.is_bounded());
    CHECK(sq.dimension() == 2);
    Polyhedron strip(2, {{rv({0, 1}), 0, false}, {rv({0, -1}), -1, false}});
    CHECK_FALSE(strip.is_bounded());
    Polyhedron seg(2, {{rv({1, 0}), 0, false}, {rv({-1, 0}), -1, false}}, {{rv({1, 1}), 0, false}});
    CHECK(seg.is_bounded());
    CHECK(seg.dimension() == 1);
    auto p = seg.relative_interior_point();
    REQUIRE(p);
    CHECK(((*p)[0] > 0 && (*p)[0] < 1));
    CHECK_THROWS_AS(Polyhedron(1, {{rv({1}), 0, true}}), PreconditionError);
}

TEST_CASE("fans") {
    std::vector<LabelledCone> halves{{Cone::in_apartment(2, {rv({1, -1})}), "a"},
                                     {Cone::in_apartment(2, {rv({-1, 1})}), "b"}};
    Fan f(2, {rv({1, 1})}, halves);
    CHECK(f.all_cones().size() == 3);
    CHECK(f.locate(rv({1, -1})) == std::optional<std::size_t>(0));
    Fan g(2, {rv({1, 1})}, {halves[1], halves[0]});
    CHECK(fan_equal(f, g));
    Fan h(2, {rv({1, 1})}, {halves[0]});
    CHECK_FALSE(fan_equal(f, h));
}
