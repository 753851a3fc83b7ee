#pragma once

// Exact polyhedral geometry over Q for small dimensions (<= 8):
//
//   * Fourier-Motzkin feasibility and point finding (strict inequalities allowed);
//   * double description: generators of {x : A x >= 0, E x = 0};
//   * cones, fans and their canonical (irredundant) forms;
//   * convex hulls with an H-description and explicit affine span;
//   * tropical polynomials and the dual complex of their hypersurface.

#include "tropsl/execution.hpp"
#include "tropsl/rational.hpp"
#include "tropsl/roots.hpp"
#include "tropsl/schur.hpp"
#include "tropsl/tropical.hpp"
#include "tropsl/valued_field.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tropsl {

// a.x >= b, or a.x > b when strict. As an equality: a.x == b.
struct LinearConstraint {
    RationalVector a;
    Rational b = 0;
    bool strict = false;

    bool satisfied_by(std::span<const Rational> x) const;
    bool operator==(const LinearConstraint&) const = default;
};

// A point satisfying all constraints, or nullopt if the system is infeasible.
std::optional<RationalVector> fm_find_point(std::size_t dim, const std::vector<LinearConstraint>& inequalities,
                                            const std::vector<LinearConstraint>& equalities = {});
bool fm_feasible(std::size_t dim, const std::vector<LinearConstraint>& inequalities,
                 const std::vector<LinearConstraint>& equalities = {});

// {x : E x = 0, A x >= 0} = span(lineality) + cone(rays). Rays are primitive
// integer vectors and extreme modulo the lineality space.
struct ConeGenerators {
    std::vector<RationalVector> lineality;
    std::vector<RationalVector> rays;
};

ConeGenerators double_description(std::size_t dim, const std::vector<RationalVector>& inequalities,
                                  const std::vector<RationalVector>& equalities = {});

// Polyhedral cone {x in R^d : a.x >= 0 for a in inequalities, e.x = 0 for e in equalities}.
class Cone {
public:
    Cone() = default;
    Cone(std::size_t ambient_dim, std::vector<RationalVector> inequalities, std::vector<RationalVector> equalities = {});

    // The cone inside A = {sum x_i = 0} cut out by the given inequalities.
    static Cone in_apartment(std::size_t n, std::vector<RationalVector> inequalities);
    // The whole ambient space R^d.
    static Cone whole_space(std::size_t d) { return Cone(d, {}, {}); }

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<RationalVector>& inequalities() const { return ineq_; }
    const std::vector<RationalVector>& equalities() const { return eq_; }

    bool contains(std::span<const Rational> x) const;
    // Dimension of the linear span.
    std::size_t dimension() const;
    ConeGenerators generators() const;

    // Irredundant form: implicit equalities moved to (RREF) equalities,
    // inequalities reduced modulo them, primitive, facet-defining, sorted.
    // Two cones are equal as sets iff their canonical forms are identical.
    Cone canonical() const;
    bool is_canonical() const { return canonical_; }

    Cone negated() const;
    // sigma acting on coordinates: (sigma x)_{sigma(i)} = x_i.
    Cone permuted(const std::vector<int>& sigma) const;
    // Intersection with the hyperplanes a.x = 0 for the given inequality indices.
    Cone face(const std::vector<std::size_t>& tight) const;
    // All nonempty faces (including the cone itself), canonical, deduplicated.
    std::vector<Cone> faces() const;

    bool operator==(const Cone&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<RationalVector> ineq_;
    std::vector<RationalVector> eq_;
    bool canonical_ = false;
};

// Set equality by double inclusion, each inclusion decided with
// Fourier-Motzkin. DimensionError on different ambient dimensions.
bool cone_equal(const Cone& c1, const Cone& c2);
bool cone_contains(const Cone& c, std::span<const Rational> x);
// Every point of inner lies in outer.
bool cone_includes(const Cone& outer, const Cone& inner);

struct LabelledCone {
    Cone cone;
    std::string label;
};

class Fan {
public:
    Fan() = default;
    Fan(std::size_t ambient_dim, std::vector<RationalVector> equalities, std::vector<LabelledCone> maximal);

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<RationalVector>& equalities() const { return eq_; }
    const std::vector<LabelledCone>& maximal_cones() const { return maximal_; }

    // Every face of every maximal cone, canonical and deduplicated, sorted by
    // decreasing dimension.
    std::vector<Cone> all_cones() const;
    // Index of the first maximal cone containing x, if any.
    std::optional<std::size_t> locate(std::span<const Rational> x) const;

private:
    std::size_t dim_ = 0;
    std::vector<RationalVector> eq_;
    std::vector<LabelledCone> maximal_;
};

// Same set of maximal cones up to cone_equal.
bool fan_equal(const Fan& f1, const Fan& f2);

// Inhomogeneous polyhedron {x : a.x >= b, e.x = f}.
class Polyhedron {
public:
    Polyhedron() = default;
    Polyhedron(std::size_t ambient_dim, std::vector<LinearConstraint> inequalities,
               std::vector<LinearConstraint> equalities = {});

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<LinearConstraint>& inequalities() const { return ineq_; }
    const std::vector<LinearConstraint>& equalities() const { return eq_; }

    bool contains(std::span<const Rational> x) const;
    bool is_empty() const;
    // Bounded iff the recession cone is {0}. Empty polyhedra count as bounded.
    bool is_bounded() const;
    Cone recession_cone() const;
    // Indices of inequalities that hold with equality on the whole polyhedron.
    std::vector<std::size_t> implicit_equalities() const;
    // A point in the relative interior; nullopt if empty.
    std::optional<RationalVector> relative_interior_point() const;
    std::size_t dimension() const;

private:
    std::size_t dim_ = 0;
    std::vector<LinearConstraint> ineq_;
    std::vector<LinearConstraint> eq_;
};

// ---------------------------------------------------------------------------
// Convex hulls

struct ConvexHull {
    std::size_t ambient_dim = 0;
    // Affine dimension of the hull.
    std::size_t dimension = 0;
    // Sorted lexicographically.
    std::vector<RationalVector> vertices;
    // a.x >= b, one per facet, canonical.
    std::vector<LinearConstraint> facets;
    // a.x == b, spanning the affine hull's equations (RREF).
    std::vector<LinearConstraint> equalities;

    bool contains(std::span<const Rational> x) const;
};

// PreconditionError on an empty point list or mixed dimensions.
ConvexHull convex_hull(const std::vector<RationalVector>& points);

// ---------------------------------------------------------------------------
// Tropical polynomials and their dual complex

// Exponent vector -> finite tropical coefficient. -inf terms are omitted.
using TropicalPolynomial = std::map<Exponent, Rational>;

// c_N^trop = -v(c_N) for each monomial of the expansion.
TropicalPolynomial tropicalize(const SchurExpansion& s, const FieldConfig& cfg);

struct ArgmaxResult {
    Rational value;
    std::vector<Exponent> argmax;
};

ArgmaxResult trop_eval_argmax(const TropicalPolynomial& f, std::span<const Rational> x);

// A cell of the dual complex: the closure of {x : argmax(f, x) == label}.
struct DualCell {
    std::vector<Exponent> label;
    Polyhedron region;
};

// All cells, ordered lexicographically by label. Cells with |label| >= 2
// cover the tropical hypersurface; together all cells cover R^n.
std::vector<DualCell> dual_complex(const TropicalPolynomial& f);

// Normal cone of the vertex v of conv(points): {x : v.x >= p.x for all p}.
Cone normal_cone(const RationalVector& v, const std::vector<RationalVector>& points);

}  // namespace tropsl
