#pragma once

// Fans in the apartment A = {x in R^n : sum x_i = 0} built from the weights
// of an irreducible representation S_lambda(V) of SL_n:
//
//   C_Delta = {x in A : mu0(Delta).x >= mu.x for every weight mu},
//
// one cone per basis Delta of the root system, and the comparison with the
// dual complex of the tropicalized Schur polynomial.

#include "tropsl/execution.hpp"
#include "tropsl/polyhedral.hpp"
#include "tropsl/roots.hpp"
#include "tropsl/schur.hpp"
#include "tropsl/valued_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropsl {

Cone cone_C_Delta(const std::vector<Exponent>& weights, const Basis& basis);

// x_{o_1} >= x_{o_2} >= ... >= x_{o_n} inside A.
Cone weyl_cone(const Basis& basis);

Fan weyl_fan(std::size_t n);

struct WeightFanReport {
    Fan fan;
    // mu0(Delta) for every basis, in enumerate_bases order.
    std::vector<std::pair<Basis, Exponent>> highest_weights;
    // Pairs of distinct bases sharing a highest weight.
    std::vector<std::pair<Basis, Basis>> coincidences;
};

// Maximal cones are deduplicated with cone_equal and labelled by their
// highest weight. The per-basis cone construction runs under OpenMP when
// exec is parallel; the result is identical either way.
WeightFanReport fan_F_rho(const Partition& lambda, std::size_t n, Execution exec = Execution::serial);

// The image in A of the full-dimensional cells of the dual complex of
// trop(S_lambda). Requires every cell to be invariant under translation by
// (1, ..., 1); std::logic_error otherwise. Labels are the vertex exponents.
Fan dual_complex_fan(const TropicalPolynomial& f);

struct FanComparison {
    bool hypothesis_ok = false;
    // Unset when the hypothesis fails.
    std::optional<bool> fans_equal;
    std::size_t maximal_cones = 0;
    // A point of A lying in a maximal cone of one fan that the other fan
    // does not have, when the fans differ.
    std::optional<RationalVector> witness;
};

// hypothesis_ok: every coefficient of S_lambda has valuation zero in cfg.
FanComparison theorem_2_4_check(const Partition& lambda, std::size_t n, const FieldConfig& cfg,
                                Execution exec = Execution::serial);

struct Stratum {
    std::string label;
    std::size_t cone_dimension = 0;
    // dim A / <C>
    std::size_t dimension = 0;
};

// One stratum A/<C> per cone C of the fan (faces included), ordered by
// decreasing stratum dimension. Labels list the maximal cones containing C.
std::vector<Stratum> strata(const Fan& fan);

}  // namespace tropsl
