#pragma once

// Point stabilizers in the apartment of SL_n: the tropical stabilizer test
// g_trop . x == x, the conjugation criterion t^-1 g t in SL_n(O_K), a sampler
// for elements of t SL_n(O_K) t^-1, and the root-group valuation psi.

#include "tropsl/random.hpp"
#include "tropsl/tropical.hpp"
#include "tropsl/valued_field.hpp"

#include <cstdint>
#include <vector>

namespace tropsl {

// A matrix with determinant exactly 1.
class SLMatrix {
public:
    // PreconditionError unless g is square with det(g) == 1.
    explicit SLMatrix(FieldMatrix g);

    const FieldMatrix& matrix() const { return g_; }
    std::size_t dim() const { return g_.rows(); }

    bool operator==(const SLMatrix&) const = default;

private:
    FieldMatrix g_;
};

SLMatrix operator*(const SLMatrix& a, const SLMatrix& b);
SLMatrix inverse(const SLMatrix& g);

// diag(t_1, ..., t_n) with t_1 * ... * t_n == 1.
class DiagonalCocharacterPoint {
public:
    // PreconditionError if some entry is zero or the product is not 1.
    DiagonalCocharacterPoint(std::vector<ValuedElement> entries, FieldConfig cfg);

    const std::vector<ValuedElement>& entries() const { return t_; }
    const FieldConfig& field() const { return cfg_; }
    std::size_t dim() const { return t_.size(); }
    FieldMatrix matrix() const;

private:
    std::vector<ValuedElement> t_;
    FieldConfig cfg_;
};

// (-v(t_1), ..., -v(t_n)); sums to zero because the product is 1.
TorusPoint nu(const DiagonalCocharacterPoint& t);

bool is_tropical_stabilizer(const SLMatrix& g, const TorusPoint& x, const FieldConfig& cfg);

// Every entry g_ij * t_j / t_i has nonnegative valuation.
bool conjugation_criterion(const SLMatrix& g, const DiagonalCocharacterPoint& t);

// Words of at most this many elementary factors.
inline constexpr int kMaxWordLength = 12;

// count elements t h t^-1, h a random word in elementary matrices
// id + w E_ij (v(w) >= 0) and determinant-one signed transpositions.
std::vector<SLMatrix> sample_stabilizer(const DiagonalCocharacterPoint& t, int count, std::uint64_t seed);

// Elements g * t E t^-1 with g sampled as above and E = id + w E_ij, v(w) < 0.
// Each returned matrix is verified to fail the conjugation criterion.
std::vector<SLMatrix> sample_non_members(const DiagonalCocharacterPoint& t, int count, std::uint64_t seed);

// Random diagonal point with valuations in [-max_valuation, max_valuation].
DiagonalCocharacterPoint random_cocharacter(std::size_t n, const FieldConfig& cfg, SeededRng& rng,
                                            long max_valuation = 3);

// Random element with valuation exactly k.
ValuedElement random_element_of_valuation(const FieldConfig& cfg, SeededRng& rng, long k);

// u must be the identity except for entry (i, j), i != j (zero-based).
// Returns v(u_ij); u lies in U_{a_ij, l} iff the result is >= l.
Valuation psi_root(const SLMatrix& u, std::size_t i, std::size_t j, const FieldConfig& cfg);

}  // namespace tropsl
