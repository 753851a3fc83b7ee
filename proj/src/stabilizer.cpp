#include "tropsl/stabilizer.hpp"

#include "tropsl/error.hpp"

namespace tropsl {

SLMatrix::SLMatrix(FieldMatrix g) : g_(std::move(g)) {
    if (!g_.square() || g_.rows() == 0) throw DimensionError("SL matrix must be square and nonempty");
    if (!matrix_det(g_).is_one()) throw PreconditionError("matrix does not have determinant 1");
}

SLMatrix operator*(const SLMatrix& a, const SLMatrix& b) { return SLMatrix(multiply(a.matrix(), b.matrix())); }

SLMatrix inverse(const SLMatrix& g) { return SLMatrix(matrix_inverse(g.matrix())); }

DiagonalCocharacterPoint::DiagonalCocharacterPoint(std::vector<ValuedElement> entries, FieldConfig cfg)
    : t_(std::move(entries)), cfg_(cfg) {
    if (t_.empty()) throw DimensionError("diagonal point needs at least one entry");
    ValuedElement prod = make_element(cfg_, 1);
    for (const auto& e : t_) {
        if (e.kind() != cfg_.kind()) throw PreconditionError("diagonal entry from a different field");
        if (e.is_zero()) throw PreconditionError("diagonal entries must be nonzero");
        prod = prod * e;
    }
    if (!prod.is_one()) throw PreconditionError("diagonal entries must have product 1");
}

FieldMatrix DiagonalCocharacterPoint::matrix() const {
    FieldMatrix m(t_.size(), t_.size(), make_element(cfg_, 0));
    for (std::size_t i = 0; i < t_.size(); ++i) m(i, i) = t_[i];
    return m;
}

TorusPoint nu(const DiagonalCocharacterPoint& t) {
    RationalVector x;
    x.reserve(t.dim());
    for (const auto& e : t.entries()) x.push_back(-valuation(e, t.field()).value());
    return TorusPoint(x);
}

bool is_tropical_stabilizer(const SLMatrix& g, const TorusPoint& x, const FieldConfig& cfg) {
    if (g.dim() != x.dim()) throw DimensionError("stabilizer test: matrix and point dimensions differ");
    return trop_apply(tropicalize_matrix(g.matrix(), cfg), x.coords()) == x.coords();
}

bool conjugation_criterion(const SLMatrix& g, const DiagonalCocharacterPoint& t) {
    if (g.dim() != t.dim()) throw DimensionError("conjugation criterion: dimensions differ");
    const Valuation zero(Rational(0));
    const auto& d = t.entries();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = 0; j < g.dim(); ++j) {
            const ValuedElement& gij = g.matrix()(i, j);
            if (gij.is_zero()) continue;
            if (valuation(gij * d[j] / d[i], t.field()) < zero) return false;
        }
    }
    return true;
}

namespace {

ValuedElement uniformizer(const FieldConfig& cfg) {
    if (cfg.kind() == FieldKind::p_adic) return make_element(cfg, cfg.prime());
    return ValuedElement(RationalFunction::t_power(1));
}

ValuedElement random_unit(const FieldConfig& cfg, SeededRng& rng) {
    if (cfg.kind() == FieldKind::p_adic) {
        auto draw = [&] {
            long a;
            do { a = rng.uniform(1, 24); } while (a % cfg.prime() == 0);
            return a;
        };
        long num = draw();
        long den = draw();
        if (rng.coin()) num = -num;
        Rational q(num, den);
        q.canonicalize();
        return ValuedElement(q);
    }
    auto nonzero = [&] {
        long c = rng.uniform(1, 4);
        return rng.coin() ? c : -c;
    };
    Polynomial num({Rational(nonzero()), Rational(rng.uniform(-3, 3))});
    Polynomial den({Rational(nonzero()), Rational(rng.uniform(-3, 3))});
    return ValuedElement(RationalFunction(num, den));
}

ValuedElement pow(const ValuedElement& x, long k) {
    ValuedElement base = k >= 0 ? x : x.inverse();
    ValuedElement r = x * x.inverse();
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
    return r;
}

FieldMatrix elementary(const FieldConfig& cfg, std::size_t n, std::size_t i, std::size_t j, const ValuedElement& w) {
    FieldMatrix e = identity_matrix(cfg, n);
    e(i, j) = w;
    return e;
}

FieldMatrix signed_transposition(const FieldConfig& cfg, std::size_t n, std::size_t i, std::size_t j) {
    FieldMatrix s = identity_matrix(cfg, n);
    s(i, i) = make_element(cfg, 0);
    s(j, j) = make_element(cfg, 0);
    s(i, j) = make_element(cfg, 1);
    s(j, i) = make_element(cfg, -1);
    return s;
}

std::pair<std::size_t, std::size_t> random_pair(std::size_t n, SeededRng& rng) {
    auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    return {i, j};
}

// A random element of SL_n(O_K).
FieldMatrix random_integral_word(const FieldConfig& cfg, std::size_t n, SeededRng& rng) {
    FieldMatrix h = identity_matrix(cfg, n);
    if (n < 2) return h;
    long length = rng.uniform(1, kMaxWordLength);
    for (long k = 0; k < length; ++k) {
        auto [i, j] = random_pair(n, rng);
        if (rng.uniform(0, 3) == 0) {
            h = multiply(h, signed_transposition(cfg, n, i, j));
        } else {
            ValuedElement w = random_element_of_valuation(cfg, rng, rng.uniform(0, 2));
            h = multiply(h, elementary(cfg, n, i, j, w));
        }
    }
    return h;
}

// t h t^-1, entrywise t_i h_ij / t_j.
FieldMatrix conjugate(const DiagonalCocharacterPoint& t, const FieldMatrix& h) {
    FieldMatrix g = h;
    const auto& d = t.entries();
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
            if (!h(i, j).is_zero()) g(i, j) = d[i] * h(i, j) / d[j];
        }
    }
    return g;
}

}  // namespace

ValuedElement random_element_of_valuation(const FieldConfig& cfg, SeededRng& rng, long k) {
    return random_unit(cfg, rng) * pow(uniformizer(cfg), k);
}

DiagonalCocharacterPoint random_cocharacter(std::size_t n, const FieldConfig& cfg, SeededRng& rng,
                                            long max_valuation) {
    std::vector<ValuedElement> t;
    ValuedElement prod = make_element(cfg, 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        t.push_back(random_element_of_valuation(cfg, rng, rng.uniform(-max_valuation, max_valuation)));
        prod = prod * t.back();
    }
    t.push_back(prod.inverse());
    return DiagonalCocharacterPoint(std::move(t), cfg);
}

std::vector<SLMatrix> sample_stabilizer(const DiagonalCocharacterPoint& t, int count, std::uint64_t seed) {
    if (count < 1) throw PreconditionError("sample_stabilizer: count must be at least 1");
    SeededRng rng(seed);
    std::vector<SLMatrix> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        out.emplace_back(conjugate(t, random_integral_word(t.field(), t.dim(), rng)));
    }
    return out;
}

std::vector<SLMatrix> sample_non_members(const DiagonalCocharacterPoint& t, int count, std::uint64_t seed) {
    if (count < 1) throw PreconditionError("sample_non_members: count must be at least 1");
    if (t.dim() < 2) throw PreconditionError("sample_non_members: SL_1 has no non-members");
    const FieldConfig& cfg = t.field();
    SeededRng rng(seed);
    std::vector<SLMatrix> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        FieldMatrix h = random_integral_word(cfg, t.dim(), rng);
        auto [i, j] = random_pair(t.dim(), rng);
        ValuedElement w = random_element_of_valuation(cfg, rng, -rng.uniform(1, 2));
        SLMatrix g(conjugate(t, multiply(h, elementary(cfg, t.dim(), i, j, w))));
        if (!conjugation_criterion(g, t)) out.push_back(std::move(g));
    }
    return out;
}

Valuation psi_root(const SLMatrix& u, std::size_t i, std::size_t j, const FieldConfig& cfg) {
    const std::size_t n = u.dim();
    if (i >= n || j >= n || i == j) throw PreconditionError("psi_root: (i, j) must be an off-diagonal position");
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == i && b == j) continue;
            const ValuedElement& x = u.matrix()(a, b);
            bool ok = a == b ? x.is_one() : x.is_zero();
            if (!ok) throw PreconditionError("psi_root: matrix is not in the root group of a_ij");
        }
    }
    return valuation(u.matrix()(i, j), cfg);
}

}  // namespace tropsl
