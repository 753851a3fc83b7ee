#include "tropsl/error.hpp"
#include "tropsl/linalg.hpp"
#include "tropsl/polyhedral.hpp"

#include <algorithm>
#include <cstdint>

namespace tropsl {

namespace {

// Indices of processed constraints a ray is tight on.
class ZeroSet {
public:
    explicit ZeroSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    ZeroSet operator&(const ZeroSet& o) const {
        ZeroSet r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
        return r;
    }
    bool subset_of(const ZeroSet& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & ~o.words_[k]) return false;
        }
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    RationalVector v;
    ZeroSet zeros;
};

RationalVector combine(const Rational& s, const RationalVector& a, const Rational& t, const RationalVector& b) {
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i] + t * b[i];
    return r;
}

}  // namespace

ConeGenerators double_description(std::size_t dim, const std::vector<RationalVector>& inequalities,
                                  const std::vector<RationalVector>& equalities) {
    for (const auto& a : inequalities) {
        if (a.size() != dim) throw DimensionError("double_description: inequality has wrong dimension");
    }
    for (const auto& e : equalities) {
        if (e.size() != dim) throw DimensionError("double_description: equality has wrong dimension");
    }
    const std::size_t m = inequalities.size();

    std::vector<RationalVector> lineality = nullspace(equalities, dim);
    std::vector<Ray> rays;

    for (std::size_t c = 0; c < m; ++c) {
        const RationalVector& a = inequalities[c];

        // A lineality direction not orthogonal to a becomes a ray.
        auto hit = std::find_if(lineality.begin(), lineality.end(),
                                [&](const RationalVector& l) { return sgn(dot(a, l)) != 0; });
        if (hit != lineality.end()) {
            RationalVector l0 = *hit;
            lineality.erase(hit);
            Rational al0 = dot(a, l0);
            if (sgn(al0) < 0) {
                for (auto& x : l0) x = -x;
                al0 = -al0;
            }
            for (auto& l : lineality) {
                Rational f = dot(a, l) / al0;
                if (sgn(f) != 0) l = combine(1, l, -f, l0);
            }
            for (auto& r : rays) {
                Rational f = dot(a, r.v) / al0;
                if (sgn(f) != 0) r.v = primitive_direction(combine(1, r.v, -f, l0));
                r.zeros.set(c);
            }
            // l0 is tight on every earlier constraint, since lineality vectors are.
            ZeroSet z(m);
            for (std::size_t k = 0; k < c; ++k) z.set(k);
            rays.push_back({primitive_direction(l0), z});
            continue;
        }

        std::vector<std::size_t> pos, neg;
        std::vector<Rational> val(rays.size());
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            int s = sgn(val[i]);
            if (s > 0) pos.push_back(i);
            else if (s < 0) neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i) {
                if (sgn(val[i]) == 0) rays[i].zeros.set(c);
            }
            continue;
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (sgn(val[i]) >= 0) {
                Ray r = rays[i];
                if (sgn(val[i]) == 0) r.zeros.set(c);
                next.push_back(std::move(r));
            }
        }
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                ZeroSet common = rays[p].zeros & rays[q].zeros;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (common.subset_of(rays[r].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                // val[p] > 0 > val[q]; the combination is tight on a.
                RationalVector v = primitive_direction(combine(val[p], rays[q].v, -val[q], rays[p].v));
                common.set(c);
                next.push_back({std::move(v), common});
            }
        }
        rays = std::move(next);
    }

    ConeGenerators out;
    out.lineality = std::move(lineality);
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

}  // namespace tropsl
