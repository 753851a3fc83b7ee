#include "tropsl/schur.hpp"

#include "tropsl/error.hpp"
#include "tropsl/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace tropsl {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw ParseError("partition needs at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw ParseError("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw ParseError("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<long> parts;
    for (const auto& q : parse_rational_list(text)) {
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw ParseError("partition parts must be integers");
        parts.push_back(q.get_num().get_si());
    }
    return Partition(std::move(parts));
}

Partition Partition::staircase(std::size_t n) {
    std::vector<long> parts(n);
    for (std::size_t i = 0; i < n; ++i) parts[i] = static_cast<long>(n - i);
    return Partition(std::move(parts));
}

Partition Partition::standard_rep(std::size_t n) {
    std::vector<long> parts(n, 0);
    parts.at(0) = 1;
    return Partition(std::move(parts));
}

long Partition::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition Partition::padded(std::size_t n) const {
    std::vector<long> parts = parts_;
    if (parts.size() > n) {
        for (std::size_t i = n; i < parts.size(); ++i) {
            if (parts[i] != 0) throw DimensionError("partition has more than " + std::to_string(n) + " nonzero parts");
        }
        parts.resize(n);
    }
    parts.resize(n, 0);
    return Partition(std::move(parts));
}

Partition Partition::shifted(long m) const {
    std::vector<long> parts = parts_;
    for (auto& p : parts) p += m;
    return Partition(std::move(parts));
}

bool Partition::is_rectangular() const {
    return std::all_of(parts_.begin(), parts_.end(), [&](long p) { return p == parts_.front(); });
}

std::string Partition::to_string() const { return format_exponent(parts_); }

std::string format_exponent(const Exponent& e) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ')';
    return os.str();
}

namespace {

Exponent sorted_content(const Exponent& mu) {
    Exponent c;
    for (long x : mu) {
        if (x < 0) throw PreconditionError("content entries must be nonnegative");
        if (x > 0) c.push_back(x);
    }
    std::sort(c.begin(), c.end(), std::greater<>());
    return c;
}

bool dominates_sorted(const Partition& lambda, const Exponent& content) {
    long a = 0, b = 0;
    std::size_t len = std::max(lambda.length(), content.size());
    for (std::size_t k = 0; k < len; ++k) {
        a += k < lambda.length() ? lambda[k] : 0;
        b += k < content.size() ? content[k] : 0;
        if (a < b) return false;
    }
    return a == b;
}

// Fills the diagram column by column, top to bottom. Rows weakly increase
// because the left neighbour is always placed first.
class TableauCounter {
public:
    TableauCounter(const Partition& lambda, const Exponent& content)
        : remaining_(content.begin(), content.end()), values_(static_cast<long>(content.size())) {
        std::vector<long> rows;
        for (long p : lambda.parts()) {
            if (p > 0) rows.push_back(p);
        }
        grid_.resize(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) grid_[r].assign(rows[r], 0);
        long width = rows.empty() ? 0 : rows.front();
        for (long c = 0; c < width; ++c) {
            long height = 0;
            while (height < static_cast<long>(rows.size()) && rows[height] > c) ++height;
            for (long r = 0; r < height; ++r) cells_.push_back({r, c, height});
        }
    }

    std::int64_t count() {
        total_ = 0;
        fill(0);
        return total_;
    }

private:
    struct Cell {
        long row, col, column_height;
    };

    void fill(std::size_t k) {
        if (k == cells_.size()) {
            ++total_;
            return;
        }
        const Cell& cell = cells_[k];
        long lo = 1;
        if (cell.col > 0) lo = std::max(lo, grid_[cell.row][cell.col - 1]);
        if (cell.row > 0) lo = std::max(lo, grid_[cell.row - 1][cell.col] + 1);
        // Cells below in this column need strictly larger values.
        long hi = values_ - (cell.column_height - 1 - cell.row);
        for (long v = lo; v <= hi; ++v) {
            if (remaining_[v - 1] == 0) continue;
            --remaining_[v - 1];
            grid_[cell.row][cell.col] = v;
            fill(k + 1);
            ++remaining_[v - 1];
        }
        grid_[cell.row][cell.col] = 0;
    }

    std::vector<long> remaining_;
    long values_;
    std::vector<std::vector<long>> grid_;
    std::vector<Cell> cells_;
    std::int64_t total_ = 0;
};

}  // namespace

bool dominates(const Partition& lambda, const Exponent& mu) { return dominates_sorted(lambda, sorted_content(mu)); }

std::int64_t kostka(const Partition& lambda, const Exponent& mu) {
    Exponent content = sorted_content(mu);
    if (std::accumulate(content.begin(), content.end(), 0L) != lambda.degree()) {
        throw PreconditionError("kostka: content degree differs from |lambda|");
    }
    if (!dominates_sorted(lambda, content)) return 0;
    return TableauCounter(lambda, content).count();
}

std::vector<Exponent> compositions(long degree, std::size_t n) {
    std::vector<Exponent> out;
    if (n == 0) return out;
    Exponent cur(n, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (long v = left; v >= 0; --v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, degree);
    return out;
}

SchurExpansion schur_expand(const Partition& lambda_in, std::size_t n, Execution exec) {
    Partition lambda = lambda_in.padded(n);
    std::vector<Exponent> all = compositions(lambda.degree(), n);

    // Kostka numbers only depend on the sorted content.
    std::vector<Exponent> contents;
    for (const auto& mu : all) {
        Exponent c = mu;
        std::sort(c.begin(), c.end(), std::greater<>());
        contents.push_back(std::move(c));
    }
    std::vector<Exponent> distinct = contents;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<std::int64_t> table(distinct.size());
    const long m = static_cast<long>(distinct.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < m; ++i) table[i] = kostka(lambda, distinct[i]);
    } else {
        for (long i = 0; i < m; ++i) table[i] = kostka(lambda, distinct[i]);
    }

    SchurExpansion s;
    for (std::size_t k = 0; k < all.size(); ++k) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), contents[k]);
        std::int64_t c = table[it - distinct.begin()];
        if (c != 0) s.emplace(all[k], c);
    }
    return s;
}

Rational evaluate(const SchurExpansion& s, std::span<const Rational> z) {
    Rational total = 0;
    for (const auto& [mu, c] : s) {
        if (mu.size() != z.size()) throw DimensionError("evaluate: point has wrong dimension");
        Rational term(c);
        for (std::size_t i = 0; i < z.size(); ++i) {
            Rational p = 1;
            for (long e = 0; e < mu[i]; ++e) p *= z[i];
            term *= p;
        }
        total += term;
    }
    return total;
}

Rational bialternant_eval(const Partition& lambda_in, std::span<const Rational> z) {
    const std::size_t n = z.size();
    Partition lambda = lambda_in.padded(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (z[i] == z[j]) throw PreconditionError("bialternant_eval: repeated evaluation point");
        }
    }
    auto power = [](const Rational& x, long e) {
        Rational p = 1;
        for (long k = 0; k < e; ++k) p *= x;
        return p;
    };
    RationalMatrix num(n, n), den(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const long shift = static_cast<long>(n - 1 - i);
        for (std::size_t j = 0; j < n; ++j) {
            num(i, j) = power(z[j], lambda[i] + shift);
            den(i, j) = power(z[j], shift);
        }
    }
    return determinant(num) / determinant(den);
}

std::vector<Exponent> weights_of(const Partition& lambda, std::size_t n) {
    std::vector<Exponent> out;
    for (const auto& [mu, c] : schur_expand(lambda, n)) out.push_back(mu);
    return out;
}

Exponent highest_weight(std::span<const Exponent> weights, const Basis& basis) {
    if (weights.empty()) throw PreconditionError("highest_weight: empty weight set");
    for (const auto& w : weights) {
        if (w.size() != basis.dim()) throw DimensionError("highest_weight: weight and basis dimensions differ");
    }
    for (const auto& candidate : weights) {
        bool highest = true;
        for (const auto& mu : weights) {
            Exponent d(candidate.size());
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = candidate[i] - mu[i];
            if (!basis.is_nonnegative_combination(d)) {
                highest = false;
                break;
            }
        }
        if (highest) return candidate;
    }
    throw PreconditionError("highest_weight: no weight dominates all others for basis " + basis.to_string());
}

}  // namespace tropsl
