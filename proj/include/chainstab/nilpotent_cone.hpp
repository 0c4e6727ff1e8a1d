#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "chainstab/chain.hpp"
#include "chainstab/conditions.hpp"
#include "chainstab/exact_lp.hpp"

namespace chainstab {

// Total chain degree D whose system of Hodge bundles has degree d, under
// h_i = d_i + i(2g-2) n_i:  D = d - (2g-2) sum i n_i.
inline std::int64_t chain_total_degree(std::span<const std::int64_t> ranks, std::int64_t d, Genus g) {
    std::int64_t weighted = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        weighted += static_cast<std::int64_t>(i) * ranks[i];
    }
    return d - g.canonical_degree() * weighted;
}

inline std::vector<std::int64_t> higgs_summand_degrees(const ChainInvariants& ci, Genus g) {
    std::vector<std::int64_t> h(ci.size());
    for (std::size_t i = 0; i < ci.size(); ++i) {
        h[i] = ci.degree(i) + static_cast<std::int64_t>(i) * g.canonical_degree() * ci.rank(i);
    }
    return h;
}

// -2 sum_{i<j} (j-i) n_i n_j (d_j/n_j - d_i/n_i) written as
// -2 sum_{i<j} (j-i) (n_i d_j - n_j d_i), which stays defined when ranks vanish.
inline Rational extended_weight(const ChainInvariants& ci) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < ci.size(); ++i) {
        for (std::size_t j = i + 1; j < ci.size(); ++j) {
            sum += BigInt(static_cast<long>(j - i)) *
                   (BigInt(static_cast<long>(ci.rank(i))) * BigInt(static_cast<long>(ci.degree(j))) -
                    BigInt(static_cast<long>(ci.rank(j))) * BigInt(static_cast<long>(ci.degree(i))));
        }
    }
    return Rational(BigInt(-2 * sum));
}

inline Rational weight(const ChainInvariants& ci) {
    if (!ci.all_ranks_positive()) {
        throw InputError("weight needs every rank positive (slopes d_i/n_i), got " + ci.to_string());
    }
    return extended_weight(ci);
}

struct FixedPointType {
    ChainInvariants chain;
    std::vector<std::int64_t> higgs_degrees;
    Rational weight;
};

struct EnumerationOptions {
    // Maximal number of parts r+1 of the rank composition; defaults to n.
    std::optional<std::size_t> max_len;
    // Admit zero ranks strictly inside the chain (first and last stay positive).
    bool allow_interior_zeros = false;
    // Largest integer box (product of coordinate ranges) searched per composition.
    std::uint64_t box_limit = 20'000'000;
};

namespace detail {

inline void compositions(std::int64_t remaining, std::size_t max_parts, bool interior_zeros,
                         std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
    if (remaining == 0) {
        if (!cur.empty() && cur.back() > 0) {
            out.push_back(cur);
        }
        return;
    }
    if (cur.size() == max_parts) {
        return;
    }
    const std::int64_t lowest = (interior_zeros && !cur.empty()) ? 0 : 1;
    for (std::int64_t part = lowest; part <= remaining; ++part) {
        cur.push_back(part);
        compositions(remaining - part, max_parts, interior_zeros, cur, out);
        cur.pop_back();
    }
}

// A linear constraint sum coeffs_k S_k <= rhs on prefix sums S_0..S_{r-1}.
struct PrefixRow {
    std::vector<Rational> coeffs;
    Rational rhs;
    bool equality = false;
    std::size_t last = 0;  // largest k with a non-zero coefficient

    bool satisfied(const std::vector<std::int64_t>& prefix) const {
        Rational lhs;
        for (std::size_t k = 0; k <= last && k < coeffs.size(); ++k) {
            if (!coeffs[k].is_zero()) {
                lhs += coeffs[k] * Rational(prefix[k]);
            }
        }
        return equality ? lhs == rhs : lhs <= rhs;
    }
};

// Rewrites sum_i w_i d_i (relation) rhs in prefix sums, with S_r = total.
inline PrefixRow prefix_row(const std::vector<Rational>& w, Rational rhs, std::int64_t total, bool equality) {
    const std::size_t r = w.size() - 1;
    PrefixRow row{std::vector<Rational>(r), rhs - w[r] * Rational(total), equality, 0};
    for (std::size_t k = 0; k < r; ++k) {
        row.coeffs[k] = w[k] - w[k + 1];
        if (!row.coeffs[k].is_zero()) {
            row.last = k;
        }
    }
    return row;
}

// Every admissible condition at alpha for fixed ranks and total degree,
// as linear rows in the prefix sums.
inline std::vector<PrefixRow> admissibility_rows(const std::vector<std::int64_t>& ranks, std::int64_t total,
                                                 const StabilityParameter& alpha) {
    const std::size_t size = ranks.size();
    std::vector<PrefixRow> rows;
    auto unit = [&](std::size_t i, std::int64_t v) {
        std::vector<Rational> w(size);
        w[i] = v;
        return w;
    };
    for (std::size_t i = 0; i < size; ++i) {
        if (ranks[i] == 0) {
            rows.push_back(prefix_row(unit(i, 1), Rational(0), total, true));
        }
    }
    for (std::size_t i = 1; i < size; ++i) {
        if (ranks[i] == ranks[i - 1]) {
            std::vector<Rational> w(size);
            w[i] = 1;
            w[i - 1] = -1;
            rows.push_back(prefix_row(w, Rational(0), total, false));
        }
    }
    std::int64_t total_rank = 0;
    Rational alpha_part;
    for (std::size_t i = 0; i < size; ++i) {
        total_rank += ranks[i];
        alpha_part += alpha.at(i) * Rational(ranks[i]);
    }
    const Rational mu = (Rational(total) + alpha_part) / Rational(total_rank);
    for (const auto& shape : standard_shapes(ranks)) {
        if (shape.kind == DescriptorKind::SuffixQuotient) {
            continue;
        }
        std::int64_t sub_rank = 0;
        Rational sub_alpha;
        for (std::size_t i = 0; i < size; ++i) {
            const std::int64_t n = shape.sub[i].apply(ranks);
            sub_rank += n;
            sub_alpha += alpha.at(i) * Rational(n);
        }
        std::vector<Rational> w(size);
        const auto weights = shape.degree_weights();
        for (std::size_t i = 0; i < size; ++i) {
            w[i] = weights[i];
        }
        // sub degree + sub alpha part <= mu * sub rank
        rows.push_back(prefix_row(w, mu * Rational(sub_rank) - sub_alpha, total, false));
    }
    return rows;
}

inline std::vector<ChainInvariants> admissible_degree_vectors(const std::vector<std::int64_t>& ranks,
                                                              std::int64_t total, const StabilityParameter& alpha,
                                                              std::uint64_t box_limit) {
    const std::size_t r = ranks.size() - 1;
    if (r == 0) {
        return {ChainInvariants(ranks, {total})};
    }
    const auto rows = admissibility_rows(ranks, total, alpha);
    LinearProgram lp(r);
    for (const auto& row : rows) {
        lp.add_row(row.coeffs, row.equality ? RowSense::Equal : RowSense::LessEqual, row.rhs);
    }
    if (!lp.feasible()) {
        return {};
    }
    std::vector<std::int64_t> lo(r), hi(r);
    std::uint64_t box = 1;
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<Rational> objective(r);
        objective[k] = 1;
        const LpSolution top = lp.maximize(objective);
        const LpSolution bottom = lp.minimize(objective);
        if (top.status != LpStatus::Optimal || bottom.status != LpStatus::Optimal) {
            std::string text;
            for (auto n : ranks) {
                text += (text.empty() ? "" : ",") + std::to_string(n);
            }
            throw EnumerationOverflow("admissible degrees for ranks (" + text + ") are unbounded in prefix sum S_" +
                                      std::to_string(k));
        }
        lo[k] = to_int64(bottom.value.ceil());
        hi[k] = to_int64(top.value.floor());
        if (lo[k] > hi[k]) {
            return {};
        }
        const auto width = static_cast<std::uint64_t>(hi[k] - lo[k] + 1);
        if (width > box_limit || box > box_limit / width) {
            throw EnumerationOverflow("certified degree box exceeds the limit of " + std::to_string(box_limit) +
                                      " points");
        }
        box *= width;
    }

    std::vector<std::vector<const PrefixRow*>> rows_at(r);
    for (const auto& row : rows) {
        rows_at[row.last].push_back(&row);
    }
    std::vector<ChainInvariants> out;
    std::vector<std::int64_t> prefix(r);
    auto descend = [&](auto&& self, std::size_t k) -> void {
        if (k == r) {
            std::vector<std::int64_t> degrees(r + 1);
            std::int64_t prev = 0;
            for (std::size_t i = 0; i < r; ++i) {
                degrees[i] = prefix[i] - prev;
                prev = prefix[i];
            }
            degrees[r] = total - prev;
            for (std::size_t i = 0; i <= r; ++i) {
                if (ranks[i] == 0 && degrees[i] != 0) {
                    return;
                }
            }
            ChainInvariants ci(ranks, std::move(degrees));
            if (check_conditions(ci, alpha).all_hold) {
                out.push_back(std::move(ci));
            }
            return;
        }
        for (std::int64_t s = lo[k]; s <= hi[k]; ++s) {
            prefix[k] = s;
            bool ok = true;
            for (const PrefixRow* row : rows_at[k]) {
                if (!row->satisfied(prefix)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                self(self, k + 1);
            }
        }
    };
    descend(descend, 0);
    return out;
}

}  // namespace detail

// Admissible fixed-point types at alpha_Higgs with total rank n and Higgs
// degree d, sorted by (r, ranks, degrees).
inline std::vector<FixedPointType> enumerate_fixed_point_types(std::int64_t n, std::int64_t d, Genus g,
                                                               const EnumerationOptions& options = {}) {
    require_hyperbolic(g, "fixed-point enumeration");
    if (n < 1) {
        throw InputError("total rank must be >= 1, got " + std::to_string(n));
    }
    const std::size_t max_parts = options.max_len.value_or(static_cast<std::size_t>(n));
    if (max_parts < 1) {
        throw InputError("max length must be >= 1");
    }
    std::vector<std::vector<std::int64_t>> comps;
    std::vector<std::int64_t> cur;
    detail::compositions(n, max_parts, options.allow_interior_zeros, cur, comps);

    std::vector<FixedPointType> out;
    for (const auto& ranks : comps) {
        const std::size_t r = ranks.size() - 1;
        const std::int64_t total = chain_total_degree(ranks, d, g);
        for (auto& ci : detail::admissible_degree_vectors(ranks, total, alpha_higgs(r, g), options.box_limit)) {
            auto h = higgs_summand_degrees(ci, g);
            Rational w = extended_weight(ci);
            out.push_back(FixedPointType{std::move(ci), std::move(h), std::move(w)});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.chain < b.chain; });
    return out;
}

struct ComponentReport {
    std::vector<FixedPointType> types;
    std::size_t count = 0;
    bool coprime = false;
    // When coprime, count is the number of irreducible components of the
    // global nilpotent cone; otherwise each type contributes at least one.
    bool exact = false;
};

inline ComponentReport component_report(std::int64_t n, std::int64_t d, Genus g,
                                        const EnumerationOptions& options = {}) {
    ComponentReport report;
    report.types = enumerate_fixed_point_types(n, d, g, options);
    report.count = report.types.size();
    report.coprime = std::gcd(n, d) == 1;
    report.exact = report.coprime;
    return report;
}

struct WeightLevel {
    Rational weight;
    std::vector<FixedPointType> types;
};

// Types grouped by weight, heaviest first. Unions of leading levels model
// the closed unions of downward strata.
inline std::vector<WeightLevel> order_by_weight(const std::vector<FixedPointType>& types) {
    std::map<Rational, std::vector<FixedPointType>, std::greater<>> levels;
    for (const auto& t : types) {
        levels[t.weight].push_back(t);
    }
    std::vector<WeightLevel> out;
    for (auto& [w, ts] : levels) {
        out.push_back({w, std::move(ts)});
    }
    return out;
}

// Dimension n^2(g-1)+1 of every irreducible component of the nilpotent cone.
inline std::int64_t expected_dimension(std::int64_t n, Genus g) {
    require_hyperbolic(g, "the nilpotent cone dimension");
    if (n < 1) {
        throw InputError("total rank must be >= 1, got " + std::to_string(n));
    }
    return n * n * (g.value() - 1) + 1;
}

}  // namespace chainstab
