#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainstab/chain.hpp"
#include "chainstab/conditions.hpp"

namespace chainstab {

// An affine function constant + sum_{i=1..r} linear[i-1] * alpha_i.
struct AffineForm {
    Rational constant;
    std::vector<Rational> linear;

    Rational at(const StabilityParameter& alpha) const {
        Rational v = constant;
        for (std::size_t i = 0; i < linear.size(); ++i) {
            if (!linear[i].is_zero()) {
                v += linear[i] * alpha.components()[i];
            }
        }
        return v;
    }

    bool is_constant() const {
        return std::all_of(linear.begin(), linear.end(), [](const Rational& c) { return c.is_zero(); });
    }

    friend AffineForm operator-(const AffineForm& a, const AffineForm& b) {
        AffineForm out{a.constant - b.constant, a.linear};
        for (std::size_t i = 0; i < out.linear.size(); ++i) {
            out.linear[i] -= b.linear[i];
        }
        return out;
    }

    AffineForm scaled(const Rational& s) const {
        AffineForm out{constant * s, linear};
        for (auto& c : out.linear) {
            c *= s;
        }
        return out;
    }
};

// mu_alpha(n, D) as an affine function of alpha, for ranks n and total degree D.
inline AffineForm slope_form(std::span<const std::int64_t> ranks, std::int64_t total_degree) {
    std::int64_t total_rank = 0;
    for (auto n : ranks) {
        total_rank += n;
    }
    if (total_rank == 0) {
        throw InputError("slope of a rank-zero object is undefined");
    }
    const Rational inv(1, total_rank);
    AffineForm f{Rational(total_degree) * inv, std::vector<Rational>(ranks.size() - 1)};
    for (std::size_t i = 1; i < ranks.size(); ++i) {
        f.linear[i - 1] = Rational(ranks[i]) * inv;
    }
    return f;
}

inline AffineForm slope_form(const ChainInvariants& ci) { return slope_form(ci.ranks(), ci.total_degree()); }

namespace detail {

// Scales (coeffs, rhs) by a positive rational so that every entry is an
// integer and the gcd of all entries is 1 (all-zero stays all-zero except
// for the sign of rhs).
inline void canonicalize_row(std::vector<Rational>& coeffs, Rational& rhs) {
    BigInt lcm = 1;
    auto fold_den = [&](const Rational& x) { mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t()); };
    for (const auto& c : coeffs) {
        fold_den(c);
    }
    fold_den(rhs);
    BigInt g = 0;
    auto fold_num = [&](const Rational& x) {
        const BigInt v = x.numerator() * (lcm / x.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    };
    for (const auto& c : coeffs) {
        fold_num(c);
    }
    fold_num(rhs);
    if (g == 0) {
        return;
    }
    const Rational scale(lcm, g);
    for (auto& c : coeffs) {
        c *= scale;
    }
    rhs *= scale;
}

}  // namespace detail

enum class Relation { LessEqual, Less };

struct ConditionTag {
    enum class Kind { C0, C1, C2, C3, AboveHiggs };
    Kind kind;
    std::size_t k;
    std::size_t j;

    std::string to_string() const {
        switch (kind) {
            case Kind::C0: return "C0(" + std::to_string(k) + ")";
            case Kind::C1: return "C1(" + std::to_string(k) + ")";
            case Kind::C2: return "C2(" + std::to_string(k) + "," + std::to_string(j) + ")";
            case Kind::C3: return "C3(" + std::to_string(k) + "," + std::to_string(j) + ")";
            case Kind::AboveHiggs: return "AboveHiggs(" + std::to_string(k) + ")";
        }
        return "?";
    }

    friend bool operator==(const ConditionTag&, const ConditionTag&) = default;
};

// The half-space coeffs . alpha (<= | <) bound over alpha = (alpha_1..alpha_r),
// stored with integer, content-reduced entries.
struct LinearCondition {
    std::vector<Rational> coeffs;
    Rational bound;
    Relation relation;
    ConditionTag tag;

    static LinearCondition make(std::vector<Rational> coeffs, Rational bound, Relation relation, ConditionTag tag) {
        detail::canonicalize_row(coeffs, bound);
        return LinearCondition{std::move(coeffs), std::move(bound), relation, tag};
    }

    // affine >= 0, i.e. -linear . alpha <= constant.
    static LinearCondition nonnegative(const AffineForm& f, ConditionTag tag) {
        std::vector<Rational> coeffs(f.linear.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            coeffs[i] = -f.linear[i];
        }
        return make(std::move(coeffs), f.constant, Relation::LessEqual, tag);
    }

    std::size_t dimension() const { return coeffs.size(); }

    bool contains(const StabilityParameter& alpha, bool closure) const {
        if (alpha.length() != coeffs.size()) {
            throw InputError("stability parameter has " + std::to_string(alpha.length()) +
                             " components but the half-space lives in dimension " + std::to_string(coeffs.size()));
        }
        Rational lhs;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (!coeffs[i].is_zero()) {
                lhs += coeffs[i] * alpha.components()[i];
            }
        }
        if (relation == Relation::Less && !closure) {
            return lhs < bound;
        }
        return lhs <= bound;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) {
                continue;
            }
            const bool negative = coeffs[i].sign() < 0;
            const Rational mag = abs(coeffs[i]);
            s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
            s += (mag == Rational(1) ? std::string() : mag.to_string() + "*") + "a" + std::to_string(i + 1);
        }
        if (s.empty()) {
            s = "0";
        }
        return s + (relation == Relation::Less ? " < " : " <= ") + bound.to_string();
    }
};

// H-representation of the stability region: every (C1), (C2), (C3)
// instance as a closed half-space and the r strict conditions
// alpha_i - alpha_{i-1} > 2g-2. (C0) does not depend on alpha: each violated
// instance contributes the infeasible row 0 . alpha <= d_{i-1} - d_i (stored
// as 0 <= -1), so membership agrees with admissible() for every input.
inline std::vector<LinearCondition> region_halfspaces(const ChainInvariants& ci, Genus g) {
    const std::size_t r = ci.length();
    std::vector<LinearCondition> out;
    for (std::size_t i = 1; i <= r; ++i) {
        if (ci.rank(i) == ci.rank(i - 1) && ci.degree(i) > ci.degree(i - 1)) {
            out.push_back(LinearCondition::make(std::vector<Rational>(r), Rational(ci.degree(i - 1) - ci.degree(i)),
                                                Relation::LessEqual, {ConditionTag::Kind::C0, i, i}));
        }
    }
    const AffineForm total = slope_form(ci);
    for (const auto& d : standard_subchains(ci)) {
        ConditionTag tag{ConditionTag::Kind::C1, d.k, d.j};
        switch (d.kind) {
            case DescriptorKind::Prefix: tag.kind = ConditionTag::Kind::C1; break;
            case DescriptorKind::ConstantBlockSub: tag.kind = ConditionTag::Kind::C2; break;
            case DescriptorKind::ConstantBlockQuot: tag.kind = ConditionTag::Kind::C3; break;
            case DescriptorKind::SuffixQuotient: continue;
        }
        out.push_back(LinearCondition::nonnegative(total - slope_form(d.sub), tag));
    }
    for (std::size_t i = 1; i <= r; ++i) {
        // alpha_{i-1} - alpha_i < -(2g-2)
        std::vector<Rational> coeffs(r);
        coeffs[i - 1] = -1;
        if (i >= 2) {
            coeffs[i - 2] = 1;
        }
        out.push_back(LinearCondition::make(std::move(coeffs), Rational(-g.canonical_degree()), Relation::Less,
                                            {ConditionTag::Kind::AboveHiggs, i, i}));
    }
    return out;
}

inline bool region_contains(const std::vector<LinearCondition>& halfspaces, const StabilityParameter& alpha,
                            bool closure) {
    return std::all_of(halfspaces.begin(), halfspaces.end(),
                       [&](const LinearCondition& h) { return h.contains(alpha, closure); });
}

// The hyperplane { alpha : mu_alpha(n', D') = mu_alpha(n, d) } keyed by the
// sub-rank vector n' and sub total degree D'. normal . alpha = offset, with
// integer content-reduced entries and first non-zero normal entry positive.
struct Wall {
    std::vector<std::int64_t> sub_ranks;
    std::int64_t sub_total_degree;
    std::vector<Rational> normal;
    Rational offset;

    bool contains(const StabilityParameter& alpha) const {
        Rational lhs;
        for (std::size_t i = 0; i < normal.size(); ++i) {
            lhs += normal[i] * alpha.components()[i];
        }
        return lhs == offset;
    }

    bool same_hyperplane(const Wall& o) const { return normal == o.normal && offset == o.offset; }

    friend bool operator==(const Wall& a, const Wall& b) {
        return a.sub_ranks == b.sub_ranks && a.sub_total_degree == b.sub_total_degree;
    }
    friend auto operator<=>(const Wall& a, const Wall& b) {
        if (auto c = a.sub_ranks <=> b.sub_ranks; c != 0) {
            return c;
        }
        return a.sub_total_degree <=> b.sub_total_degree;
    }
};

struct WallOptions {
    // Merge walls with identical hyperplanes, keeping the smallest key.
    bool merge_geometric = false;
    // Keep only walls where some sub-invariants (n', d') with total D' and
    // the complement both satisfy every condition at the given parameter.
    bool effective_only = false;
};

namespace detail {

// Every n' with 0 <= n'_i <= n_i and n' not in {0, n}.
inline std::vector<std::vector<std::int64_t>> proper_sub_ranks(std::span<const std::int64_t> ranks) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur(ranks.size(), 0);
    for (;;) {
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == ranks[i]) {
            cur[i] = 0;
            ++i;
        }
        if (i == cur.size()) {
            break;
        }
        ++cur[i];
        if (!std::equal(cur.begin(), cur.end(), ranks.begin())) {
            out.push_back(cur);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// G(alpha) = |n'| mu_alpha(n, d) - sum alpha_i n'_i; the wall (n', D') is G = D'.
inline AffineForm wall_function(const ChainInvariants& ci, std::span<const std::int64_t> sub_ranks) {
    std::int64_t sub_total = 0;
    for (auto n : sub_ranks) {
        sub_total += n;
    }
    AffineForm g = slope_form(ci).scaled(Rational(sub_total));
    for (std::size_t i = 1; i < sub_ranks.size(); ++i) {
        g.linear[i - 1] -= Rational(sub_ranks[i]);
    }
    return g;
}

inline Wall make_wall(const ChainInvariants& ci, std::vector<std::int64_t> sub_ranks, std::int64_t sub_total_degree) {
    const AffineForm eq = slope_form(sub_ranks, sub_total_degree) - slope_form(ci);
    // eq(alpha) = 0  <=>  eq.linear . alpha = -eq.constant
    std::vector<Rational> normal = eq.linear;
    Rational offset = -eq.constant;
    canonicalize_row(normal, offset);
    for (const auto& c : normal) {
        if (c.is_zero()) {
            continue;
        }
        if (c.sign() < 0) {
            for (auto& x : normal) {
                x = -x;
            }
            offset = -offset;
        }
        break;
    }
    return Wall{std::move(sub_ranks), sub_total_degree, std::move(normal), std::move(offset)};
}

// True when some d' with sum D' makes (n', d') and (n - n', d - d') both
// satisfy all conditions at alpha, where mu_alpha(n', D') = mu_alpha(n, d).
// Both sides satisfying (C1) pins every prefix sum of d' into a finite
// interval, so the search below is exhaustive.
inline bool wall_is_effective(const ChainInvariants& ci, const std::vector<std::int64_t>& sub_ranks,
                              std::int64_t sub_total_degree, const StabilityParameter& alpha) {
    const std::size_t size = ci.size();
    const Rational mu = alpha_slope(ci, alpha);
    std::vector<std::int64_t> comp_ranks(size);
    for (std::size_t i = 0; i < size; ++i) {
        comp_ranks[i] = ci.rank(i) - sub_ranks[i];
    }
    // Bounds on S'_k = d'_0 + .. + d'_k for k < r.
    std::vector<std::int64_t> lo(size), hi(size);
    Rational sub_prefix_rank, sub_prefix_alpha, comp_prefix_rank, comp_prefix_alpha;
    std::int64_t total_prefix_degree = 0;
    for (std::size_t k = 0; k < size; ++k) {
        sub_prefix_rank += Rational(sub_ranks[k]);
        sub_prefix_alpha += alpha.at(k) * Rational(sub_ranks[k]);
        comp_prefix_rank += Rational(comp_ranks[k]);
        comp_prefix_alpha += alpha.at(k) * Rational(comp_ranks[k]);
        total_prefix_degree += ci.degree(k);
        hi[k] = to_int64((mu * sub_prefix_rank - sub_prefix_alpha).floor());
        lo[k] = to_int64((Rational(total_prefix_degree) - (mu * comp_prefix_rank - comp_prefix_alpha)).ceil());
    }
    if (lo[size - 1] > sub_total_degree || hi[size - 1] < sub_total_degree) {
        return false;
    }
    lo[size - 1] = hi[size - 1] = sub_total_degree;

    std::vector<std::int64_t> degrees(size);
    auto search = [&](auto&& self, std::size_t k, std::int64_t prev) -> bool {
        if (k == size) {
            std::vector<std::int64_t> comp_degrees(size);
            for (std::size_t i = 0; i < size; ++i) {
                comp_degrees[i] = ci.degree(i) - degrees[i];
            }
            const ChainInvariants sub(sub_ranks, degrees);
            const ChainInvariants comp(comp_ranks, comp_degrees);
            return check_conditions(sub, alpha).all_hold && check_conditions(comp, alpha).all_hold;
        }
        std::int64_t from = lo[k];
        std::int64_t to = hi[k];
        if (sub_ranks[k] == 0) {
            from = to = prev;  // d'_k = 0
        } else if (comp_ranks[k] == 0) {
            from = to = prev + ci.degree(k);  // d'_k = d_k
        }
        from = std::max(from, lo[k]);
        to = std::min(to, hi[k]);
        for (std::int64_t s = from; s <= to; ++s) {
            degrees[k] = s - prev;
            if (self(self, k + 1, s)) {
                return true;
            }
        }
        return false;
    };
    return search(search, 0, 0);
}

inline std::vector<Wall> finish_walls(std::vector<Wall> walls, const WallOptions& options) {
    std::sort(walls.begin(), walls.end());
    if (!options.merge_geometric) {
        return walls;
    }
    std::vector<Wall> merged;
    for (auto& w : walls) {
        const bool seen = std::any_of(merged.begin(), merged.end(), [&](const Wall& m) { return m.same_hyperplane(w); });
        if (!seen) {
            merged.push_back(std::move(w));
        }
    }
    return merged;
}

}  // namespace detail

// All walls through alpha; alpha is a critical value iff the list is non-empty.
inline std::vector<Wall> walls_through(const ChainInvariants& ci, const StabilityParameter& alpha,
                                       const WallOptions& options = {}) {
    require_compatible(ci, alpha);
    std::vector<Wall> walls;
    for (auto& sub : detail::proper_sub_ranks(ci.ranks())) {
        const AffineForm g = detail::wall_function(ci, sub);
        if (g.is_constant()) {
            continue;  // n' proportional to n: equality does not depend on alpha
        }
        const Rational value = g.at(alpha);
        if (!value.is_integer()) {
            continue;
        }
        const std::int64_t sub_degree = to_int64(value.numerator());
        if (options.effective_only && !detail::wall_is_effective(ci, sub, sub_degree, alpha)) {
            continue;
        }
        walls.push_back(detail::make_wall(ci, std::move(sub), sub_degree));
    }
    return detail::finish_walls(std::move(walls), options);
}

struct CriticalPoint {
    Rational t;
    StabilityParameter alpha;
    std::vector<Wall> walls;
};

inline StabilityParameter segment_point(const StabilityParameter& from, const StabilityParameter& to,
                                        const Rational& t) {
    std::vector<Rational> a(from.length());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = from.components()[i] + t * (to.components()[i] - from.components()[i]);
    }
    return StabilityParameter(std::move(a));
}

// Critical values on alpha(t) = (1-t) alpha_minus + t alpha_plus, t in [0, 1],
// sorted by t. A segment lying inside a wall has a continuum of critical
// values and is rejected as degenerate.
inline std::vector<CriticalPoint> critical_values_on_segment(const ChainInvariants& ci,
                                                             const StabilityParameter& alpha_minus,
                                                             const StabilityParameter& alpha_plus,
                                                             const WallOptions& options = {}) {
    require_compatible(ci, alpha_minus);
    require_compatible(ci, alpha_plus);
    if (alpha_minus == alpha_plus) {
        throw InputError("degenerate segment: both endpoints are " + alpha_minus.to_string());
    }
    std::map<Rational, std::vector<Wall>> by_t;
    for (auto& sub : detail::proper_sub_ranks(ci.ranks())) {
        const AffineForm g = detail::wall_function(ci, sub);
        if (g.is_constant()) {
            continue;
        }
        const Rational g0 = g.at(alpha_minus);
        const Rational g1 = g.at(alpha_plus);
        if (g0 == g1) {
            if (g0.is_integer()) {
                std::string ranks;
                for (auto n : sub) {
                    ranks += (ranks.empty() ? "" : ",") + std::to_string(n);
                }
                throw InputError("degenerate segment: it lies inside the wall n'=(" + ranks + "), D'=" + g0.to_string());
            }
            continue;
        }
        const Rational low = std::min(g0, g1);
        const Rational high = std::max(g0, g1);
        for (BigInt v = low.ceil(); v <= high.floor(); ++v) {
            const Rational t = (Rational(v) - g0) / (g1 - g0);
            const std::int64_t sub_degree = to_int64(v);
            if (options.effective_only &&
                !detail::wall_is_effective(ci, sub, sub_degree, segment_point(alpha_minus, alpha_plus, t))) {
                continue;
            }
            by_t[t].push_back(detail::make_wall(ci, sub, sub_degree));
        }
    }
    std::vector<CriticalPoint> out;
    for (auto& [t, walls] : by_t) {
        out.push_back({t, segment_point(alpha_minus, alpha_plus, t), detail::finish_walls(std::move(walls), options)});
    }
    return out;
}

// Walls meeting the closed box [lo, hi]. The wall function is affine, so its
// range over the box is spanned by its values at the two vertices selected
// coordinate-wise by the signs of its coefficients.
inline std::vector<Wall> walls_in_box(const ChainInvariants& ci, const StabilityParameter& lo,
                                      const StabilityParameter& hi, const WallOptions& options = {}) {
    require_compatible(ci, lo);
    require_compatible(ci, hi);
    for (std::size_t i = 0; i < lo.length(); ++i) {
        if (lo.components()[i] > hi.components()[i]) {
            throw InputError("empty box: lower corner exceeds upper corner in coordinate " + std::to_string(i + 1));
        }
    }
    std::vector<Wall> walls;
    for (auto& sub : detail::proper_sub_ranks(ci.ranks())) {
        const AffineForm g = detail::wall_function(ci, sub);
        if (g.is_constant()) {
            continue;
        }
        Rational low = g.constant;
        Rational high = g.constant;
        for (std::size_t i = 0; i < g.linear.size(); ++i) {
            const Rational a = g.linear[i] * lo.components()[i];
            const Rational b = g.linear[i] * hi.components()[i];
            low += std::min(a, b);
            high += std::max(a, b);
        }
        for (BigInt v = low.ceil(); v <= high.floor(); ++v) {
            walls.push_back(detail::make_wall(ci, sub, to_int64(v)));
        }
    }
    return detail::finish_walls(std::move(walls), options);
}

}  // namespace chainstab
