#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainstab/chain.hpp"

namespace chainstab {

enum class DescriptorKind {
    Prefix,             // 0 -> .. -> 0 -> E_k -> .. -> E_0, 0 <= k < r
    ConstantBlockSub,   // entries k..j replaced by E_j, when n_j < min{n_k..n_{j-1}}
    SuffixQuotient,     // quotient E_r -> .. -> E_k -> 0 .. 0, 0 < k <= r
    ConstantBlockQuot,  // quotient with entries k..j replaced by E_k, when n_k < min{n_{k+1}..n_j}
};

inline const char* to_string(DescriptorKind kind) {
    switch (kind) {
        case DescriptorKind::Prefix: return "Prefix";
        case DescriptorKind::ConstantBlockSub: return "ConstantBlockSub";
        case DescriptorKind::SuffixQuotient: return "SuffixQuotient";
        case DescriptorKind::ConstantBlockQuot: return "ConstantBlockQuot";
    }
    return "?";
}

// Entry i of a standard subobject has invariants x[plus] - x[minus] for
// x in {n, d}; an absent index contributes zero. Every standard subchain
// and quotient is built from the original entries this way, so a shape
// depends on the ranks only and is linear in the degrees.
struct EntryMap {
    std::optional<std::size_t> plus;
    std::optional<std::size_t> minus;

    std::int64_t apply(std::span<const std::int64_t> values) const {
        return (plus ? values[*plus] : 0) - (minus ? values[*minus] : 0);
    }
};

struct DescriptorShape {
    DescriptorKind kind;
    std::size_t k;
    std::size_t j;  // equals k for Prefix and SuffixQuotient
    std::vector<EntryMap> sub;  // entries of the standard subchain (for quotient kinds: the kernel)

    // Weights w with (total degree of the subchain) = sum w_i d_i.
    std::vector<std::int64_t> degree_weights() const {
        std::vector<std::int64_t> w(sub.size(), 0);
        for (const auto& e : sub) {
            if (e.plus) {
                ++w[*e.plus];
            }
            if (e.minus) {
                --w[*e.minus];
            }
        }
        return w;
    }
};

// A standard subchain or quotient with the invariants of both sides.
// sub + quotient = original entrywise. For the quotient kinds `sub` is the
// kernel of the quotient map.
//
// For ConstantBlockSub the canonical map into the chain need not be
// injective on actual bundles; only the numerical invariants are used here.
struct StandardDescriptor {
    DescriptorKind kind;
    std::size_t k;
    std::size_t j;
    ChainInvariants sub;
    ChainInvariants quotient;

    std::string tag() const {
        switch (kind) {
            case DescriptorKind::Prefix: return "C1(" + std::to_string(k) + ")";
            case DescriptorKind::ConstantBlockSub: return "C2(" + std::to_string(k) + "," + std::to_string(j) + ")";
            case DescriptorKind::SuffixQuotient: return "C1'(" + std::to_string(k) + ")";
            case DescriptorKind::ConstantBlockQuot: return "C3(" + std::to_string(k) + "," + std::to_string(j) + ")";
        }
        return "?";
    }
};

namespace detail {

inline std::int64_t total_of(const std::vector<EntryMap>& maps, std::span<const std::int64_t> values) {
    std::int64_t s = 0;
    for (const auto& e : maps) {
        s += e.apply(values);
    }
    return s;
}

}  // namespace detail

// Shapes of every standard descriptor whose rank test holds, in the order
// Prefix(k), ConstantBlockSub(k,j), SuffixQuotient(k), ConstantBlockQuot(k,j).
// Descriptors whose subchain or quotient has total rank zero are dropped
// (only possible when ranks vanish).
inline std::vector<DescriptorShape> standard_shapes(std::span<const std::int64_t> ranks) {
    const std::size_t r = ranks.size() - 1;
    std::vector<DescriptorShape> shapes;

    auto keep = [&](DescriptorShape shape) {
        std::int64_t sub_rank = detail::total_of(shape.sub, ranks);
        std::int64_t all = 0;
        for (auto n : ranks) {
            all += n;
        }
        if (sub_rank > 0 && sub_rank < all) {
            shapes.push_back(std::move(shape));
        }
    };

    for (std::size_t k = 0; k < r; ++k) {
        DescriptorShape s{DescriptorKind::Prefix, k, k, std::vector<EntryMap>(r + 1)};
        for (std::size_t i = 0; i <= k; ++i) {
            s.sub[i] = {i, std::nullopt};
        }
        keep(std::move(s));
    }
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t j = k + 1; j <= r; ++j) {
            const auto lowest = *std::min_element(ranks.begin() + k, ranks.begin() + j);
            if (!(ranks[j] < lowest)) {
                continue;
            }
            DescriptorShape s{DescriptorKind::ConstantBlockSub, k, j, std::vector<EntryMap>(r + 1)};
            for (std::size_t i = 0; i <= r; ++i) {
                s.sub[i] = (i >= k && i <= j) ? EntryMap{j, std::nullopt} : EntryMap{i, std::nullopt};
            }
            keep(std::move(s));
        }
    }
    for (std::size_t k = 1; k <= r; ++k) {
        DescriptorShape s{DescriptorKind::SuffixQuotient, k, k, std::vector<EntryMap>(r + 1)};
        for (std::size_t i = 0; i < k; ++i) {
            s.sub[i] = {i, std::nullopt};
        }
        keep(std::move(s));
    }
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t j = k + 1; j <= r; ++j) {
            const auto lowest = *std::min_element(ranks.begin() + k + 1, ranks.begin() + j + 1);
            if (!(ranks[k] < lowest)) {
                continue;
            }
            DescriptorShape s{DescriptorKind::ConstantBlockQuot, k, j, std::vector<EntryMap>(r + 1)};
            for (std::size_t i = k + 1; i <= j; ++i) {
                s.sub[i] = {i, k};
            }
            keep(std::move(s));
        }
    }
    return shapes;
}

inline StandardDescriptor materialize(const DescriptorShape& shape, const ChainInvariants& ci) {
    std::vector<std::int64_t> sub_n(ci.size()), sub_d(ci.size()), quot_n(ci.size()), quot_d(ci.size());
    for (std::size_t i = 0; i < ci.size(); ++i) {
        sub_n[i] = shape.sub[i].apply(ci.ranks());
        sub_d[i] = shape.sub[i].apply(ci.degrees());
        quot_n[i] = ci.rank(i) - sub_n[i];
        quot_d[i] = ci.degree(i) - sub_d[i];
    }
    return StandardDescriptor{shape.kind, shape.k, shape.j, ChainInvariants(std::move(sub_n), std::move(sub_d)),
                              ChainInvariants(std::move(quot_n), std::move(quot_d))};
}

inline std::vector<StandardDescriptor> standard_subchains(const ChainInvariants& ci) {
    std::vector<StandardDescriptor> out;
    for (const auto& shape : standard_shapes(ci.ranks())) {
        out.push_back(materialize(shape, ci));
    }
    return out;
}

// (C0) instance at index i (applies when n_i = n_{i-1}); margin = d_{i-1} - d_i.
struct RankEqualityCheck {
    std::size_t index;
    Rational margin;
    bool holds;
};

// (C1)/(C2)/(C3) instance; margin = mu_alpha(total) - mu_alpha(standard subchain).
struct SlopeCheck {
    std::size_t k;
    std::size_t j;
    Rational margin;
    bool holds;
};

struct Certificate {
    std::string tag;
    Rational margin;
};

struct ConditionReport {
    std::vector<RankEqualityCheck> c0;
    std::vector<SlopeCheck> c1;
    std::vector<SlopeCheck> c2;
    std::vector<SlopeCheck> c3;
    bool all_hold = true;

    bool c0_holds() const {
        return std::all_of(c0.begin(), c0.end(), [](const auto& c) { return c.holds; });
    }

    // First failing instance in the order C0, C1, C2, C3.
    std::optional<Certificate> first_failure() const {
        for (const auto& c : c0) {
            if (!c.holds) {
                return Certificate{"C0(" + std::to_string(c.index) + ")", c.margin};
            }
        }
        for (const auto& c : c1) {
            if (!c.holds) {
                return Certificate{"C1(" + std::to_string(c.k) + ")", c.margin};
            }
        }
        for (const auto& c : c2) {
            if (!c.holds) {
                return Certificate{"C2(" + std::to_string(c.k) + "," + std::to_string(c.j) + ")", c.margin};
            }
        }
        for (const auto& c : c3) {
            if (!c.holds) {
                return Certificate{"C3(" + std::to_string(c.k) + "," + std::to_string(c.j) + ")", c.margin};
            }
        }
        return std::nullopt;
    }
};

inline ConditionReport check_conditions(const ChainInvariants& ci, const StabilityParameter& alpha) {
    require_compatible(ci, alpha);
    ConditionReport report;
    for (std::size_t i = 1; i < ci.size(); ++i) {
        if (ci.rank(i) == ci.rank(i - 1)) {
            const Rational margin(ci.degree(i - 1) - ci.degree(i));
            report.c0.push_back({i, margin, margin.sign() >= 0});
        }
    }
    const Rational mu = alpha_slope(ci, alpha);
    for (const auto& d : standard_subchains(ci)) {
        if (d.kind == DescriptorKind::SuffixQuotient) {
            continue;  // same inequality as the complementary Prefix
        }
        const Rational margin = mu - alpha_slope(d.sub, alpha);
        SlopeCheck check{d.k, d.j, margin, margin.sign() >= 0};
        switch (d.kind) {
            case DescriptorKind::Prefix: report.c1.push_back(check); break;
            case DescriptorKind::ConstantBlockSub: report.c2.push_back(check); break;
            case DescriptorKind::ConstantBlockQuot: report.c3.push_back(check); break;
            case DescriptorKind::SuffixQuotient: break;
        }
    }
    auto ok = [](const auto& v) { return std::all_of(v.begin(), v.end(), [](const auto& c) { return c.holds; }); };
    report.all_hold = ok(report.c0) && ok(report.c1) && ok(report.c2) && ok(report.c3);
    return report;
}

// (C3') instance: margin = mu_alpha(standard quotient) - mu_alpha(total).
struct QuotientCheck {
    std::size_t k;
    std::size_t j;
    Rational margin;
    bool holds;
};

inline std::vector<QuotientCheck> check_c3_prime(const ChainInvariants& ci, const StabilityParameter& alpha) {
    require_compatible(ci, alpha);
    const Rational mu = alpha_slope(ci, alpha);
    std::vector<QuotientCheck> out;
    for (const auto& d : standard_subchains(ci)) {
        if (d.kind != DescriptorKind::ConstantBlockQuot) {
            continue;
        }
        const Rational margin = alpha_slope(d.quotient, alpha) - mu;
        out.push_back({d.k, d.j, margin, margin.sign() >= 0});
    }
    return out;
}

// at_boundary = false: the open stability region (strictly above alpha_Higgs).
// at_boundary = true: only the closed conditions, as used at alpha = alpha_Higgs.
inline bool admissible(const ChainInvariants& ci, const StabilityParameter& alpha, Genus g, bool at_boundary) {
    const bool conditions = check_conditions(ci, alpha).all_hold;
    if (at_boundary) {
        return conditions;
    }
    return conditions && is_above_alpha_higgs(alpha, g);
}

}  // namespace chainstab
