#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chainstab/chain.hpp"
#include "chainstab/conditions.hpp"

namespace chainstab {

// chi(F, E) for the Hom-complex
//   [ (+) Hom(F_i, E_i)  ->  (+) Hom(F_i, E_{i-1}) ]
// between chains with invariants `source` (F) and `target` (E) on a genus-g
// curve, using chi(Hom(F, E)) = rk F rk E (1-g) + rk F deg E - rk E deg F.
inline std::int64_t chi(const ChainInvariants& source, const ChainInvariants& target, Genus g) {
    if (source.size() != target.size()) {
        throw InputError("chi needs chains of equal length, got r=" + std::to_string(source.length()) + " and r=" +
                         std::to_string(target.length()));
    }
    const std::int64_t one_minus_g = 1 - g.value();
    auto hom = [&](std::size_t f, std::size_t e) {
        return source.rank(f) * target.rank(e) * one_minus_g + source.rank(f) * target.degree(e) -
               target.rank(e) * source.degree(f);
    };
    std::int64_t value = 0;
    for (std::size_t i = 0; i < source.size(); ++i) {
        value += hom(i, i);
    }
    for (std::size_t i = 1; i < source.size(); ++i) {
        value -= hom(i, i - 1);
    }
    return value;
}

struct ChiViolation {
    ChainInvariants source;
    ChainInvariants target;
    std::int64_t chi;
};

struct ChiScanResult {
    std::vector<ChiViolation> violations;
    std::size_t chains_admissible = 0;
    std::size_t pairs_scanned = 0;
    std::size_t boundary_pairs = 0;  // pairs with chi = 0
};

// Every chain with r <= r_max, ranks in [0, rank_bound] and degrees in
// [-degree_bound, degree_bound] that satisfies the conditions at alpha_Higgs.
inline std::vector<ChainInvariants> admissible_chains_at_higgs(std::int64_t rank_bound, std::int64_t degree_bound,
                                                               std::size_t r_max, Genus g) {
    std::vector<ChainInvariants> out;
    for (std::size_t r = 0; r <= r_max; ++r) {
        const StabilityParameter alpha = alpha_higgs(r, g);
        std::vector<std::int64_t> ranks(r + 1, 0);
        std::vector<std::int64_t> degrees(r + 1, 0);
        auto over_degrees = [&](auto&& self, std::size_t i) -> void {
            if (i == r + 1) {
                ChainInvariants ci(ranks, degrees);
                if (check_conditions(ci, alpha).all_hold) {
                    out.push_back(std::move(ci));
                }
                return;
            }
            if (ranks[i] == 0) {
                degrees[i] = 0;
                self(self, i + 1);
                return;
            }
            for (std::int64_t dv = -degree_bound; dv <= degree_bound; ++dv) {
                degrees[i] = dv;
                self(self, i + 1);
            }
        };
        auto over_ranks = [&](auto&& self, std::size_t i) -> void {
            if (i == r + 1) {
                std::int64_t total = 0;
                for (auto n : ranks) {
                    total += n;
                }
                if (total > 0) {
                    over_degrees(over_degrees, 0);
                }
                return;
            }
            for (std::int64_t n = 0; n <= rank_bound; ++n) {
                ranks[i] = n;
                self(self, i + 1);
            }
        };
        over_ranks(over_ranks, 0);
    }
    return out;
}

// Scans ordered pairs of admissible invariants of equal length and equal
// alpha_Higgs-slope and reports every pair with chi > 0. Semistable chains
// exist at admissible invariants, so the list is expected to be empty.
inline ChiScanResult chi_nonpositivity_scan(std::int64_t rank_bound, std::int64_t degree_bound, std::size_t r_max,
                                            Genus g) {
    require_hyperbolic(g, "the chi scan");
    if (rank_bound < 1 || degree_bound < 0) {
        throw InputError("chi scan needs rank_bound >= 1 and degree_bound >= 0");
    }
    ChiScanResult result;
    const auto chains = admissible_chains_at_higgs(rank_bound, degree_bound, r_max, g);
    result.chains_admissible = chains.size();
    std::map<std::pair<std::size_t, Rational>, std::vector<const ChainInvariants*>> groups;
    for (const auto& ci : chains) {
        groups[{ci.length(), alpha_slope(ci, alpha_higgs(ci.length(), g))}].push_back(&ci);
    }
    for (const auto& [key, members] : groups) {
        for (const ChainInvariants* source : members) {
            for (const ChainInvariants* target : members) {
                const std::int64_t value = chi(*source, *target, g);
                ++result.pairs_scanned;
                if (value == 0) {
                    ++result.boundary_pairs;
                }
                if (value > 0) {
                    result.violations.push_back({*source, *target, value});
                }
            }
        }
    }
    return result;
}

}  // namespace chainstab
