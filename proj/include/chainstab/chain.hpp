#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chainstab/errors.hpp"
#include "chainstab/rational.hpp"

namespace chainstab {

// Genus of the base curve. Always >= 1; the theorems evaluated at
// alpha_Higgs additionally need g >= 2, checked with require_hyperbolic().
class Genus {
public:
    explicit Genus(std::int64_t g) : g_(g) {
        if (g < 1) {
            throw InputError("genus must be >= 1, got " + std::to_string(g));
        }
    }

    std::int64_t value() const { return g_; }

    // Degree of the canonical bundle, 2g-2.
    std::int64_t canonical_degree() const { return 2 * g_ - 2; }

    friend bool operator==(const Genus&, const Genus&) = default;

private:
    std::int64_t g_;
};

inline void require_hyperbolic(Genus g, const std::string& what) {
    if (g.value() < 2) {
        throw PreconditionError(what + " requires genus >= 2, got " + std::to_string(g.value()));
    }
}

// Rank and degree vectors (n_0..n_r), (d_0..d_r) of a holomorphic chain
// E_r -> ... -> E_0. Individual ranks may vanish, but not all of them, and a
// zero rank forces the matching degree to be zero.
class ChainInvariants {
public:
    ChainInvariants(std::vector<std::int64_t> ranks, std::vector<std::int64_t> degrees)
        : ranks_(std::move(ranks)), degrees_(std::move(degrees)) {
        if (ranks_.empty() || ranks_.size() != degrees_.size()) {
            throw InputError("ranks and degrees must be non-empty and of equal length (got " +
                             std::to_string(ranks_.size()) + " and " + std::to_string(degrees_.size()) + ")");
        }
        std::int64_t total = 0;
        for (std::size_t i = 0; i < ranks_.size(); ++i) {
            if (ranks_[i] < 0) {
                throw InputError("rank n_" + std::to_string(i) + " is negative");
            }
            if (ranks_[i] == 0 && degrees_[i] != 0) {
                throw InputError("zero rank n_" + std::to_string(i) + " requires degree 0");
            }
            total += ranks_[i];
        }
        if (total == 0) {
            throw InputError("at least one rank must be positive");
        }
    }

    // The chain length r; vectors have r+1 entries.
    std::size_t length() const { return ranks_.size() - 1; }
    std::size_t size() const { return ranks_.size(); }

    std::span<const std::int64_t> ranks() const { return ranks_; }
    std::span<const std::int64_t> degrees() const { return degrees_; }
    std::int64_t rank(std::size_t i) const { return ranks_.at(i); }
    std::int64_t degree(std::size_t i) const { return degrees_.at(i); }

    std::int64_t total_rank() const { return std::accumulate(ranks_.begin(), ranks_.end(), std::int64_t{0}); }
    std::int64_t total_degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0}); }

    bool all_ranks_positive() const {
        for (auto n : ranks_) {
            if (n == 0) {
                return false;
            }
        }
        return true;
    }

    std::string to_string() const {
        auto join = [](const std::vector<std::int64_t>& v) {
            std::string s = "(";
            for (std::size_t i = 0; i < v.size(); ++i) {
                s += (i ? "," : "") + std::to_string(v[i]);
            }
            return s + ")";
        };
        return "n=" + join(ranks_) + " d=" + join(degrees_);
    }

    friend bool operator==(const ChainInvariants&, const ChainInvariants&) = default;
    friend auto operator<=>(const ChainInvariants& a, const ChainInvariants& b) {
        if (auto c = a.length() <=> b.length(); c != 0) {
            return c;
        }
        if (auto c = a.ranks_ <=> b.ranks_; c != 0) {
            return c;
        }
        return a.degrees_ <=> b.degrees_;
    }

private:
    std::vector<std::int64_t> ranks_;
    std::vector<std::int64_t> degrees_;
};

// Stability parameter (alpha_1..alpha_r); alpha_0 = 0 is implicit.
class StabilityParameter {
public:
    StabilityParameter() = default;
    explicit StabilityParameter(std::vector<Rational> alphas) : alphas_(std::move(alphas)) {}

    std::size_t length() const { return alphas_.size(); }

    // alpha_i for i in 0..r, with alpha_0 = 0.
    Rational at(std::size_t i) const { return i == 0 ? Rational(0) : alphas_.at(i - 1); }

    std::span<const Rational> components() const { return alphas_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < alphas_.size(); ++i) {
            s += (i ? "," : "") + alphas_[i].to_string();
        }
        return s + ")";
    }

    friend bool operator==(const StabilityParameter&, const StabilityParameter&) = default;

private:
    std::vector<Rational> alphas_;
};

inline void require_compatible(const ChainInvariants& ci, const StabilityParameter& alpha) {
    if (alpha.length() != ci.length()) {
        throw InputError("stability parameter has " + std::to_string(alpha.length()) +
                         " components but the chain has length r=" + std::to_string(ci.length()));
    }
}

// mu_alpha(n, d) = (sum d_i + sum_{i>=1} alpha_i n_i) / |n|.
inline Rational alpha_slope(const ChainInvariants& ci, const StabilityParameter& alpha) {
    require_compatible(ci, alpha);
    Rational numerator(ci.total_degree());
    for (std::size_t i = 1; i < ci.size(); ++i) {
        if (ci.rank(i) != 0) {
            numerator += alpha.at(i) * Rational(ci.rank(i));
        }
    }
    return numerator / Rational(ci.total_rank());
}

// (1(2g-2), 2(2g-2), ..., r(2g-2)).
inline StabilityParameter alpha_higgs(std::size_t r, Genus g) {
    std::vector<Rational> alphas;
    alphas.reserve(r);
    for (std::size_t i = 1; i <= r; ++i) {
        alphas.emplace_back(static_cast<std::int64_t>(i) * g.canonical_degree());
    }
    return StabilityParameter(std::move(alphas));
}

// alpha_i - alpha_{i-1} > 2g-2 for every i = 1..r.
inline bool is_above_alpha_higgs(const StabilityParameter& alpha, Genus g) {
    const Rational gap(g.canonical_degree());
    for (std::size_t i = 1; i <= alpha.length(); ++i) {
        if (!(alpha.at(i) - alpha.at(i - 1) > gap)) {
            return false;
        }
    }
    return true;
}

// Dual chain with dual parameter: ranks reversed, degrees reversed and
// negated, alpha^v_i = alpha_r - alpha_{r-i}. An involution.
inline std::pair<ChainInvariants, StabilityParameter> dualize(const ChainInvariants& ci,
                                                              const StabilityParameter& alpha) {
    require_compatible(ci, alpha);
    const std::size_t r = ci.length();
    std::vector<std::int64_t> ranks(r + 1);
    std::vector<std::int64_t> degrees(r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
        ranks[i] = ci.rank(r - i);
        degrees[i] = -ci.degree(r - i);
    }
    std::vector<Rational> alphas;
    alphas.reserve(r);
    for (std::size_t i = 1; i <= r; ++i) {
        alphas.push_back(alpha.at(r) - alpha.at(r - i));
    }
    return {ChainInvariants(std::move(ranks), std::move(degrees)), StabilityParameter(std::move(alphas))};
}

// Invariants after tensoring every bundle by a degree-c line bundle.
inline ChainInvariants twist(const ChainInvariants& ci, std::int64_t c) {
    std::vector<std::int64_t> ranks(ci.ranks().begin(), ci.ranks().end());
    std::vector<std::int64_t> degrees(ci.size());
    for (std::size_t i = 0; i < ci.size(); ++i) {
        degrees[i] = ci.degree(i) + c * ci.rank(i);
    }
    return ChainInvariants(std::move(ranks), std::move(degrees));
}

}  // namespace chainstab
