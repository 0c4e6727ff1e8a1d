#pragma once

// Shared helpers for the test binaries: seeded generators and oracles that
// recompute the slope inequalities straight from their closed forms, without
// going through the library's descriptor machinery.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chainstab/chainstab.hpp"

namespace chainstab::check {

using Ranks = std::vector<std::int64_t>;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }

    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

    Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
        const std::int64_t den = uniform(1, max_den);
        return Rational(uniform(lo * den, hi * den), den);
    }

private:
    std::mt19937_64 engine_;
};

inline ChainInvariants random_chain(Rng& rng, std::size_t r, std::int64_t max_rank, std::int64_t max_abs_degree,
                                    bool allow_zero = false) {
    for (;;) {
        Ranks n(r + 1), d(r + 1);
        std::int64_t total = 0;
        for (std::size_t i = 0; i <= r; ++i) {
            n[i] = rng.uniform(allow_zero ? 0 : 1, max_rank);
            d[i] = n[i] == 0 ? 0 : rng.uniform(-max_abs_degree, max_abs_degree);
            total += n[i];
        }
        if (total > 0) {
            return ChainInvariants(n, d);
        }
    }
}

inline StabilityParameter random_alpha(Rng& rng, std::size_t r, std::int64_t lo, std::int64_t hi,
                                       std::int64_t max_den = 6) {
    std::vector<Rational> a;
    for (std::size_t i = 0; i < r; ++i) {
        a.push_back(rng.rational(lo, hi, max_den));
    }
    return StabilityParameter(std::move(a));
}

// Strictly above alpha_Higgs: consecutive gaps in (2g-2, 2g-2 + spread].
inline StabilityParameter random_alpha_above(Rng& rng, std::size_t r, Genus g, std::int64_t spread = 6) {
    std::vector<Rational> a;
    Rational prev(0);
    for (std::size_t i = 0; i < r; ++i) {
        Rational gap = Rational(g.canonical_degree()) + rng.rational(0, spread, 7);
        if (gap == Rational(g.canonical_degree())) {
            gap += Rational(1, 7);
        }
        prev += gap;
        a.push_back(prev);
    }
    return StabilityParameter(std::move(a));
}

inline StabilityParameter shifted(const StabilityParameter& a, const Rational& c) {
    std::vector<Rational> out(a.components().begin(), a.components().end());
    for (auto& x : out) {
        x += c;
    }
    return StabilityParameter(std::move(out));
}

// Entry i of alpha with alpha_0 = 0.
inline Rational alpha_at(const StabilityParameter& a, std::size_t i) {
    return i == 0 ? Rational(0) : a.components()[i - 1];
}

// (sum d_i + sum alpha_i n_i) / sum n_i over the given weights.
inline Rational slope_of(const Ranks& n, const Ranks& d, const StabilityParameter& a) {
    Rational num(0);
    std::int64_t den = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        num += Rational(d[i]) + alpha_at(a, i) * Rational(n[i]);
        den += n[i];
    }
    return num / Rational(den);
}

struct OracleInstance {
    std::string tag;
    Rational margin;
};

// The four families of inequalities written out term by term. Instances
// whose sub-object has rank 0 are skipped (no slope).
struct OracleReport {
    std::vector<OracleInstance> instances;
    bool all_hold = true;
};

inline OracleReport paper_conditions(const Ranks& n, const Ranks& d, const StabilityParameter& a) {
    OracleReport rep;
    const std::size_t r = n.size() - 1;
    std::int64_t total_rank = 0;
    Rational total(0);
    for (std::size_t i = 0; i <= r; ++i) {
        total_rank += n[i];
        total += Rational(d[i]) + alpha_at(a, i) * Rational(n[i]);
    }
    const Rational mu = total / Rational(total_rank);
    auto add = [&](std::string tag, const Rational& num, std::int64_t den) {
        if (den == 0) {
            return;
        }
        Rational margin = mu - num / Rational(den);
        if (margin.sign() < 0) {
            rep.all_hold = false;
        }
        rep.instances.push_back({std::move(tag), std::move(margin)});
    };
    for (std::size_t i = 1; i <= r; ++i) {
        if (n[i] == n[i - 1]) {
            Rational margin(d[i - 1] - d[i]);
            if (margin.sign() < 0) {
                rep.all_hold = false;
            }
            rep.instances.push_back({"C0(" + std::to_string(i) + ")", margin});
        }
    }
    for (std::size_t k = 0; k < r; ++k) {
        Rational num(0);
        std::int64_t den = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            num += Rational(d[i]) + alpha_at(a, i) * Rational(n[i]);
            den += n[i];
        }
        add("C1(" + std::to_string(k) + ")", num, den);
    }
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t j = k + 1; j <= r; ++j) {
            const std::int64_t lo = *std::min_element(n.begin() + static_cast<std::ptrdiff_t>(k),
                                                      n.begin() + static_cast<std::ptrdiff_t>(j));
            if (n[j] < lo) {
                Rational num(0);
                std::int64_t den = 0;
                Rational alpha_sum(0);
                for (std::size_t i = 0; i <= r; ++i) {
                    if (i < k || i > j) {
                        num += Rational(d[i]) + alpha_at(a, i) * Rational(n[i]);
                        den += n[i];
                    } else {
                        alpha_sum += alpha_at(a, i);
                    }
                }
                const auto width = static_cast<std::int64_t>(j - k + 1);
                num += Rational(width * d[j]) + alpha_sum * Rational(n[j]);
                den += width * n[j];
                add("C2(" + std::to_string(k) + "," + std::to_string(j) + ")", num, den);
            }
            const std::int64_t lo3 = *std::min_element(n.begin() + static_cast<std::ptrdiff_t>(k + 1),
                                                       n.begin() + static_cast<std::ptrdiff_t>(j + 1));
            if (n[k] < lo3) {
                Rational num(0);
                std::int64_t den = 0;
                for (std::size_t i = k + 1; i <= j; ++i) {
                    num += Rational(d[i] - d[k]) + alpha_at(a, i) * Rational(n[i] - n[k]);
                    den += n[i] - n[k];
                }
                add("C3(" + std::to_string(k) + "," + std::to_string(j) + ")", num, den);
            }
        }
    }
    return rep;
}

inline OracleReport paper_conditions(const ChainInvariants& ci, const StabilityParameter& a) {
    return paper_conditions(Ranks(ci.ranks().begin(), ci.ranks().end()),
                            Ranks(ci.degrees().begin(), ci.degrees().end()), a);
}

// Compositions of n into parts >= 1 with at most max_parts parts.
inline void compositions(std::int64_t n, std::size_t max_parts, Ranks& cur, std::vector<Ranks>& out) {
    if (n == 0) {
        if (!cur.empty()) {
            out.push_back(cur);
        }
        return;
    }
    if (cur.size() == max_parts) {
        return;
    }
    for (std::int64_t p = 1; p <= n; ++p) {
        cur.push_back(p);
        compositions(n - p, max_parts, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Ranks> compositions(std::int64_t n, std::size_t max_parts) {
    std::vector<Ranks> out;
    Ranks cur;
    compositions(n, max_parts, cur, out);
    return out;
}

// Admissible degree vectors at alpha_Higgs for the given ranks and chain
// total, found by scanning every prefix sum S_k within +-width of the
// (C1) cap floor(mu N_k - A_k). Uses only the term-by-term oracle.
inline std::vector<Ranks> brute_force_degrees(const Ranks& n, std::int64_t total, Genus g, std::int64_t width) {
    const std::size_t r = n.size() - 1;
    const auto a = alpha_higgs(r, g);
    if (r == 0) {
        return {Ranks{total}};
    }
    std::int64_t total_rank = 0;
    Rational alpha_part(0);
    for (std::size_t i = 0; i <= r; ++i) {
        total_rank += n[i];
        alpha_part += alpha_at(a, i) * Rational(n[i]);
    }
    const Rational mu = (Rational(total) + alpha_part) / Rational(total_rank);
    std::vector<std::int64_t> cap(r);
    std::int64_t prefix_rank = 0;
    Rational prefix_alpha(0);
    for (std::size_t k = 0; k < r; ++k) {
        prefix_rank += n[k];
        prefix_alpha += alpha_at(a, k) * Rational(n[k]);
        cap[k] = to_int64((mu * Rational(prefix_rank) - prefix_alpha).floor());
    }
    std::vector<Ranks> out;
    Ranks s(r);
    auto scan = [&](auto&& self, std::size_t k) -> void {
        if (k == r) {
            Ranks d(r + 1);
            std::int64_t prev = 0;
            for (std::size_t i = 0; i < r; ++i) {
                d[i] = s[i] - prev;
                prev = s[i];
            }
            d[r] = total - prev;
            for (std::size_t i = 0; i <= r; ++i) {
                if (n[i] == 0 && d[i] != 0) {
                    return;
                }
            }
            if (paper_conditions(n, d, a).all_hold) {
                out.push_back(d);
            }
            return;
        }
        for (std::int64_t v = cap[k] - width; v <= cap[k] + width; ++v) {
            s[k] = v;
            self(self, k + 1);
        }
    };
    scan(scan, 0);
    return out;
}

}  // namespace chainstab::check
