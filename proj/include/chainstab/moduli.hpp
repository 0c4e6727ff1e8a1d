#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "chainstab/chain.hpp"
#include "chainstab/conditions.hpp"
#include "chainstab/param_space.hpp"

namespace chainstab {

// Whether the moduli of semistable chains with the given invariants is
// non-empty and irreducible; otherwise the first failing condition.
struct ModuliDecision {
    bool nonempty_irreducible = false;
    std::optional<Certificate> failing_certificate;

    static ModuliDecision from(const ConditionReport& report) {
        ModuliDecision d;
        d.failing_certificate = report.first_failure();
        d.nonempty_irreducible = !d.failing_certificate.has_value();
        return d;
    }
};

// Decision for alpha strictly above alpha_Higgs (any g >= 1).
inline ModuliDecision decide_above_higgs(const ChainInvariants& ci, const StabilityParameter& alpha, Genus g) {
    require_compatible(ci, alpha);
    if (!is_above_alpha_higgs(alpha, g)) {
        throw PreconditionError("alpha = " + alpha.to_string() +
                                " is not strictly above alpha_Higgs (need alpha_i - alpha_{i-1} > " +
                                std::to_string(g.canonical_degree()) + ")");
    }
    return ModuliDecision::from(check_conditions(ci, alpha));
}

// Decision for the coarse moduli space at alpha = alpha_Higgs; needs g >= 2.
inline ModuliDecision decide_at_higgs(const ChainInvariants& ci, Genus g) {
    require_hyperbolic(g, "the decision at alpha_Higgs");
    return ModuliDecision::from(check_conditions(ci, alpha_higgs(ci.length(), g)));
}

// [alpha_min, alpha_max] for triples E_1 -> E_0; alpha_max is absent (+inf)
// exactly when n_0 = n_1.
struct TripleBounds {
    Rational alpha_min;
    std::optional<Rational> alpha_max;

    bool contains(const Rational& alpha) const { return alpha_min <= alpha && (!alpha_max || alpha <= *alpha_max); }
};

inline TripleBounds triple_bounds(const ChainInvariants& ci) {
    if (ci.length() != 1) {
        throw InputError("triple bounds need a chain of length r=1, got r=" + std::to_string(ci.length()));
    }
    const std::int64_t n0 = ci.rank(0);
    const std::int64_t n1 = ci.rank(1);
    if (n0 <= 0 || n1 <= 0) {
        throw InputError("triple bounds need positive ranks n_0, n_1");
    }
    const Rational gap = Rational(ci.degree(0), n0) - Rational(ci.degree(1), n1);
    TripleBounds b{gap, std::nullopt};
    if (n0 != n1) {
        const std::int64_t diff = n0 > n1 ? n0 - n1 : n1 - n0;
        b.alpha_max = (Rational(1) + Rational(n0 + n1, diff)) * gap;
    }
    return b;
}

// Numerical invariants of a U(p,q)-Higgs bundle (V, W, beta, gamma):
// p = rk V, q = rk W, a = deg V, b = deg W.
struct UpqInvariants {
    std::int64_t p;
    std::int64_t q;
    std::int64_t a;
    std::int64_t b;
    Genus g;

    UpqInvariants(std::int64_t p_, std::int64_t q_, std::int64_t a_, std::int64_t b_, Genus g_)
        : p(p_), q(q_), a(a_), b(b_), g(g_) {
        if (p < 1 || q < 1) {
            throw InputError("U(p,q) ranks must satisfy p >= 1 and q >= 1");
        }
    }
};

// The triple V -> W (x) Omega describing the minima with beta = 0, after
// normalizing to mu(V) >= mu(W) via (a, b) -> (-a, -b).
// n = (q, p), d = (b + q(2g-2), a), alpha = (2g-2).
inline std::pair<ChainInvariants, StabilityParameter> upq_to_triple(const UpqInvariants& u) {
    std::int64_t a = u.a;
    std::int64_t b = u.b;
    if (a * u.q < b * u.p) {
        a = -a;
        b = -b;
    }
    const std::int64_t k = u.g.canonical_degree();
    return {ChainInvariants({u.q, u.p}, {b + u.q * k, a}), alpha_higgs(1, u.g)};
}

struct UpqReport {
    bool nonempty = false;
    bool connected = false;
    ChainInvariants triple;
    ModuliDecision decision;
};

// connected mirrors nonempty: a non-empty U(p,q) moduli space is connected,
// and the empty space is reported as not connected.
inline UpqReport upq_report(const UpqInvariants& u) {
    require_hyperbolic(u.g, "the U(p,q) report");
    auto [triple, alpha] = upq_to_triple(u);
    ModuliDecision decision = decide_at_higgs(triple, u.g);
    const bool nonempty = decision.nonempty_irreducible;
    return UpqReport{nonempty, nonempty, std::move(triple), std::move(decision)};
}

}  // namespace chainstab
