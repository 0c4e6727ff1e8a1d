#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chainstab/chainstab.hpp"
#include "chainstab/report.hpp"

namespace chainstab::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInputError = 2,
    kPreconditionError = 3,
    kEnumerationOverflow = 4,
};

namespace detail {

using report::json;

inline std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> parts;
    if (text.empty()) {
        return parts;
    }
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline std::vector<std::int64_t> parse_integers(const std::string& text, const std::string& flag) {
    std::vector<std::int64_t> out;
    for (const auto& part : split(text)) {
        const Rational value = Rational::parse(part);
        if (!value.is_integer() || !value.numerator().fits_slong_p()) {
            throw InputError(flag + " expects integers, got '" + part + "'");
        }
        out.push_back(value.numerator().get_si());
    }
    return out;
}

inline std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& part : split(text)) {
        out.push_back(Rational::parse(part));
    }
    return out;
}

inline ChainInvariants parse_chain(const std::string& ranks, const std::string& degrees, const std::string& prefix = "") {
    if (ranks.empty() || degrees.empty()) {
        throw InputError("--" + prefix + "ranks and --" + prefix + "degrees are required");
    }
    return ChainInvariants(parse_integers(ranks, "--" + prefix + "ranks"),
                           parse_integers(degrees, "--" + prefix + "degrees"));
}

inline StabilityParameter parse_alpha(const std::string& text, const ChainInvariants& ci) {
    StabilityParameter alpha(parse_rationals(text));
    require_compatible(ci, alpha);
    return alpha;
}

// Splits a flat list of 2r values into two parameters of length r.
inline std::pair<StabilityParameter, StabilityParameter> parse_pair(const std::string& text, const ChainInvariants& ci,
                                                                    const std::string& flag) {
    auto values = parse_rationals(text);
    const std::size_t r = ci.length();
    if (values.size() != 2 * r) {
        throw InputError(flag + " expects 2r = " + std::to_string(2 * r) + " comma-separated values, got " +
                         std::to_string(values.size()));
    }
    std::vector<Rational> first(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(r));
    std::vector<Rational> second(values.begin() + static_cast<std::ptrdiff_t>(r), values.end());
    return {StabilityParameter(std::move(first)), StabilityParameter(std::move(second))};
}

struct Options {
    std::string format = "json";
    bool quiet = false;

    std::string ranks, degrees, alpha;
    std::int64_t genus = 2;
    std::string box, segment;
    bool merge = false;
    bool effective_only = false;
    bool at_higgs = false;
    std::int64_t p = 0, q = 0, a = 0, b = 0;
    std::int64_t rank = 0, degree = 0;
    std::size_t max_len = 0;
    bool interior_zeros = false;
    std::string source_ranks, source_degrees, target_ranks, target_degrees;
    std::int64_t rank_bound = 0, degree_bound = 0;
    std::size_t r_max = 0;
};

inline json cmd_check(const Options& o) {
    const ChainInvariants ci = parse_chain(o.ranks, o.degrees);
    const StabilityParameter alpha = parse_alpha(o.alpha, ci);
    const Genus g(o.genus);
    const ConditionReport conditions = check_conditions(ci, alpha);
    json c3_prime = json::array();
    for (const auto& c : check_c3_prime(ci, alpha)) {
        c3_prime.push_back({{"k", c.k}, {"j", c.j}, {"margin", report::encode(c.margin)}, {"holds", c.holds}});
    }
    json descriptors = json::array();
    for (const auto& d : standard_subchains(ci)) {
        descriptors.push_back(report::encode(d));
    }
    json result = report::encode(conditions);
    result["c3_prime"] = c3_prime;
    result["slope"] = report::encode(alpha_slope(ci, alpha));
    result["above_alpha_higgs"] = is_above_alpha_higgs(alpha, g);
    result["admissible"] = admissible(ci, alpha, g, false);
    result["descriptors"] = descriptors;
    json certs = json::array();
    if (auto f = conditions.first_failure()) {
        certs.push_back(report::encode(*f));
    }
    json inputs = report::encode(ci);
    inputs["alpha"] = report::encode(alpha);
    inputs["genus"] = g.value();
    return report::envelope("check", inputs, result, certs);
}

inline json cmd_region(const Options& o) {
    const ChainInvariants ci = parse_chain(o.ranks, o.degrees);
    const Genus g(o.genus);
    const auto halfspaces = region_halfspaces(ci, g);
    json list = json::array();
    for (const auto& h : halfspaces) {
        list.push_back(report::encode(h));
    }
    json result{{"halfspaces", list},
                {"alpha_higgs_in_closure", region_contains(halfspaces, alpha_higgs(ci.length(), g), true)}};
    json inputs = report::encode(ci);
    inputs["genus"] = g.value();
    return report::envelope("region", inputs, result);
}

inline json cmd_walls(const Options& o) {
    const ChainInvariants ci = parse_chain(o.ranks, o.degrees);
    if (o.box.empty() == o.segment.empty()) {
        throw InputError("walls needs exactly one of --box or --segment");
    }
    WallOptions options{o.merge, o.effective_only};
    json inputs = report::encode(ci);
    inputs["merge"] = o.merge;
    inputs["effective_only"] = o.effective_only;
    if (!o.box.empty()) {
        if (o.effective_only) {
            throw InputError("--effective-only applies to --segment, not --box");
        }
        auto [lo, hi] = parse_pair(o.box, ci, "--box");
        inputs["box"] = {{"lo", report::encode(lo)}, {"hi", report::encode(hi)}};
        return report::envelope("walls", inputs, json{{"walls", report::encode(walls_in_box(ci, lo, hi, options))}});
    }
    auto [from, to] = parse_pair(o.segment, ci, "--segment");
    inputs["segment"] = {{"from", report::encode(from)}, {"to", report::encode(to)}};
    json points = json::array();
    for (const auto& p : critical_values_on_segment(ci, from, to, options)) {
        points.push_back(report::encode(p));
    }
    return report::envelope("walls", inputs, json{{"critical_values", points}});
}

inline json cmd_decide(const Options& o) {
    const ChainInvariants ci = parse_chain(o.ranks, o.degrees);
    const Genus g(o.genus);
    json inputs = report::encode(ci);
    inputs["genus"] = g.value();
    ModuliDecision decision;
    if (o.at_higgs) {
        if (!o.alpha.empty()) {
            throw InputError("decide takes either --alpha or --at-higgs, not both");
        }
        inputs["alpha"] = "alpha_higgs";
        decision = decide_at_higgs(ci, g);
    } else {
        if (o.alpha.empty() && ci.length() > 0) {
            throw InputError("decide needs --alpha or --at-higgs");
        }
        const StabilityParameter alpha = parse_alpha(o.alpha, ci);
        inputs["alpha"] = report::encode(alpha);
        decision = decide_above_higgs(ci, alpha, g);
    }
    json certs = json::array();
    if (decision.failing_certificate) {
        certs.push_back(report::encode(*decision.failing_certificate));
    }
    return report::envelope("decide", inputs, report::encode(decision), certs);
}

inline json cmd_triple(const Options& o) {
    const ChainInvariants ci = parse_chain(o.ranks, o.degrees);
    return report::envelope("triple", report::encode(ci), report::encode(triple_bounds(ci)));
}

inline json cmd_upq(const Options& o) {
    const UpqInvariants u(o.p, o.q, o.a, o.b, Genus(o.genus));
    const UpqReport r = upq_report(u);
    json result{{"nonempty", r.nonempty},
                {"connected", r.connected},
                {"triple", report::encode(r.triple)},
                {"alpha", report::encode(alpha_higgs(1, u.g))},
                {"decision", report::encode(r.decision)}};
    json inputs{{"p", u.p}, {"q", u.q}, {"a", u.a}, {"b", u.b}, {"genus", u.g.value()}};
    json certs = json::array();
    if (r.decision.failing_certificate) {
        certs.push_back(report::encode(*r.decision.failing_certificate));
    }
    return report::envelope("upq", inputs, result, certs);
}

inline json cmd_nilpotent(const Options& o) {
    const Genus g(o.genus);
    EnumerationOptions options;
    if (o.max_len > 0) {
        options.max_len = o.max_len;
    }
    options.allow_interior_zeros = o.interior_zeros;
    const ComponentReport r = component_report(o.rank, o.degree, g, options);
    json types = json::array();
    for (const auto& t : r.types) {
        types.push_back(report::encode(t));
    }
    json levels = json::array();
    for (const auto& level : order_by_weight(r.types)) {
        json members = json::array();
        for (const auto& t : level.types) {
            members.push_back(report::encode(t.chain));
        }
        levels.push_back({{"weight", report::encode(level.weight)}, {"types", members}});
    }
    json result{{"count", r.count},
                {"coprime", r.coprime},
                {"exact", r.exact},
                {"expected_dimension", expected_dimension(o.rank, g)},
                {"types", types},
                {"weight_levels", levels}};
    json inputs{{"rank", o.rank}, {"degree", o.degree}, {"genus", g.value()},
                {"allow_interior_zeros", o.interior_zeros}};
    inputs["max_len"] = o.max_len > 0 ? json(o.max_len) : json(o.rank);
    return report::envelope("nilpotent", inputs, result);
}

inline json cmd_chi(const Options& o) {
    const ChainInvariants source = parse_chain(o.source_ranks, o.source_degrees, "source-");
    const ChainInvariants target = parse_chain(o.target_ranks, o.target_degrees, "target-");
    const Genus g(o.genus);
    const std::int64_t value = chi(source, target, g);
    json result{{"chi", value}};
    if (source.length() == target.length()) {
        const StabilityParameter a = alpha_higgs(source.length(), g);
        result["equal_higgs_slopes"] = alpha_slope(source, a) == alpha_slope(target, a);
    }
    json inputs{{"source", report::encode(source)}, {"target", report::encode(target)}, {"genus", g.value()}};
    return report::envelope("chi", inputs, result);
}

inline json cmd_chi_scan(const Options& o) {
    const Genus g(o.genus);
    const ChiScanResult r = chi_nonpositivity_scan(o.rank_bound, o.degree_bound, o.r_max, g);
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back(report::encode(v));
    }
    json result{{"violations", violations},
                {"chains_admissible", r.chains_admissible},
                {"pairs_scanned", r.pairs_scanned},
                {"boundary_pairs", r.boundary_pairs}};
    json inputs{{"rank_bound", o.rank_bound}, {"degree_bound", o.degree_bound}, {"r_max", o.r_max},
                {"genus", g.value()}};
    return report::envelope("chi-scan", inputs, result);
}

}  // namespace detail

// Runs the command line `args` (args[0] is the program name). The report
// goes to `out`, diagnostics to `err`; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App app{"Stability conditions, walls and fixed-point types for holomorphic chains", "chainstab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_flag("--quiet", o.quiet, "Suppress diagnostics on stderr");

    auto chain_options = [&](CLI::App* sub) {
        sub->add_option("--ranks", o.ranks, "n_0,...,n_r")->required();
        sub->add_option("--degrees", o.degrees, "d_0,...,d_r")->required();
    };

    auto* check = app.add_subcommand("check", "Evaluate conditions (C0)-(C3) at a parameter");
    chain_options(check);
    check->add_option("--alpha", o.alpha, "alpha_1,...,alpha_r (rationals p/q)");
    check->add_option("--genus", o.genus, "Genus (default 2)");

    auto* region = app.add_subcommand("region", "Half-space description of the stability region");
    chain_options(region);
    region->add_option("--genus", o.genus, "Genus (default 2)");

    auto* walls = app.add_subcommand("walls", "Walls in a box or critical values on a segment");
    chain_options(walls);
    walls->add_option("--box", o.box, "lo_1,...,lo_r,hi_1,...,hi_r");
    walls->add_option("--segment", o.segment, "a_1,...,a_r,b_1,...,b_r");
    walls->add_flag("--merge", o.merge, "Merge walls defining the same hyperplane");
    walls->add_flag("--effective-only", o.effective_only, "Keep walls realized by admissible sub and quotient");

    auto* decide = app.add_subcommand("decide", "Non-emptiness and irreducibility of the moduli");
    chain_options(decide);
    decide->add_option("--alpha", o.alpha, "alpha_1,...,alpha_r strictly above alpha_Higgs");
    decide->add_flag("--at-higgs", o.at_higgs, "Decide at alpha = alpha_Higgs");
    decide->add_option("--genus", o.genus, "Genus (default 2)");

    auto* triple = app.add_subcommand("triple", "alpha_min and alpha_max of a triple");
    chain_options(triple);

    auto* upq = app.add_subcommand("upq", "Non-emptiness and connectedness of U(p,q)-Higgs moduli");
    upq->add_option("--p", o.p, "rank of V")->required();
    upq->add_option("--q", o.q, "rank of W")->required();
    upq->add_option("--a", o.a, "degree of V")->required();
    upq->add_option("--b", o.b, "degree of W")->required();
    upq->add_option("--genus", o.genus, "Genus (default 2)");

    auto* nilpotent = app.add_subcommand("nilpotent", "Fixed-point types labelling nilpotent cone components");
    nilpotent->add_option("--rank", o.rank, "total rank n")->required();
    nilpotent->add_option("--degree", o.degree, "total degree d")->required();
    nilpotent->add_option("--genus", o.genus, "Genus (default 2)");
    nilpotent->add_option("--max-len", o.max_len, "maximal number of parts r+1");
    nilpotent->add_flag("--allow-interior-zeros", o.interior_zeros, "Admit zero ranks inside the chain");

    auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of the Hom complex between two chains");
    chi_cmd->add_option("--source-ranks", o.source_ranks)->required();
    chi_cmd->add_option("--source-degrees", o.source_degrees)->required();
    chi_cmd->add_option("--target-ranks", o.target_ranks)->required();
    chi_cmd->add_option("--target-degrees", o.target_degrees)->required();
    chi_cmd->add_option("--genus", o.genus, "Genus (default 2)");

    auto* chi_scan = app.add_subcommand("chi-scan", "Search for admissible equal-slope pairs with chi > 0");
    chi_scan->add_option("--rank-bound", o.rank_bound)->required();
    chi_scan->add_option("--degree-bound", o.degree_bound)->required();
    chi_scan->add_option("--r-max", o.r_max)->required();
    chi_scan->add_option("--genus", o.genus, "Genus (default 2)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();  // program name
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        if (!o.quiet) {
            err << "error: " << e.what() << "\n";
        }
        return kInputError;
    }

    auto fail = [&](int code, const std::exception& e) {
        if (!o.quiet) {
            err << "error: " << e.what() << "\n";
        }
        return code;
    };

    report::json result;
    try {
        if (check->parsed()) {
            result = detail::cmd_check(o);
        } else if (region->parsed()) {
            result = detail::cmd_region(o);
        } else if (walls->parsed()) {
            result = detail::cmd_walls(o);
        } else if (decide->parsed()) {
            result = detail::cmd_decide(o);
        } else if (triple->parsed()) {
            result = detail::cmd_triple(o);
        } else if (upq->parsed()) {
            result = detail::cmd_upq(o);
        } else if (nilpotent->parsed()) {
            result = detail::cmd_nilpotent(o);
        } else if (chi_cmd->parsed()) {
            result = detail::cmd_chi(o);
        } else if (chi_scan->parsed()) {
            result = detail::cmd_chi_scan(o);
        }
    } catch (const InputError& e) {
        return fail(kInputError, e);
    } catch (const PreconditionError& e) {
        return fail(kPreconditionError, e);
    } catch (const EnumerationOverflow& e) {
        return fail(kEnumerationOverflow, e);
    }

    if (o.format == "csv") {
        out << report::to_csv(result);
    } else if (o.format == "plain") {
        out << report::to_plain(result);
    } else {
        out << result.dump(2) << "\n";
    }
    return kSuccess;
}

}  // namespace chainstab::cli
