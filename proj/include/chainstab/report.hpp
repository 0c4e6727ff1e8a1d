#pragma once

// JSON encoding of every result type. Rationals are strings "p/q" (or "p"),
// +infinity is the string "inf"; integers stay JSON integers. No floating
// point value is ever emitted.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "chainstab/chainstab.hpp"

namespace chainstab::report {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kInfinity = "inf";

inline json encode(const Rational& r) { return r.to_string(); }

inline json encode(const std::optional<Rational>& r) { return r ? encode(*r) : json(kInfinity); }

inline json encode(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& r : v) {
        out.push_back(encode(r));
    }
    return out;
}

inline json encode(const StabilityParameter& alpha) {
    return encode(std::vector<Rational>(alpha.components().begin(), alpha.components().end()));
}

inline json encode(const ChainInvariants& ci) {
    return json{{"ranks", std::vector<std::int64_t>(ci.ranks().begin(), ci.ranks().end())},
                {"degrees", std::vector<std::int64_t>(ci.degrees().begin(), ci.degrees().end())}};
}

// Decoding helpers used to read reports back.
inline Rational decode_rational(const json& j) { return Rational::parse(j.get<std::string>()); }

inline std::optional<Rational> decode_extended(const json& j) {
    const auto text = j.get<std::string>();
    if (text == kInfinity) {
        return std::nullopt;
    }
    return Rational::parse(text);
}

inline ChainInvariants decode_chain(const json& j) {
    return ChainInvariants(j.at("ranks").get<std::vector<std::int64_t>>(),
                           j.at("degrees").get<std::vector<std::int64_t>>());
}

inline StabilityParameter decode_parameter(const json& j) {
    std::vector<Rational> alphas;
    for (const auto& x : j) {
        alphas.push_back(decode_rational(x));
    }
    return StabilityParameter(std::move(alphas));
}

inline json encode(const Certificate& c) { return json{{"tag", c.tag}, {"margin", encode(c.margin)}}; }

inline json encode(const ConditionReport& report) {
    json c0 = json::array();
    for (const auto& c : report.c0) {
        c0.push_back({{"i", c.index}, {"margin", encode(c.margin)}, {"holds", c.holds}});
    }
    auto slope_list = [](const std::vector<SlopeCheck>& checks, bool pair) {
        json out = json::array();
        for (const auto& c : checks) {
            json e{{"k", c.k}, {"margin", encode(c.margin)}, {"holds", c.holds}};
            if (pair) {
                e["j"] = c.j;
            }
            out.push_back(std::move(e));
        }
        return out;
    };
    return json{{"c0", c0},
                {"c1", slope_list(report.c1, false)},
                {"c2", slope_list(report.c2, true)},
                {"c3", slope_list(report.c3, true)},
                {"all_hold", report.all_hold}};
}

inline json encode(const StandardDescriptor& d) {
    return json{{"kind", to_string(d.kind)}, {"k", d.k}, {"j", d.j}, {"sub", encode(d.sub)},
                {"quotient", encode(d.quotient)}};
}

inline json encode(const LinearCondition& h) {
    return json{{"tag", h.tag.to_string()},
                {"coeffs", encode(h.coeffs)},
                {"relation", h.relation == Relation::Less ? "<" : "<="},
                {"bound", encode(h.bound)},
                {"text", h.to_string()}};
}

inline json encode(const Wall& w) {
    return json{{"sub_ranks", w.sub_ranks},
                {"sub_total_degree", w.sub_total_degree},
                {"normal", encode(w.normal)},
                {"offset", encode(w.offset)}};
}

inline json encode(const std::vector<Wall>& walls) {
    json out = json::array();
    for (const auto& w : walls) {
        out.push_back(encode(w));
    }
    return out;
}

inline json encode(const CriticalPoint& p) {
    return json{{"t", encode(p.t)}, {"alpha", encode(p.alpha)}, {"walls", encode(p.walls)}};
}

inline json encode(const ModuliDecision& d) {
    json out{{"nonempty_irreducible", d.nonempty_irreducible}};
    out["failing_certificate"] = d.failing_certificate ? encode(*d.failing_certificate) : json(nullptr);
    return out;
}

inline json encode(const TripleBounds& b) {
    return json{{"alpha_min", encode(b.alpha_min)}, {"alpha_max", encode(b.alpha_max)}};
}

inline json encode(const FixedPointType& t) {
    json out = encode(t.chain);
    out["higgs_degrees"] = t.higgs_degrees;
    out["weight"] = encode(t.weight);
    out["r"] = t.chain.length();
    return out;
}

inline json encode(const ChiViolation& v) {
    return json{{"source", encode(v.source)}, {"target", encode(v.target)}, {"chi", v.chi}};
}

inline json envelope(const std::string& command, json inputs, json result,
                     std::optional<json> certificates = std::nullopt) {
    json out{{"schema_version", kSchemaVersion}, {"command", command}, {"inputs", std::move(inputs)},
             {"result", std::move(result)}};
    out["certificates"] = certificates ? std::move(*certificates) : json::array();
    return out;
}

namespace detail {

inline void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, json>>& out) {
    if (j.is_object()) {
        if (j.empty()) {
            out.emplace_back(path, json::object());
        }
        for (const auto& [key, value] : j.items()) {
            flatten(value, path.empty() ? key : path + "." + key, out);
        }
    } else if (j.is_array()) {
        if (j.empty()) {
            out.emplace_back(path, json::array());
        }
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], path + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out.emplace_back(path, j);
    }
}

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

// One "path,value" row per leaf; strings (hence every rational) are quoted.
inline std::string to_csv(const json& report) {
    std::vector<std::pair<std::string, json>> leaves;
    detail::flatten(report, "", leaves);
    std::string out = "path,value\n";
    for (const auto& [path, value] : leaves) {
        out += detail::csv_quote(path) + ",";
        out += value.is_string() ? detail::csv_quote(value.get<std::string>()) : value.dump();
        out += "\n";
    }
    return out;
}

inline std::string to_plain(const json& report) {
    std::vector<std::pair<std::string, json>> leaves;
    detail::flatten(report, "", leaves);
    std::string out;
    for (const auto& [path, value] : leaves) {
        out += path + " = " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    return out;
}

}  // namespace chainstab::report
