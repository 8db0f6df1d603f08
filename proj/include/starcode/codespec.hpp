#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starcode/code.hpp"
#include "starcode/error.hpp"
#include "starcode/families.hpp"

namespace starcode {

/// A code built from a textual description such as "rs:q=7,n=7,k=3".
struct NamedCode {
    LinearCode code;
    std::optional<AgCode> ag;  // set for family constructions
    std::string description;
};

namespace detail {

inline std::uint64_t spec_uint(std::string_view spec, const std::string& key, const std::string& value) {
    if (value.empty() || value.size() > 18)
        throw Error(Errc::ParseError, "bad value for '" + key + "' in '" + std::string(spec) + "'");
    std::uint64_t v = 0;
    for (char c : value) {
        if (c < '0' || c > '9') throw Error(Errc::ParseError, "bad value for '" + key + "' in '" + std::string(spec) + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

}  // namespace detail

/// Recognized forms:
///   rs:q=7,n=7,k=3             Reed-Solomon at the first n field elements
///   herm:q0=2,m=3              one-point Hermitian code over F_{q0^2}
///   monomial:q=11,exps=0|2|3   evaluations of X^e (optional n)
///   planeline:q=5              linear forms on a plane and a line in P^3
///   random:q=11,n=20,k=5       uniformly random code (seed from caller)
inline bool looks_like_code_spec(std::string_view text) {
    for (std::string_view prefix : {"rs:", "herm:", "monomial:", "planeline:", "random:"})
        if (text.substr(0, prefix.size()) == prefix) return true;
    return false;
}

inline NamedCode parse_code_spec(std::string_view text, std::uint64_t seed = 0) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw Error(Errc::ParseError, "code spec '" + std::string(text) + "' has no family");
    const std::string family(text.substr(0, colon));
    std::map<std::string, std::string> kv;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw Error(Errc::ParseError, "expected key=value in '" + std::string(text) + "'");
        kv[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    auto take = [&](const std::string& key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) throw Error(Errc::ParseError, "missing '" + key + "' in '" + std::string(text) + "'");
        auto v = it->second;
        kv.erase(it);
        return v;
    };
    auto take_uint = [&](const std::string& key) { return detail::spec_uint(text, key, take(key)); };
    auto finish = [&] {
        if (!kv.empty()) throw Error(Errc::ParseError, "unknown key '" + kv.begin()->first + "' in '" + std::string(text) + "'");
    };

    if (family == "rs") {
        auto field = Field::parse(take("q"));
        const auto n = kv.count("n") ? take_uint("n") : field->q();
        const auto k = take_uint("k");
        finish();
        auto ag = rs_code(field, first_points(*field, n), k);
        return {ag.code, ag, std::string(text)};
    }
    if (family == "herm") {
        const auto q0 = take_uint("q0");
        const auto m = take_uint("m");
        finish();
        if (q0 > 256 || m > (1u << 20)) throw Error(Errc::BadDegree, "parameters too large");
        auto ag = hermitian_code(static_cast<unsigned>(q0), static_cast<long>(m));
        return {ag.code, ag, std::string(text)};
    }
    if (family == "monomial") {
        auto field = Field::parse(take("q"));
        const auto n = kv.count("n") ? take_uint("n") : field->q();
        std::vector<unsigned> exps;
        const std::string raw = take("exps");
        std::string_view list = raw;
        while (!list.empty()) {
            const auto bar = list.find('|');
            exps.push_back(static_cast<unsigned>(detail::spec_uint(text, "exps", std::string(list.substr(0, bar)))));
            if (bar == std::string_view::npos) break;
            list = list.substr(bar + 1);
        }
        finish();
        auto ag = monomial_code(field, first_points(*field, n), exps);
        return {ag.code, ag, std::string(text)};
    }
    if (family == "planeline") {
        auto field = Field::parse(take("q"));
        finish();
        auto ag = point_set_code(field, plane_and_line_points(*field));
        return {ag.code, ag, std::string(text)};
    }
    if (family == "random") {
        auto field = Field::parse(take("q"));
        const auto n = take_uint("n");
        const auto k = take_uint("k");
        finish();
        if (n > 4096) throw Error(Errc::InvalidArgument, "n too large");
        return {random_code(field, n, k, seed), std::nullopt, std::string(text)};
    }
    throw Error(Errc::ParseError, "unknown code family '" + family + "'");
}

}  // namespace starcode
