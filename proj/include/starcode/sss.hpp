#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "starcode/code.hpp"
#include "starcode/error.hpp"

namespace starcode {

/// Shares of one dealt codeword c. The secret sits at coordinate n - 1 and
/// player i holds c_i for i in [0, n - 2].
struct SharePacket {
    std::string code_id;
    std::size_t secret_index = 0;
    std::map<std::size_t, elem_t> shares;
};

/// Stable identifier of a code: FNV-1a (64 bit) of its canonical matrix text.
inline std::string code_fingerprint(const LinearCode& c) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : to_text(c.generator())) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

namespace detail {

inline void require_packet_for(const LinearCode& c, const SharePacket& p) {
    if (p.code_id != code_fingerprint(c)) throw Error(Errc::CodeMismatch, "packet was dealt from a different code");
}

inline std::size_t secret_index(const LinearCode& c) {
    if (c.n() == 0) throw Error(Errc::InvalidArgument, "empty code");
    return c.n() - 1;
}

}  // namespace detail

/// Deal s: a uniformly random codeword with c_{n-1} = s. The coefficients of
/// all but one generator row are uniform; the remaining one is solved for.
inline SharePacket deal(const LinearCode& c, elem_t s, std::uint64_t seed) {
    const Field& f = *c.field();
    const std::size_t si = detail::secret_index(c);
    if (!f.contains(s)) throw Error(Errc::InvalidArgument, "secret outside F_" + f.name());
    const Matrix& g = c.generator();
    std::size_t anchor = c.k();
    for (std::size_t r = 0; r < c.k(); ++r)
        if (g(r, si) != 0) {
            anchor = r;
            break;
        }
    if (anchor == c.k()) throw Error(Errc::SecretCoordinateDead, "every codeword vanishes at the secret coordinate");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<elem_t> dist(0, f.q() - 1);
    Vector coeffs(c.k());
    for (auto& x : coeffs) x = dist(rng);
    coeffs[anchor] = 0;
    elem_t partial = 0;
    for (std::size_t r = 0; r < c.k(); ++r) partial = f.add(partial, f.mul(coeffs[r], g(r, si)));
    coeffs[anchor] = f.div(f.sub(s, partial), g(anchor, si));
    const auto word = c.encode(coeffs);

    SharePacket p;
    p.code_id = code_fingerprint(c);
    p.secret_index = si;
    for (std::size_t i = 0; i < si; ++i) p.shares[i] = word[i];
    return p;
}

/// Secret from the shares of a coalition I (the map's keys), or nullopt
/// when |I| <= n - d_min(C). A lower bound on d_min(C) may be supplied;
/// otherwise it is computed exactly.
inline std::optional<elem_t> reconstruct(const LinearCode& c, const std::map<std::size_t, elem_t>& shares,
                                         std::optional<long> distance_bound = std::nullopt) {
    const std::size_t si = detail::secret_index(c);
    if (c.k() == 0) throw Error(Errc::ZeroCode, "nothing to reconstruct from the zero code");
    std::vector<std::size_t> players;
    Vector values;
    for (auto [i, v] : shares) {
        if (i >= si) throw Error(Errc::InvalidArgument, "player " + std::to_string(i) + " out of range");
        if (!c.field()->contains(v)) throw Error(Errc::InvalidArgument, "share outside field");
        players.push_back(i);
        values.push_back(v);
    }
    const long d = distance_bound ? *distance_bound : static_cast<long>(min_distance(c));
    if (static_cast<long>(players.size()) <= static_cast<long>(c.n()) - d) return std::nullopt;

    // lambda G_I = shares.
    const Matrix g_i = c.generator().select_columns(players);
    const auto lambda = solve(g_i.transpose(), values);
    if (!lambda) throw Error(Errc::InconsistentShares, "no codeword matches the given shares");
    const Field& f = *c.field();
    elem_t s = 0;
    for (std::size_t r = 0; r < c.k(); ++r) s = f.add(s, f.mul((*lambda)[r], c.generator()(r, si)));
    return s;
}

struct AuditLevel {
    std::size_t size = 0;
    bool guaranteed = false;  // |I| < d_min(C^perp) - 1
    std::size_t subsets = 0;
    std::size_t uniform_subsets = 0;
    bool uniform = false;
};

struct PrivacyReport {
    long dual_distance = 0;
    std::vector<AuditLevel> levels;
    /// Every size covered by the privacy bound passed the uniformity check.
    bool consistent = true;
};

/// Whether (c_I, c_secret) is uniform on F_q^{|I|+1} as c ranges over C:
/// every value pattern must occur exactly q^{k-|I|-1} times.
inline bool joint_uniform(const LinearCode& c, const std::vector<std::size_t>& players) {
    const std::size_t si = detail::secret_index(c);
    const std::size_t width = players.size() + 1;
    if (width > c.k()) return false;
    const std::uint64_t q = c.field()->q();
    std::uint64_t patterns = 1, expected = 1;
    for (std::size_t i = 0; i < width; ++i) patterns *= q;
    for (std::size_t i = width; i < c.k(); ++i) expected *= q;
    std::vector<std::uint64_t> counts(patterns, 0);
    for_each_codeword(c, [&](std::span<const elem_t> w) {
        std::uint64_t idx = w[si];
        for (auto p : players) idx = idx * q + w[p];
        ++counts[idx];
        return true;
    });
    return std::all_of(counts.begin(), counts.end(), [&](std::uint64_t x) { return x == expected; });
}

/// Exhaustive privacy audit for coalition sizes 0..r_max. A lower bound on
/// d_min(C^perp) may be supplied; the zero dual counts as distance n + 1.
inline PrivacyReport privacy_audit(const LinearCode& c, std::size_t r_max,
                                   std::optional<long> dual_bound = std::nullopt) {
    const std::size_t si = detail::secret_index(c);
    if (codeword_count(c) > kEnumerationLimit) throw Error(Errc::TooLargeToEnumerate, "q^k exceeds enumeration limit");
    PrivacyReport report;
    if (dual_bound) {
        report.dual_distance = *dual_bound;
    } else {
        const auto d = dual(c);
        report.dual_distance = d.k() == 0 ? static_cast<long>(c.n()) + 1 : static_cast<long>(min_distance(d));
    }
    r_max = std::min(r_max, si);
    for (std::size_t r = 0; r <= r_max; ++r) {
        AuditLevel level;
        level.size = r;
        level.guaranteed = static_cast<long>(r) < report.dual_distance - 1;
        // Iterate all r-subsets of the players [0, si).
        std::vector<std::size_t> subset(r);
        for (std::size_t i = 0; i < r; ++i) subset[i] = i;
        while (true) {
            ++level.subsets;
            if (joint_uniform(c, subset)) ++level.uniform_subsets;
            std::size_t i = r;
            while (i > 0 && subset[i - 1] == si - r + i - 1) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < r; ++j) subset[j] = subset[j - 1] + 1;
        }
        level.uniform = level.uniform_subsets == level.subsets;
        if (level.guaranteed && !level.uniform) report.consistent = false;
        report.levels.push_back(level);
    }
    return report;
}

/// Share-wise product: a packet of C*C whose secret is s1 * s2.
inline SharePacket multiply_shares(const LinearCode& c, const SharePacket& a, const SharePacket& b) {
    detail::require_packet_for(c, a);
    detail::require_packet_for(c, b);
    if (a.secret_index != b.secret_index) throw Error(Errc::CodeMismatch, "secret coordinates differ");
    const Field& f = *c.field();
    SharePacket out;
    out.code_id = code_fingerprint(square(c));
    out.secret_index = a.secret_index;
    for (auto [i, v] : a.shares)
        if (auto it = b.shares.find(i); it != b.shares.end()) out.shares[i] = f.mul(v, it->second);
    return out;
}

/// Share-wise alpha * a + beta * b; its secret is alpha s1 + beta s2.
inline SharePacket linear_combination(const LinearCode& c, elem_t alpha, const SharePacket& a, elem_t beta,
                                      const SharePacket& b) {
    detail::require_packet_for(c, a);
    detail::require_packet_for(c, b);
    const Field& f = *c.field();
    SharePacket out;
    out.code_id = a.code_id;
    out.secret_index = a.secret_index;
    for (auto [i, v] : a.shares)
        if (auto it = b.shares.find(i); it != b.shares.end())
            out.shares[i] = f.add(f.mul(alpha, v), f.mul(beta, it->second));
    return out;
}

}  // namespace starcode
