#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "starcode/code.hpp"
#include "starcode/parallel.hpp"

namespace starcode {

enum class Verdict { RandomLike, Structured };

inline std::string verdict_name(Verdict v) { return v == Verdict::Structured ? "structured" : "random_like"; }

/// Square-code test: a random [n, k] code has dim C*C = min(n, k(k+1)/2)
/// with high probability, while evaluation codes have much smaller squares.
struct DistinguishReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t dim_square = 0;
    std::size_t generic_dim = 0;
    std::size_t slack = 0;
    Verdict verdict = Verdict::RandomLike;
};

inline std::size_t generic_square_dim(std::size_t n, std::size_t k) { return std::min(n, k * (k + 1) / 2); }

/// Structured iff dim C*C falls below the generic value. For k = 1 the
/// test cannot fire (generic_dim = 1).
inline DistinguishReport distinguish(const LinearCode& c) {
    DistinguishReport r;
    r.n = c.n();
    r.k = c.k();
    r.dim_square = square(c).k();
    r.generic_dim = generic_square_dim(r.n, r.k);
    r.slack = r.generic_dim - r.dim_square;
    r.verdict = r.slack > 0 ? Verdict::Structured : Verdict::RandomLike;
    return r;
}

struct SubcodeAudit {
    DistinguishReport code;
    DistinguishReport dual;
};

/// Runs the distinguisher on the code and on its dual.
inline SubcodeAudit audit_subcode(const LinearCode& c) { return {distinguish(c), distinguish(starcode::dual(c))}; }

/// Histogram of dim C*C over random [n, k] codes; trial i uses seed + i.
inline std::map<std::size_t, std::size_t> random_square_experiment(const FieldPtr& field, std::size_t n, std::size_t k,
                                                                   std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw Error(Errc::InvalidArgument, "trials must be >= 1");
    std::vector<std::size_t> dims(trials);
    parallel_for(trials, [&](std::size_t i) { dims[i] = square(random_code(field, n, k, seed + i)).k(); });
    std::map<std::size_t, std::size_t> hist;
    for (auto d : dims) ++hist[d];
    return hist;
}

}  // namespace starcode
