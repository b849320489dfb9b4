#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace ttr {

using Rng = std::mt19937_64;

/// Derives an independent stream seed from a master seed and a stream tag.
/// splitmix64 finalizer; stable across platforms.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Serializes the full engine state so a run can resume bit-exactly.
inline std::string rng_state_string(const Rng& rng) {
    std::ostringstream os;
    os << rng;
    return os.str();
}

inline void rng_set_state(Rng& rng, const std::string& s) {
    std::istringstream is(s);
    is >> rng;
    if (is.fail()) throw std::invalid_argument("rng_set_state: malformed state string");
}

}  // namespace ttr
