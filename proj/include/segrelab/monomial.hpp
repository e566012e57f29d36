#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace segrelab {

// Dense exponent vector, one entry per ring variable.
using Mono = std::vector<std::int32_t>;

inline std::int64_t total_degree(const Mono& m) {
    return std::accumulate(m.begin(), m.end(), std::int64_t{0});
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Mono mono_div(const Mono& b, const Mono& a) {  // b / a, assumes a | b
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

inline bool mono_is_one(const Mono& a) {
    for (auto e : a)
        if (e != 0) return false;
    return true;
}

}  // namespace segrelab
