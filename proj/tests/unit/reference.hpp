#pragma once

#include <cstdint>
#include <vector>

// Independent reference computations for the unit tests.
namespace ref {

using i64 = std::int64_t;

// Rows 0..n_max of Pascal's triangle reduced mod p.
inline std::vector<std::vector<int>> pascal_mod(int n_max, int p) {
    std::vector<std::vector<int>> t(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        t[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k) t[n][k] = (t[n - 1][k - 1] + t[n - 1][k]) % p;
    }
    return t;
}

// Legendre: exponent of p in n!.
inline i64 factorial_valuation(i64 n, i64 p) {
    i64 v = 0;
    for (i64 q = p; q <= n; q *= p) v += n / q;
    return v;
}

inline i64 binom_valuation(i64 n, i64 k, i64 p) {
    return factorial_valuation(n, p) - factorial_valuation(k, p) - factorial_valuation(n - k, p);
}

inline int valuation(i64 l, i64 p) {
    int v = 0;
    while (l % p == 0) {
        l /= p;
        ++v;
    }
    return v;
}

}  // namespace ref
