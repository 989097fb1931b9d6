#include "ospl/padic.hpp"

#include <stdexcept>
#include <string>

namespace ospl {

namespace {

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 pow_mod(i64 b, i64 e, i64 p) {
    i64 r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// C(n, k) mod p for 0 <= k <= n < p, from cached factorials.
int small_binom(int n, int k, i64 p) {
    struct Table {
        i64 p = 0;
        std::vector<i64> fact, inv;
    };
    thread_local Table t;
    if (t.p != p) {
        t.p = p;
        t.fact.assign(static_cast<std::size_t>(p), 1);
        t.inv.assign(static_cast<std::size_t>(p), 1);
        for (i64 i = 1; i < p; ++i) t.fact[i] = t.fact[i - 1] * i % p;
        for (i64 i = 0; i < p; ++i) t.inv[i] = pow_mod(t.fact[i], p - 2, p);
    }
    return static_cast<int>(t.fact[n] * t.inv[k] % p * t.inv[n - k] % p);
}

}  // namespace

Prime::Prime(i64 p) : p_(p) {
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
}

Digits digits(i64 n, Prime p) {
    if (n < 0) throw std::invalid_argument("digits of a negative integer");
    Digits d;
    while (n > 0) {
        d.push_back(static_cast<int>(n % p));
        n /= p;
    }
    return d;
}

int top_position(i64 n, Prime p) {
    if (n <= 0) throw std::invalid_argument("top_position needs n > 0");
    return static_cast<int>(digits(n, p).size()) - 1;
}

int carries(i64 a, i64 b, Prime p) {
    if (a < 0 || b < 0) throw std::invalid_argument("carries of negative integers");
    int count = 0, carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        i64 s = a % p + b % p + carry;
        carry = s >= p ? 1 : 0;
        count += carry;
        a /= p;
        b /= p;
    }
    return count;
}

int binom_mod(i64 n, i64 k, Prime p) {
    if (n < 0) throw std::invalid_argument("binom_mod with negative n");
    if (k < 0 || k > n) return 0;
    i64 result = 1;
    while (n > 0 || k > 0) {
        int ni = static_cast<int>(n % p), ki = static_cast<int>(k % p);
        if (ki > ni) return 0;
        result = result * small_binom(ni, ki, p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<int>(result);
}

int a_val(i64 l, Prime p) {
    if (l == 0) return kInfinity;
    if (l < 0) l = -l;
    int a = 0;
    while (l % p == 0) {
        l /= p;
        ++a;
    }
    return a;
}

int defect(i64 l, Prime p) {
    if (l < 0) throw std::invalid_argument("defect of a negative weight");
    return a_val(l + 1, p);
}

bool all_divisible(i64 k, i64 j, Prime p) {
    if (j < 0 || j >= k) throw std::invalid_argument("all_divisible needs 0 <= j < k");
    for (i64 t = 1; t <= j; ++t)
        if (binom_mod(k - j + t - 1, t, p) != 0) return false;
    return true;
}

i64 ipow(i64 base, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    i64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (base != 0 && r > std::numeric_limits<i64>::max() / (base < 0 ? -base : base))
            throw std::overflow_error("power overflows 64 bits");
        r *= base;
    }
    return r;
}

bool below_power(i64 j, Prime p, int e) {
    if (e == kInfinity) return true;
    i64 bound = 1;
    for (int i = 0; i < e; ++i) {
        if (bound > j) return true;
        bound *= p;
    }
    return j < bound;
}

i64 floor_div(i64 a, i64 m) {
    if (m <= 0) throw std::invalid_argument("floor_div needs a positive modulus");
    i64 q = a / m;
    if (a % m != 0 && a < 0) --q;
    return q;
}

i64 mod_floor(i64 a, i64 m) { return a - floor_div(a, m) * m; }

int inverse_mod(i64 a, Prime p) {
    a = mod_floor(a, p);
    if (a == 0) throw std::domain_error("zero has no inverse");
    return static_cast<int>(pow_mod(a, p - 2, p));
}

}  // namespace ospl
