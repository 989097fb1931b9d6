#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace ospl {

using i64 = std::int64_t;

// Odd prime characteristic. Construction checks primality; 2 is rejected.
class Prime {
public:
    explicit Prime(i64 p);

    i64 value() const noexcept { return p_; }
    operator i64() const noexcept { return p_; }

private:
    i64 p_;
};

// Base-p digits, least significant first. Zero has no digits.
using Digits = std::vector<int>;

// Valuation of zero.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

Digits digits(i64 n, Prime p);

// Index of the top digit of n (n > 0).
int top_position(i64 n, Prime p);

// Number of carries when adding a and b in base p.
int carries(i64 a, i64 b, Prime p);

// C(n, k) mod p by Lucas. Returns 0 for k < 0 or k > n.
int binom_mod(i64 n, i64 k, Prime p);

// Exponent of the exact power of p dividing l; kInfinity for l = 0.
int a_val(i64 l, Prime p);

// a_val(l + 1).
int defect(i64 l, Prime p);

// Every member of {C(k-j,1), C(k-j+1,2), ..., C(k-1,j)} vanishes mod p.
bool all_divisible(i64 k, i64 j, Prime p);

// base^e, throwing std::overflow_error when it does not fit.
i64 ipow(i64 base, int e);

// j < p^e, with e allowed to be kInfinity.
bool below_power(i64 j, Prime p, int e);

i64 floor_div(i64 a, i64 m);
i64 mod_floor(i64 a, i64 m);

int inverse_mod(i64 a, Prime p);

}  // namespace ospl
