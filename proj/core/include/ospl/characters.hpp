#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "ospl/padic.hpp"
#include "ospl/weight.hpp"

namespace ospl {

// Rank-one formal character: weight -> coefficient, zero coefficients never stored.
class LaurentPoly1 {
public:
    LaurentPoly1() = default;

    void add(i64 weight, i64 coeff);
    i64 coeff(i64 weight) const;
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool nonnegative() const noexcept;
    // Sum of coefficients, i.e. the dimension for a module character.
    i64 total() const noexcept;
    i64 top() const;  // maximal weight; throws on the zero character
    const std::map<i64, i64>& terms() const noexcept { return terms_; }

    LaurentPoly1& operator+=(const LaurentPoly1& o);
    LaurentPoly1& operator-=(const LaurentPoly1& o);
    friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
    friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
    friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

private:
    std::map<i64, i64> terms_;
};

// Highest weight -> multiplicity. Composition factors are tracked up to parity shift.
class FactorMultiset {
public:
    FactorMultiset() = default;
    FactorMultiset(std::initializer_list<i64> weights);

    void add(i64 hw, i64 mult = 1);
    bool contains(i64 hw) const { return entries_.count(hw) != 0; }
    i64 mult(i64 hw) const;
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    i64 max_mult() const noexcept;
    // Highest weights in descending order.
    std::vector<i64> weights_desc() const;
    const std::map<i64, i64>& entries() const noexcept { return entries_; }
    FactorMultiset shifted(i64 by) const;
    // Multiset difference; throws std::domain_error if b is not contained in a.
    friend FactorMultiset operator-(const FactorMultiset& a, const FactorMultiset& b);
    friend bool operator==(const FactorMultiset&, const FactorMultiset&) = default;

private:
    std::map<i64, i64> entries_;
};

// Thrown when peeling meets a negative residual (NEGATIVE_RESIDUAL).
class PeelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using SimpleChar = std::function<LaurentPoly1(i64)>;

// Greedy maximal-weight decomposition of ch into the given simple characters.
FactorMultiset peel(LaurentPoly1 ch, const SimpleChar& simple_ch);

// Sum of simple characters over a multiset of factors.
LaurentPoly1 character_of(const FactorMultiset& f, const SimpleChar& simple_ch);

LaurentPoly1 ch_H0_sl2(i64 k);
LaurentPoly1 ch_L_sl2(i64 k, Prime p);
LaurentPoly1 ch_H0_spo(i64 l);
LaurentPoly1 ch_L_spo(i64 l, Prime p);

enum class Side { MINUS, PLUS };

const char* to_string(Side s) noexcept;

// Keeps x^{l-j} (MINUS) or x^{l+j} (PLUS) for 0 <= j < 2p^r.
LaurentPoly1 ch_truncate(const LaurentPoly1& ch, i64 l, int r, Prime p, Side side);

// Multivariate character over integral weights (undoubled coordinates).
class LaurentPolyN {
public:
    using Key = std::vector<i64>;

    void add(const Key& weight, i64 coeff);
    i64 coeff(const Key& weight) const;
    std::size_t size() const noexcept { return terms_.size(); }
    i64 total() const noexcept;
    const std::map<Key, i64>& terms() const noexcept { return terms_; }
    // Terms sorted lexicographically descending.
    std::vector<std::pair<Key, i64>> sorted_desc() const;
    LaurentPolyN shifted(const Key& by) const;
    friend bool operator==(const LaurentPolyN&, const LaurentPolyN&) = default;

private:
    std::map<Key, i64> terms_;
};

// e^lambda prod_{even a}(1 + e^{-a} + ... + e^{-(p^r-1)a}) prod_{odd a}(1 + e^{-a}).
LaurentPolyN ch_product_Zr(const WeightVec& lambda, const std::vector<WeightVec>& even_positive,
                           const std::vector<WeightVec>& odd_positive, int r, Prime p);

}  // namespace ospl
