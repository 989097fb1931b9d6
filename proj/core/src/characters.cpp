#include "ospl/characters.hpp"

#include <algorithm>
#include <string>

namespace ospl {

void LaurentPoly1::add(i64 weight, i64 coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(weight, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

i64 LaurentPoly1::coeff(i64 weight) const {
    auto it = terms_.find(weight);
    return it == terms_.end() ? 0 : it->second;
}

bool LaurentPoly1::nonnegative() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

i64 LaurentPoly1::total() const noexcept {
    i64 s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
}

i64 LaurentPoly1::top() const {
    if (terms_.empty()) throw std::domain_error("top weight of the zero character");
    return terms_.rbegin()->first;
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

FactorMultiset::FactorMultiset(std::initializer_list<i64> weights) {
    for (i64 w : weights) add(w);
}

void FactorMultiset::add(i64 hw, i64 mult) {
    if (mult <= 0) throw std::invalid_argument("multiplicity must be positive");
    entries_[hw] += mult;
}

i64 FactorMultiset::mult(i64 hw) const {
    auto it = entries_.find(hw);
    return it == entries_.end() ? 0 : it->second;
}

i64 FactorMultiset::max_mult() const noexcept {
    i64 m = 0;
    for (const auto& [w, c] : entries_) m = std::max(m, c);
    return m;
}

std::vector<i64> FactorMultiset::weights_desc() const {
    std::vector<i64> out;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) out.push_back(it->first);
    return out;
}

FactorMultiset FactorMultiset::shifted(i64 by) const {
    FactorMultiset f;
    for (const auto& [w, c] : entries_) f.add(w + by, c);
    return f;
}

FactorMultiset operator-(const FactorMultiset& a, const FactorMultiset& b) {
    FactorMultiset out = a;
    for (const auto& [w, c] : b.entries_) {
        auto it = out.entries_.find(w);
        if (it == out.entries_.end() || it->second < c)
            throw std::domain_error("multiset difference: missing factor " + std::to_string(w));
        it->second -= c;
        if (it->second == 0) out.entries_.erase(it);
    }
    return out;
}

FactorMultiset peel(LaurentPoly1 ch, const SimpleChar& simple_ch) {
    if (!ch.nonnegative()) throw PeelError("NEGATIVE_RESIDUAL: input character has negative terms");
    FactorMultiset out;
    while (!ch.empty()) {
        i64 top = ch.top();
        i64 c = ch.coeff(top);
        out.add(top, c);
        LaurentPoly1 s = simple_ch(top);
        for (const auto& [w, cc] : s.terms()) ch.add(w, -c * cc);
        if (!ch.nonnegative())
            throw PeelError("NEGATIVE_RESIDUAL after removing the simple of weight " +
                            std::to_string(top));
    }
    return out;
}

LaurentPoly1 character_of(const FactorMultiset& f, const SimpleChar& simple_ch) {
    LaurentPoly1 ch;
    for (const auto& [w, c] : f.entries()) {
        LaurentPoly1 s = simple_ch(w);
        for (const auto& [x, cc] : s.terms()) ch.add(x, c * cc);
    }
    return ch;
}

LaurentPoly1 ch_H0_sl2(i64 k) {
    if (k < 0) throw std::invalid_argument("ch_H0_sl2 needs k >= 0");
    LaurentPoly1 ch;
    for (i64 i = 0; i <= k; ++i) ch.add(k - 2 * i, 1);
    return ch;
}

LaurentPoly1 ch_L_sl2(i64 k, Prime p) {
    if (k < 0) throw std::invalid_argument("ch_L_sl2 needs k >= 0");
    LaurentPoly1 ch;
    for (i64 i = 0; i <= k; ++i)
        if (binom_mod(k, i, p) != 0) ch.add(k - 2 * i, 1);
    return ch;
}

LaurentPoly1 ch_H0_spo(i64 l) {
    LaurentPoly1 ch = ch_H0_sl2(l);
    if (l >= 1) ch += ch_H0_sl2(l - 1);
    return ch;
}

LaurentPoly1 ch_L_spo(i64 l, Prime p) {
    LaurentPoly1 ch = ch_L_sl2(l, p);
    if (l % p != 0) ch += ch_L_sl2(l - 1, p);
    return ch;
}

const char* to_string(Side s) noexcept { return s == Side::MINUS ? "minus" : "plus"; }

LaurentPoly1 ch_truncate(const LaurentPoly1& ch, i64 l, int r, Prime p, Side side) {
    const i64 width = 2 * ipow(p, r);
    LaurentPoly1 out;
    for (const auto& [w, c] : ch.terms()) {
        i64 j = side == Side::MINUS ? l - w : w - l;
        if (j >= 0 && j < width) out.add(w, c);
    }
    return out;
}

void LaurentPolyN::add(const Key& weight, i64 coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(weight, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

i64 LaurentPolyN::coeff(const Key& weight) const {
    auto it = terms_.find(weight);
    return it == terms_.end() ? 0 : it->second;
}

i64 LaurentPolyN::total() const noexcept {
    i64 s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
}

std::vector<std::pair<LaurentPolyN::Key, i64>> LaurentPolyN::sorted_desc() const {
    return {terms_.rbegin(), terms_.rend()};
}

LaurentPolyN LaurentPolyN::shifted(const Key& by) const {
    LaurentPolyN out;
    for (const auto& [w, c] : terms_) {
        Key k = w;
        for (std::size_t i = 0; i < k.size(); ++i) k[i] += by.at(i);
        out.add(k, c);
    }
    return out;
}

namespace {

LaurentPolyN multiply(const LaurentPolyN& a, const std::vector<std::pair<LaurentPolyN::Key, i64>>& factor) {
    LaurentPolyN out;
    for (const auto& [w, c] : a.terms())
        for (const auto& [fw, fc] : factor) {
            LaurentPolyN::Key k = w;
            for (std::size_t i = 0; i < k.size(); ++i) k[i] += fw[i];
            out.add(k, c * fc);
        }
    return out;
}

}  // namespace

LaurentPolyN ch_product_Zr(const WeightVec& lambda, const std::vector<WeightVec>& even_positive,
                           const std::vector<WeightVec>& odd_positive, int r, Prime p) {
    const i64 pr = ipow(p, r);
    LaurentPolyN ch;
    ch.add(lambda.coords(), 1);
    for (const WeightVec& a : even_positive) {
        std::vector<i64> step = a.coords();
        std::vector<std::pair<LaurentPolyN::Key, i64>> factor;
        for (i64 t = 0; t < pr; ++t) {
            LaurentPolyN::Key k(step.size());
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = -t * step[i];
            factor.emplace_back(std::move(k), 1);
        }
        ch = multiply(ch, factor);
    }
    for (const WeightVec& a : odd_positive) {
        std::vector<i64> step = a.coords();
        LaurentPolyN::Key zero(step.size(), 0), neg(step.size());
        for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -step[i];
        ch = multiply(ch, {{zero, 1}, {neg, 1}});
    }
    return ch;
}

}  // namespace ospl
