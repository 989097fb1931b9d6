#include "ospl/linalg.hpp"

namespace ospl {

SparseVec Echelon::reduce(SparseVec v) const {
    for (auto& [col, c] : v) c = static_cast<int>(mod_floor(c, p_));
    for (auto it = v.begin(); it != v.end();) {
        if (it->second % p_ == 0) {
            it = v.erase(it);
            continue;
        }
        auto piv = pivots_.find(it->first);
        if (piv == pivots_.end()) {
            ++it;
            continue;
        }
        const i64 f = it->second;
        for (const auto& [col, c] : piv->second) {
            i64 x = (v[col] - f * c) % p_;
            if (x < 0) x += p_;
            v[col] = static_cast<int>(x);
        }
        // the pivot column is now zero; restart from the smallest column
        it = v.begin();
    }
    return v;
}

bool Echelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const std::size_t lead = v.begin()->first;
    const i64 inv = inverse_mod(v.begin()->second, p_);
    for (auto& [col, c] : v) c = static_cast<int>(c * inv % p_);
    // keep stored rows reduced with respect to the new pivot
    for (auto& [col, row] : pivots_) {
        auto hit = row.find(lead);
        if (hit == row.end()) continue;
        const i64 f = hit->second;
        for (const auto& [c2, x] : v) {
            i64 y = (row[c2] - f * x) % p_;
            if (y < 0) y += p_;
            if (y == 0) row.erase(c2);
            else row[c2] = static_cast<int>(y);
        }
    }
    pivots_.emplace(lead, std::move(v));
    return true;
}

bool Echelon::contains(SparseVec v) const { return reduce(std::move(v)).empty(); }

std::size_t rank_mod(const std::vector<SparseVec>& rows, Prime p) {
    Echelon e(p);
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

}  // namespace ospl
