#include "ospl/oracles.hpp"

#include <map>
#include <numeric>

#include "ospl/linalg.hpp"

namespace ospl::oracle {

namespace {

using Generator = std::function<VectorExpr(const VectorExpr&)>;

std::vector<BasisMonomial> quotient(const std::vector<BasisMonomial>& basis,
                                    const std::vector<Generator>& ops, Prime p) {
    std::map<BasisMonomial, std::size_t> col;
    for (const auto& m : basis) col.emplace(m, col.size());
    Echelon ech(p);
    for (const auto& m : basis) {
        const VectorExpr v{{m, 1}};
        for (const auto& op : ops) {
            SparseVec row;
            for (const auto& [target, c] : op(v)) row[col.at(target)] = c;
            if (!row.empty()) ech.insert(std::move(row));
        }
    }
    std::vector<BasisMonomial> out;
    for (const auto& m : basis)
        if (!ech.is_pivot(col.at(m))) out.push_back(m);
    return out;
}

i64 source_weight(const MorphismTable& t, const BasisMonomial& m, bool frobenius) {
    return frobenius ? weight_r(m, t.source_degree) : weight(m, t.source_degree);
}

i64 target_weight(const MorphismTable& t, const BasisMonomial& m, bool frobenius) {
    return frobenius ? weight_r(m, t.target_degree) : weight(m, t.target_degree);
}

}  // namespace

std::vector<BasisMonomial> rad_quotient(i64 k, Prime p) {
    std::vector<Generator> ops;
    for (i64 t = 1; t <= k; ++t)
        ops.push_back([=](const VectorExpr& v) { return act(DistOp::F, t, v, k, p); });
    ops.push_back([=](const VectorExpr& v) { return act(DistOp::Y, 0, v, k, p); });
    return quotient(basis_H0(k, Side::PLUS), ops, p);
}

HomDim hom_dim(i64 k, i64 l, Prime p) {
    HomDim out;
    for (const auto& m : rad_quotient(k, p)) {
        if (weight(m, k) != l) continue;
        ++out.dim;
        if (m.eps) out.parity = Parity::ODD;
    }
    return out;
}

std::vector<BasisMonomial> rad_quotient_r(i64 k, int r, Prime p) {
    const i64 pr = ipow(p, r);
    std::vector<Generator> ops;
    for (i64 t = 1; t < pr; ++t)
        ops.push_back([=](const VectorExpr& v) { return act_r(DistOp::F, t, v, k, r, p); });
    ops.push_back([=](const VectorExpr& v) { return act_r(DistOp::Y, 0, v, k, r, p); });
    return quotient(basis_H0_r(k, r, p, Side::PLUS), ops, p);
}

int hom_r(i64 k, i64 l, int r, Prime p) {
    int dim = 0;
    for (const auto& m : rad_quotient_r(k, r, p))
        if (weight_r(m, k) == l) ++dim;
    return dim;
}

LaurentPoly1 image_character(const MorphismTable& t, bool frobenius) {
    LaurentPoly1 ch;
    for (const auto& row : t.rows)
        if (row.target_valid && row.coeff != 0) ch.add(target_weight(t, row.target, frobenius), 1);
    return ch;
}

RankNullity rank_nullity(const MorphismTable& t, const std::vector<BasisMonomial>& kernel, Prime p,
                         bool frobenius) {
    RankNullity out;
    std::map<BasisMonomial, std::size_t> col;
    std::map<i64, std::vector<SparseVec>> rows_by_weight;
    std::map<i64, std::size_t> sources, kernel_count;
    for (const auto& row : t.rows) {
        const i64 w = source_weight(t, row.source, frobenius);
        ++sources[w];
        SparseVec v;
        if (row.target_valid && row.coeff != 0) {
            if (target_weight(t, row.target, frobenius) != w) out.weights_preserved = false;
            v[col.emplace(row.target, col.size()).first->second] = row.coeff;
        }
        rows_by_weight[w].push_back(std::move(v));
    }
    for (const auto& m : kernel) ++kernel_count[source_weight(t, m, frobenius)];
    for (const auto& [w, n] : sources)
        if (n != rank_mod(rows_by_weight[w], p) + kernel_count[w]) out.balanced = false;
    for (const auto& [w, n] : kernel_count)
        if (!sources.count(w)) out.balanced = false;
    return out;
}

std::vector<std::vector<i64>> shared_factor_components(
    i64 lo, i64 hi, const std::function<FactorMultiset(i64)>& factors) {
    const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (i64 q = lo; q <= hi; ++q) {
        std::vector<std::size_t> members;
        const FactorMultiset f = factors(q);
        for (const auto& [w, mult] : f.entries())
            if (w >= lo && w <= hi && mult > 0) members.push_back(static_cast<std::size_t>(w - lo));
        for (std::size_t i = 1; i < members.size(); ++i) {
            std::size_t a = find(members[0]), b = find(members[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<std::size_t, std::vector<i64>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(lo + static_cast<i64>(i));
    std::vector<std::vector<i64>> out;
    for (auto& [root, g] : groups) out.push_back(std::move(g));
    return out;
}

std::vector<Root> phi_plus(const Flag& flag, const GroupShape& shape) {
    flag.validate(shape);
    const std::size_t len = flag.entries.size();
    std::vector<i64> h(shape.rank(), 0);
    for (std::size_t s = 0; s < len; ++s) {
        const Label& a = flag.entries[s];
        const std::size_t idx = a.orthogonal ? static_cast<std::size_t>(shape.n + a.index - 1)
                                             : static_cast<std::size_t>(a.index - 1);
        h[idx] = a.sign * static_cast<i64>(len - s);
    }
    std::vector<Root> out;
    for (const Root& r : roots(shape)) {
        i64 v = 0;
        for (std::size_t i = 0; i < h.size(); ++i) v += r.vec.doubled()[i] * h[i];
        if (v > 0) out.push_back(r);
    }
    return out;
}

}  // namespace ospl::oracle
