#include "ospl/frobenius.hpp"

#include <set>
#include <stdexcept>

#include "ospl/words.hpp"

namespace ospl {

namespace {

std::set<i64> branch_weights(i64 k, int r, Prime p, Kind wanted) {
    const int u = top_position(k + 1, p);
    std::set<i64> out;
    for (const auto& ww : prune(build_words(r, u), k, p, /*drop_negative=*/false))
        if (kind(ww.entry.word, ww.entry.generation) == wanted) out.insert(ww.weight);
    return out;
}

}  // namespace

i64 weight_r(const BasisMonomial& m, i64 deg) {
    return m.side == Side::MINUS ? deg - 2 * m.i - m.eps : 2 * m.i - deg + m.eps;
}

std::vector<BasisMonomial> basis_H0_r(i64 deg, int r, Prime p, Side side) {
    (void)deg;
    const i64 pr = ipow(p, r);
    std::vector<BasisMonomial> out;
    for (int eps = 0; eps <= 1; ++eps)
        for (i64 i = 0; i < pr; ++i) out.push_back({side, i, eps});
    return out;
}

int binom_mod_r(i64 n, i64 k, int r, Prime p) {
    const i64 pr = ipow(p, r);
    if (k < 0 || k >= pr) throw std::invalid_argument("binom_mod_r needs 0 <= k < p^r");
    return binom_mod(mod_floor(n, pr), k, p);
}

std::vector<BasisMonomial> socle_basis_r(i64 l, int r, Prime p, Side side) {
    const i64 pr = ipow(p, r);
    std::vector<BasisMonomial> out;
    for (i64 k = 0; k < pr; ++k)
        if (binom_mod_r(l, k, r, p) != 0) out.push_back({side, k, 0});
    if (mod_floor(l, p) != 0)
        for (i64 t = 0; t < pr; ++t)
            if (binom_mod_r(l - 1, t, r, p) != 0) out.push_back({side, t, 1});
    return out;
}

LaurentPoly1 ch_H0_r(i64 l, int r, Prime p) {
    LaurentPoly1 ch;
    for (const auto& m : basis_H0_r(l, r, p, Side::MINUS)) ch.add(weight_r(m, l), 1);
    return ch;
}

LaurentPoly1 ch_L_r(i64 l, int r, Prime p) {
    LaurentPoly1 ch;
    for (const auto& m : socle_basis_r(l, r, p, Side::MINUS)) ch.add(weight_r(m, l), 1);
    return ch;
}

VectorExpr act_r(DistOp op, i64 t, const VectorExpr& v, i64 k, int r, Prime p) {
    (void)k;
    const i64 pr = ipow(p, r);
    VectorExpr out;
    auto emit = [&](const BasisMonomial& m, i64 coeff) {
        if (m.i < 0 || m.i >= pr) return;
        int c = static_cast<int>(mod_floor(coeff, p));
        if (c == 0) return;
        int& slot = out[m];
        slot = static_cast<int>((slot + c) % p);
        if (slot == 0) out.erase(m);
    };
    for (const auto& [m, c] : v) {
        if (m.side != Side::PLUS) throw std::invalid_argument("act_r acts on the PLUS basis");
        switch (op) {
            case DistOp::F:
                if (t < 1 || t >= pr) throw std::invalid_argument("act_r needs 1 <= t < p^r");
                emit({m.side, m.i - t, m.eps}, static_cast<i64>(binom_mod(m.i, t, p)) * c);
                break;
            case DistOp::Y:
                if (m.eps == 0) emit({m.side, m.i - 1, 1}, m.i * c);
                else emit({m.side, m.i, 0}, c);
                break;
            default:
                throw std::invalid_argument("act_r supports f^(t) and y only");
        }
    }
    return out;
}

int hom_r(i64 k, i64 l, int r, Prime p) { return l == 2 * ipow(p, r) - k - 1 ? 1 : 0; }

i64 k_tilde(i64 k, int r, Prime p) {
    const i64 pr = ipow(p, r);
    return mod_floor(k, pr) + pr;
}

MorphismTable psi_r_table(i64 k, int r, Prime p) {
    const i64 pr = ipow(p, r);
    const i64 kt = k_tilde(k, r, p);
    MorphismTable t{k, 2 * pr - k - 1, {}};
    for (int eps = 0; eps <= 1; ++eps) {
        for (i64 i = 0; i < pr; ++i) {
            TableRow row;
            row.source = {Side::PLUS, i, eps};
            row.target = {Side::MINUS, pr - i - 1, 1 - eps};
            const i64 b = binom_mod(kt - i - 1, kt - pr, p);
            row.raw_coeff = static_cast<int>(eps == 0 ? mod_floor(kt - i, p) * b % p : b);
            row.target_valid = true;
            row.coeff = row.raw_coeff;
            t.rows.push_back(row);
        }
    }
    return t;
}

FactorMultiset comp_factors_r(i64 l, int r, Prime p) {
    const i64 pr = ipow(p, r);
    const i64 t = floor_div(l - pr, pr);
    const i64 lt = l - t * pr;  // in [p^r, 2p^r)
    std::set<i64> f{lt};
    if (lt % p == 0) f.insert(lt - 1);
    for (i64 w : branch_weights(lt - 1, r, p, Kind::FIRST)) f.insert(w);
    const Kind second = (lt + 1) % p == 0 ? Kind::FIRST : Kind::SECOND;
    for (i64 w : branch_weights(lt, r, p, second)) f.insert(w);
    FactorMultiset out;
    for (i64 w : f) out.add(w + t * pr);
    return out;
}

int block_of_r(i64 l, Prime p) { return block_of(l, p); }

KerImCoker psi_r_ker_im_coker(i64 k, int r, Prime p) {
    const i64 l = 2 * ipow(p, r) - k - 1;
    KerImCoker out;
    out.im = FactorMultiset{l};
    // H0_{r,+}(-k) and H0_{r,-}(l) have the same character
    out.coker = comp_factors_r(l, r, p) - out.im;
    out.ker = comp_factors_r(l, r, p) - out.im;
    return out;
}

}  // namespace ospl
