#include "ospl/spo21.hpp"

#include <set>
#include <stdexcept>

#include "ospl/words.hpp"

namespace ospl {

namespace {

bool in_basis(const BasisMonomial& m, i64 deg) { return m.i >= 0 && m.i <= deg - m.eps; }

void accumulate(VectorExpr& out, const BasisMonomial& m, i64 coeff, Prime p) {
    int c = static_cast<int>(mod_floor(coeff, p));
    if (c == 0) return;
    int& slot = out[m];
    slot = static_cast<int>((slot + c) % p);
    if (slot == 0) out.erase(m);
}

std::set<i64> words_of_kind(i64 k, Prime p, Kind wanted) {
    std::set<i64> out;
    if (k < 0) return out;
    for (const auto& ww : surviving_words(k, p))
        if (kind(ww.entry.word, ww.entry.generation) == wanted) out.insert(ww.weight);
    return out;
}

FactorMultiset as_multiset(const std::set<i64>& weights) {
    FactorMultiset f;
    for (i64 w : weights) f.add(w);
    return f;
}

void require_admissible(i64 k, i64 j, Prime p) {
    if (!admissible(k, j, p))
        throw std::invalid_argument("no morphism psi for k=" + std::to_string(k) +
                                    ", j=" + std::to_string(j));
}

}  // namespace

std::string to_string(const BasisMonomial& m, i64 degree) {
    const i64 other = degree - m.i - m.eps;
    std::string s;
    if (m.side == Side::MINUS)
        s = "x11^" + std::to_string(other) + " x1,-1^" + std::to_string(m.i);
    else
        s = "x-1,-1^" + std::to_string(m.i) + " x-1,1^" + std::to_string(other);
    if (m.eps) s += m.side == Side::MINUS ? " x1,0" : " x-1,0";
    return s;
}

const char* to_string(Parity p) noexcept { return p == Parity::EVEN ? "even" : "odd"; }

i64 weight(const BasisMonomial& m, i64 deg) { return deg - 2 * m.i - m.eps; }

Parity parity(const BasisMonomial& m) noexcept { return m.eps ? Parity::ODD : Parity::EVEN; }

std::vector<BasisMonomial> basis_H0(i64 deg, Side side) {
    if (deg < 0) throw std::invalid_argument("basis_H0 needs a nonnegative degree");
    std::vector<BasisMonomial> out;
    for (i64 i = 0; i <= deg; ++i) out.push_back({side, i, 0});
    for (i64 i = 0; i < deg; ++i) out.push_back({side, i, 1});
    return out;
}

std::vector<BasisMonomial> socle_basis(i64 l, Prime p, Side side) {
    if (l < 0) throw std::invalid_argument("socle_basis needs l >= 0");
    std::vector<BasisMonomial> out;
    for (i64 i = 0; i <= l; ++i)
        if (binom_mod(l, i, p) != 0) out.push_back({side, i, 0});
    if (l % p != 0)
        for (i64 j = 0; j < l; ++j)
            if (binom_mod(l - 1, j, p) != 0) out.push_back({side, j, 1});
    return out;
}

VectorExpr act(DistOp op, i64 t, const VectorExpr& v, i64 deg, Prime p) {
    if ((op == DistOp::F || op == DistOp::E) && t < 1)
        throw std::invalid_argument("divided powers need t >= 1");
    VectorExpr out;
    for (const auto& [m, c] : v) {
        if (!in_basis(m, deg)) throw std::invalid_argument("monomial outside the basis");
        auto emit = [&](BasisMonomial target, i64 coeff) {
            if (in_basis(target, deg)) accumulate(out, target, coeff * c, p);
        };
        switch (op) {
            case DistOp::F:
                emit({m.side, m.i + t, m.eps}, binom_mod(deg - m.i - m.eps, t, p));
                break;
            case DistOp::E:
                emit({m.side, m.i - t, m.eps}, binom_mod(m.i, t, p));
                break;
            case DistOp::Y:
                if (m.eps == 0) emit({m.side, m.i, 1}, deg - m.i);
                else emit({m.side, m.i + 1, 0}, 1);
                break;
            case DistOp::X:
                if (m.eps == 0) emit({m.side, m.i - 1, 1}, -m.i);
                else emit({m.side, m.i, 0}, 1);
                break;
        }
    }
    return out;
}

std::vector<BasisMonomial> rad_basis(i64 k, Prime p) {
    if (k < 0) throw std::invalid_argument("rad_basis needs k >= 0");
    std::vector<BasisMonomial> out;
    if (k == 0) return out;
    for (i64 i = 1; i <= k; ++i) out.push_back({Side::PLUS, i, 0});
    if (k % p != 0) out.push_back({Side::PLUS, 0, 1});
    for (i64 j = 1; j <= k - 1; ++j)
        if (!below_power(j, p, a_val(k - j, p))) out.push_back({Side::PLUS, j, 1});
    return out;
}

bool admissible(i64 k, i64 j, Prime p) {
    if (k <= 0 || j < 0) return false;
    const i64 jmin = k % p == 0 ? 0 : 1;
    return j >= jmin && j <= (k - 1) / 2 && below_power(j, p, a_val(k - j, p));
}

HomDim hom_dim(i64 k, i64 l, Prime p) {
    if (k < 0 || l < 0) throw std::invalid_argument("hom_dim needs k, l >= 0");
    if (k == 0) return l == 0 ? HomDim{1, Parity::EVEN} : HomDim{0, Parity::EVEN};
    if (l == k) return {1, Parity::EVEN};
    if (l > k - 1 || (k - 1 - l) % 2 != 0) return {0, Parity::EVEN};
    return admissible(k, (k - 1 - l) / 2, p) ? HomDim{1, Parity::ODD} : HomDim{0, Parity::EVEN};
}

BasisMonomial iso_k(const BasisMonomial& v, i64 k) {
    if (v.side != Side::PLUS || !in_basis(v, k)) throw std::invalid_argument("iso_k needs a PLUS basis monomial");
    return {Side::MINUS, v.i, v.eps};
}

VectorExpr MorphismTable::apply(const BasisMonomial& source) const {
    for (const auto& row : rows)
        if (row.source == source) {
            if (row.coeff == 0) return {};
            return {{row.target, row.coeff}};
        }
    throw std::invalid_argument("monomial not in the table's domain");
}

MorphismTable psi_table(i64 k, i64 j, Prime p) {
    require_admissible(k, j, p);
    const i64 l = k - 1 - 2 * j;
    MorphismTable t{k, l, {}};
    for (const auto& m : basis_H0(k, Side::PLUS)) {
        TableRow row;
        row.source = m;
        if (m.eps == 0) {
            row.raw_coeff = m.i >= 1 ? static_cast<int>(m.i % p * binom_mod(m.i - 1, j, p) % p) : 0;
            row.target = {Side::MINUS, m.i - 1 - j, 1};
        } else {
            row.raw_coeff = binom_mod(m.i, j, p);
            row.target = {Side::MINUS, m.i - j, 0};
        }
        row.target_valid = in_basis(row.target, l);
        row.coeff = row.target_valid ? row.raw_coeff : 0;
        t.rows.push_back(row);
    }
    return t;
}

std::vector<BasisMonomial> kernel_basis(i64 k, i64 j, Prime p) {
    require_admissible(k, j, p);
    std::vector<BasisMonomial> out;
    for (i64 i = 0; i <= k; ++i) {
        bool edge = i <= j || i >= k - j;
        if (edge || (i % p) * binom_mod(i - 1, j, p) % p == 0) out.push_back({Side::PLUS, i, 0});
    }
    for (i64 i = 0; i <= k - 1; ++i) {
        bool edge = i <= j - 1 || i >= k - j;
        if (edge || binom_mod(i, j, p) == 0) out.push_back({Side::PLUS, i, 1});
    }
    return out;
}

FactorMultiset comp_factors_H0_spo(i64 l, Prime p) {
    if (l < 0) throw std::invalid_argument("comp_factors_H0_spo needs l >= 0");
    std::set<i64> f{l};
    if (l == 0) return as_multiset(f);
    if (l % p == 0) f.insert(l - 1);
    for (i64 w : words_of_kind(l - 1, p, Kind::FIRST)) f.insert(w);
    const Kind second = mod_floor(l + 1, p) == 0 ? Kind::FIRST : Kind::SECOND;
    for (i64 w : words_of_kind(l, p, second)) f.insert(w);
    return as_multiset(f);
}

int block_of(i64 l, Prime p) {
    const i64 a = mod_floor(l, 2 * p);
    return static_cast<int>(a < p ? a : 2 * p - 1 - a);
}

KerImCoker ker_im_coker_factors(i64 k, i64 j, Prime p) {
    require_admissible(k, j, p);
    const i64 l = k - 1 - 2 * j;
    KerImCoker out;
    if (j == 0) {
        std::set<i64> ker{k}, im{k - 1};
        for (i64 w : words_of_kind(k, p, Kind::SECOND)) ker.insert(w);
        for (i64 w : words_of_kind(k - 1, p, Kind::FIRST)) im.insert(w);
        out.ker = as_multiset(ker);
        out.im = as_multiset(im);
        out.coker = as_multiset(words_of_kind(k - 2, p, Kind::FIRST));
        return out;
    }
    const std::size_t t = digits(j, p).size();
    std::set<i64> im;
    for (const auto& ww : surviving_words(k - 1, p)) {
        if (ww.entry.generation < 0) continue;
        const Word& w = ww.entry.word;
        bool prefix = w.size() >= t;
        for (std::size_t i = 0; prefix && i < t; ++i) prefix = w[i] == Sym::GE;
        if (prefix) im.insert(ww.weight);
    }
    out.im = as_multiset(im);
    out.ker = comp_factors_H0_spo(k, p) - out.im;
    out.coker = comp_factors_H0_spo(l, p) - out.im;
    return out;
}

FactorMultiset image_factors_reindexed(i64 k, i64 j, Prime p) {
    require_admissible(k, j, p);
    if (j == 0) throw std::domain_error("the alternative description needs j > 0");
    const std::size_t t = digits(j, p).size();
    Digits dk = digits(k, p);
    if (t >= dk.size() || dk[t] == 0)
        throw std::domain_error("the alternative description needs a nonzero digit of k at position t");
    const i64 l = k - 1 - 2 * j;
    FactorMultiset out;
    for (const auto& ww : surviving_words(k - 1, p)) {
        if (ww.entry.generation < 0) continue;
        const Word& w = ww.entry.word;
        bool prefix = w.size() >= t;
        for (std::size_t i = 0; prefix && i < t; ++i) prefix = w[i] == Sym::GE;
        if (!prefix) continue;
        Word z;
        z.symbols.push_back(Sym::LT);
        for (std::size_t i = 1; i < t; ++i) z.symbols.push_back(Sym::LE);
        if (t < w.size()) {
            if (w[t] == Sym::LT) z.symbols.push_back(Sym::LE);
            else if (w[t] == Sym::GE) z.symbols.push_back(Sym::GT);
            else throw std::logic_error("unexpected symbol after the prefix in " + w.str());
            for (std::size_t i = t + 1; i < w.size(); ++i) z.symbols.push_back(w[i]);
        }
        out.add(ell_padded(l, z, p));
    }
    return out;
}

}  // namespace ospl
