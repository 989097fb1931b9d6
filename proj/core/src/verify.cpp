#include "ospl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ospl/frobenius.hpp"
#include "ospl/linkage.hpp"
#include "ospl/oracles.hpp"
#include "ospl/rootdata.hpp"
#include "ospl/sl2.hpp"
#include "ospl/spo21.hpp"
#include "ospl/words.hpp"

namespace ospl {

namespace {

// Thrown by check() to report the first mismatch.
struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(bool ok, const std::function<std::string()>& what) {
    if (!ok) throw Mismatch(what());
}

std::string show(const FactorMultiset& f) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (i64 w : f.weights_desc()) {
        os << (first ? "" : ",") << w;
        if (f.mult(w) != 1) os << "^" << f.mult(w);
        first = false;
    }
    return os.str() + "}";
}

const std::vector<i64> kPrimes{3, 5, 7};

// ---- 1: word table ----------------------------------------------------------------------

// Offsets per digit position: 0 none, 1 for -2 a_i p^i, 2 for -2 (a_i + 1) p^i.
struct TableRow {
    const char* word;
    int offsets[5];
};

// The ordered set W^4 for five-digit k+1, with the weights l_k(w).
const TableRow kWordTable[16] = {
    {"<≤≤≤≤", {0, 0, 0, 0, 0}}, {"≥<≤≤≤", {1, 0, 0, 0, 0}}, {"≥≥<≤≤", {1, 1, 0, 0, 0}},
    {"<><≤≤", {0, 2, 0, 0, 0}}, {"≥≥≥<≤", {1, 1, 1, 0, 0}}, {"<>≥<≤", {0, 2, 1, 0, 0}},
    {"<≤><≤", {0, 0, 2, 0, 0}}, {"≥<><≤", {1, 0, 2, 0, 0}}, {"≥≥≥≥<", {1, 1, 1, 1, 0}},
    {"<>≥≥<", {0, 2, 1, 1, 0}}, {"<≤>≥<", {0, 0, 2, 1, 0}}, {"≥<>≥<", {1, 0, 2, 1, 0}},
    {"<≤≤><", {0, 0, 0, 2, 0}}, {"≥<≤><", {1, 0, 0, 2, 0}}, {"≥≥<><", {1, 1, 0, 2, 0}},
    {"<><><", {0, 2, 0, 2, 0}},
};

i64 table_weight(const TableRow& row, i64 k, Prime p) {
    Digits a = digits(k + 1, p);
    i64 v = k, pw = 1;
    for (int i = 0; i < 5; ++i) {
        if (row.offsets[i] == 1) v -= 2 * a[i] * pw;
        if (row.offsets[i] == 2) v -= 2 * (a[i] + 1) * pw;
        pw *= p;
    }
    return v;
}

std::string word_table() {
    const auto w44 = build_words(4, 4);
    const auto w54 = build_words(5, 4);
    check(w44.size() == 16, [&] { return "W^4 has " + std::to_string(w44.size()) + " words"; });
    check(w54.size() == 32, [&] { return "build_words(5,4) has " + std::to_string(w54.size()) + " words"; });
    for (std::size_t i = 0; i < 16; ++i) {
        const Word expected = Word::parse(kWordTable[i].word);
        check(w44[i].word == expected && w54[i].word == expected,
              [&] { return "row " + std::to_string(i + 1) + ": got " + w54[i].word.str(); });
    }
    std::size_t samples = 0;
    for (i64 pv : kPrimes) {
        const Prime p(pv);
        const i64 p4 = ipow(p, 4);
        // every five-digit k+1 with p = 3; a stride for larger p
        const i64 stride = pv == 3 ? 1 : pv + 2;
        for (i64 k1 = p4; k1 < p * p4; k1 += stride) {
            const i64 k = k1 - 1;
            for (std::size_t i = 0; i < 16; ++i)
                check(ell(k, w54[i].word, p) == table_weight(kWordTable[i], k, p), [&] {
                    return "l_k mismatch for " + w54[i].word.str() + " at k=" + std::to_string(k);
                });
            for (std::size_t i = 16; i < 32; ++i)
                check(w54[i].generation == 4 && ell(k, w54[i].word, p) < 0, [&] {
                    return "word " + w54[i].word.str() + " of W_4 survives at k=" + std::to_string(k);
                });
            ++samples;
        }
    }
    return "16 rows; l_k checked on " + std::to_string(samples) + " values of k";
}

// ---- 2-4: SL(2) and SpO(2|1) decompositions ----------------------------------------------

std::string sl2_oracle(long k_max) {
    std::size_t factors = 0;
    for (i64 pv : kPrimes) {
        const Prime p(pv);
        const SimpleChar simple = [p](i64 q) { return ch_L_sl2(q, p); };
        for (i64 k = 0; k <= k_max; ++k) {
            const FactorMultiset f = decompose_sl2(k, p);
            const FactorMultiset o = peel(ch_H0_sl2(k), simple);
            check(f == o, [&] {
                return "p=" + std::to_string(pv) + " k=" + std::to_string(k) + ": " + show(f) + " vs " + show(o);
            });
            check(character_of(f, simple) == ch_H0_sl2(k),
                  [&] { return "character not conserved at k=" + std::to_string(k); });
            factors += f.size();
        }
    }
    return std::to_string(factors) + " factors, 0 mismatches";
}

std::string sl2_linkage(long k_max) {
    std::size_t pairs = 0;
    for (i64 pv : kPrimes) {
        const Prime p(pv);
        for (i64 k = 0; k <= k_max; ++k) {
            const FactorMultiset f = decompose_sl2(k, p);
            for (const auto& [l, mult] : f.entries()) {
                check(linked_sl2(l, k, p), [&] {
                    return "p=" + std::to_string(pv) + ": L(" + std::to_string(l) + ") in H0(" +
                           std::to_string(k) + ") violates the congruences";
                });
                ++pairs;
            }
        }
    }
    return std::to_string(pairs) + " factor pairs linked";
}

std::string spo_oracle(long l_max) {
    std::size_t factors = 0;
    for (i64 pv : kPrimes) {
        const Prime p(pv);
        const SimpleChar simple = [p](i64 q) { return ch_L_spo(q, p); };
        for (i64 l = 0; l <= l_max; ++l) {
            const FactorMultiset f = comp_factors_H0_spo(l, p);
            const FactorMultiset o = peel(ch_H0_spo(l), simple);
            check(f == o, [&] {
                return "p=" + std::to_string(pv) + " l=" + std::to_string(l) + ": " + show(f) + " vs " + show(o);
            });
            check(f.max_mult() == 1, [&] { return "repeated factor at l=" + std::to_string(l); });
            factors += f.size();
        }
    }
    return std::to_string(factors) + " factors, all multiplicity 1";
}

// ---- 5-6: Hom spaces and psi tables --------------------------------------------------------

std::string hom_criterion(long k_max) {
    std::size_t nonzero = 0;
    for (i64 pv : kPrimes) {
        const Prime p(pv);
        for (i64 k = 0; k <= k_max; ++k) {
            std::map<i64, HomDim> found;
            for (const auto& m : oracle::rad_quotient(k, p)) {
                HomDim& h = found[weight(m, k)];
                ++h.dim;
                if (m.eps) h.parity = Parity::ODD;
            }
            for (const auto& [l, h] : found)
                check(l >= 0, [&] { return "quotient weight " + std::to_string(l) + " is negative"; });
            for (i64 l = 0; l <= k + 1; ++l) {
                const HomDim closed = hom_dim(k, l, p);
                const HomDim brute = found.count(l) ? found.at(l) : HomDim{};
                check(closed == brute, [&] {
                    return "p=" + std::to_string(pv) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
                           ": closed " + std::to_string(closed.dim) + to_string(closed.parity) + ", oracle " +
                           std::to_string(brute.dim) + to_string(brute.parity);
                });
                check(closed.dim == 0 || (closed.parity == Parity::ODD) == (l != k),
                      [&] { return "parity rule fails at k=" + std::to_string(k); });
                nonzero += closed.dim;
            }
        }
    }
    return std::to_string(nonzero) + " nonzero Hom spaces agree";
}

std::string psi_criterion(long k_max) {
    std::size_t tables = 0, reindexed = 0;
    for (i64 pv : kPrimes) {
        const Prime p(pv);
        const SimpleChar simple = [p](i64 q) { return ch_L_spo(q, p); };
        for (i64 k = 1; k <= k_max; ++k) {
            for (i64 j = 0; 2 * j <= k - 1; ++j) {
                if (!admissible(k, j, p)) continue;
                const i64 l = k - 1 - 2 * j;
                const std::string at = "p=" + std::to_string(pv) + " k=" + std::to_string(k) + " j=" + std::to_string(j);
                const MorphismTable t = psi_table(k, j, p);
                const std::vector<BasisMonomial> ker = kernel_basis(k, j, p);
                std::set<BasisMonomial> zero, kset(ker.begin(), ker.end());
                for (const auto& row : t.rows)
                    if (row.coeff == 0) zero.insert(row.source);
                check(zero == kset, [&] { return at + ": zero rows differ from the kernel basis"; });
                const auto rn = oracle::rank_nullity(t, ker, p, false);
                check(rn.weights_preserved && rn.balanced, [&] { return at + ": rank-nullity fails"; });

                const LaurentPoly1 im_ch = oracle::image_character(t, false);
                const KerImCoker kic = ker_im_coker_factors(k, j, p);
                const FactorMultiset im = peel(im_ch, simple);
                const FactorMultiset kf = peel(ch_H0_spo(k) - im_ch, simple);
                const FactorMultiset cf = peel(ch_H0_spo(l) - im_ch, simple);
                check(im == kic.im, [&] { return at + ": image " + show(kic.im) + " vs oracle " + show(im); });
                check(kf == kic.ker, [&] { return at + ": kernel " + show(kic.ker) + " vs oracle " + show(kf); });
                check(cf == kic.coker, [&] { return at + ": cokernel " + show(kic.coker) + " vs oracle " + show(cf); });
                if (j > 0) {
                    const Digits dk = digits(k, p);
                    const std::size_t tpos = digits(j, p).size();
                    if (tpos < dk.size() && dk[tpos] != 0) {
                        const FactorMultiset alt = image_factors_reindexed(k, j, p);
                        check(alt == im, [&] { return at + ": reindexed image " + show(alt); });
                        ++reindexed;
                    }
                }
                ++tables;
            }
        }
    }
    return std::to_string(tables) + " tables, " + std::to_string(reindexed) + " reindexed images";
}

// ---- 7: G_rT ---------------------------------------------------------------------------

std::string grt_criterion() {
    std::size_t cases = 0;
    for (int r : {1, 2}) {
        for (i64 pv : {3, 5}) {
            const Prime p(pv);
            const i64 pr = ipow(p, r);
            const SimpleChar simple = [p, r](i64 q) { return ch_L_r(q, r, p); };
            for (i64 l = -2 * pr; l <= 4 * pr; ++l) {
                const std::string at = "r=" + std::to_string(r) + " p=" + std::to_string(pv) + " l=" + std::to_string(l);
                const FactorMultiset f = comp_factors_r(l, r, p);
                const FactorMultiset o = peel(ch_H0_r(l, r, p), simple);
                check(f == o, [&] { return at + ": " + show(f) + " vs " + show(o); });
                const LaurentPoly1 sum = character_of(f, simple);
                check(sum == ch_H0_r(l, r, p) && sum.total() == 2 * pr,
                      [&] { return at + ": dimension not conserved"; });
                for (i64 t = -2; t <= 2; ++t)
                    check(comp_factors_r(l + t * pr, r, p) == f.shifted(t * pr),
                          [&] { return at + ": shift by " + std::to_string(t) + "p^r"; });

                // psi_{r,k} with k = l
                const i64 k = l, target = 2 * pr - k - 1;
                const MorphismTable t = psi_r_table(k, r, p);
                const LaurentPoly1 im_ch = oracle::image_character(t, true);
                check(peel(im_ch, simple) == FactorMultiset{target},
                      [&] { return at + ": psi_r image is " + show(peel(im_ch, simple)); });
                std::vector<BasisMonomial> ker;
                for (const auto& row : t.rows)
                    if (row.coeff == 0) ker.push_back(row.source);
                const auto rn = oracle::rank_nullity(t, ker, p, true);
                check(rn.weights_preserved && rn.balanced, [&] { return at + ": psi_r not weight-preserving"; });
                const KerImCoker kic = psi_r_ker_im_coker(k, r, p);
                check(kic.im == FactorMultiset{target} &&
                          kic.coker == peel(ch_H0_r(target, r, p) - im_ch, simple) &&
                          kic.ker == peel(ch_H0_r(target, r, p) - im_ch, simple),
                      [&] { return at + ": psi_r kernel/cokernel"; });
                const auto quot = oracle::rad_quotient_r(k, r, p);
                for (i64 l2 = -2 * pr; l2 <= 4 * pr; ++l2) {
                    int dim = 0;
                    for (const auto& m : quot) dim += weight_r(m, k) == l2 ? 1 : 0;
                    check(hom_r(k, l2, r, p) == dim,
                          [&] { return at + ": Hom criterion at l=" + std::to_string(l2); });
                }
                check(quot.size() == 1, [&] { return at + ": head is not simple"; });
                ++cases;
            }
        }
    }
    return std::to_string(cases) + " weights, factors/shift/psi_r agree";
}

// ---- 8: blocks -------------------------------------------------------------------------

void check_blocks(const std::vector<std::vector<i64>>& comps, Prime p, const std::string& at) {
    check(static_cast<i64>(comps.size()) == p, [&] {
        return at + ": " + std::to_string(comps.size()) + " classes, expected " + std::to_string(p.value());
    });
    std::set<int> labels;
    for (const auto& c : comps) {
        const int a = block_of(c.front(), p);
        for (i64 l : c)
            check(block_of(l, p) == a, [&] { return at + ": class mixes blocks at " + std::to_string(l); });
        labels.insert(a);
    }
    check(static_cast<i64>(labels.size()) == p, [&] { return at + ": classes share a block label"; });
}

std::string blocks_criterion() {
    for (i64 pv : kPrimes) {
        const Prime p(pv);
        const i64 p2 = pv * pv;
        check_blocks(oracle::shared_factor_components(0, 4 * p2, [p](i64 q) { return comp_factors_H0_spo(q, p); }),
                     p, "SpO(2|1) p=" + std::to_string(pv));
        for (int r : {1, 2})
            check_blocks(oracle::shared_factor_components(
                             -2 * p2, 2 * p2, [p, r](i64 q) { return comp_factors_r(q, r, p); }),
                         p, "G_rT r=" + std::to_string(r) + " p=" + std::to_string(pv));
    }
    return "p classes matching B_a for p = 3, 5, 7";
}

// ---- 9-10: root data ----------------------------------------------------------------------

std::vector<Flag> all_flags(const GroupShape& shape) {
    std::vector<Label> labels = Flag::standard(shape).entries;
    std::vector<std::size_t> perm(labels.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::vector<Flag> out;
    do {
        for (unsigned mask = 0; mask < (1u << labels.size()); ++mask) {
            Flag f;
            for (std::size_t i = 0; i < perm.size(); ++i) {
                Label a = labels[perm[i]];
                if (mask & (1u << i)) a = a.negated();
                f.entries.push_back(a);
            }
            out.push_back(std::move(f));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<Root> negated(const std::vector<Root>& rs, const GroupShape& shape) {
    std::vector<Root> out;
    for (const Root& r : rs) out.push_back(make_root(-r.vec, shape));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Root> minus(const std::vector<Root>& a, const std::vector<Root>& b) {
    std::vector<Root> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string rootdata_criterion() {
    std::size_t flags = 0, moves = 0;
    for (int n = 0; n <= 4; ++n) {
        for (int m = 0; n + m <= 4; ++m) {
            if (n + m == 0) continue;
            for (ParityType type : {ParityType::ODD, ParityType::EVEN}) {
                const GroupShape shape{n, m, type};
                const bool odd = type == ParityType::ODD;
                const std::string at = shape.name();
                const auto all = roots(shape);
                std::size_t n0 = 0, n1 = 0;
                for (const Root& r : all) (r.parity == Parity::EVEN ? n0 : n1) += 1;
                const std::size_t e0 = odd ? 2 * n * n + 2 * m * m : 2 * n * n + 2 * m * (m - 1);
                const std::size_t e1 = odd ? 4 * n * m + 2 * n : 4 * n * m;
                check(n0 == e0 && n1 == e1, [&] { return at + ": root counts " + std::to_string(n0) + "/" + std::to_string(n1); });

                for (const Flag& f : all_flags(shape)) {
                    const auto pos = phi_plus(f, shape);
                    check(pos.size() * 2 == all.size(), [&] { return at + " " + f.str() + ": |Phi+| wrong"; });
                    check(pos == oracle::phi_plus(f, shape), [&] { return at + " " + f.str() + ": Phi+ differs from oracle"; });
                    check(minus(pos, negated(pos, shape)).size() == pos.size(),
                          [&] { return at + " " + f.str() + ": Phi+ meets -Phi+"; });
                    check(phi_plus(f.negated(), shape) == negated(pos, shape),
                          [&] { return at + " " + f.str() + ": Phi+(-F) != -Phi+(F)"; });
                    std::vector<AdjMove> cand;
                    for (int s = 1; s < n + m; ++s) cand.push_back({MoveType::TRANSPOSE, s});
                    if (!f.entries.back().orthogonal) cand.push_back({MoveType::FLIP_SYMPLECTIC, 0});
                    else if (odd) cand.push_back({MoveType::FLIP_ORTHOGONAL, 0});
                    for (const AdjMove& mv : cand) {
                        const MoveResult res = apply_move(f, mv, shape);
                        const auto after = phi_plus(res.flag, shape);
                        check(minus(pos, after) == res.removed && minus(after, pos) == res.added, [&] {
                            return at + " " + f.str() + " " + mv.str() + ": declared delta differs";
                        });
                        const std::size_t expect = mv.type == MoveType::FLIP_SYMPLECTIC && odd ? 2 : 1;
                        check(res.removed.size() == expect, [&] { return at + ": delta size"; });
                        ++moves;
                    }
                    ++flags;
                }

                const Chain chain = chain_of_borels(shape);
                const std::size_t expect = odd ? (m + n) * (m + n) : (m + n) * (m + n) - m;
                check(chain.steps.size() == expect,
                      [&] { return at + ": chain has " + std::to_string(chain.steps.size()) + " moves"; });
                check(chain.start == Flag::standard(shape) && chain.end == Flag::standard(shape).negated(),
                      [&] { return at + ": chain endpoints"; });
                Flag prev = chain.start;
                for (const ChainStep& st : chain.steps) {
                    check(phi_plus(st.from, shape) == phi_plus(prev, shape), [&] { return at + ": chain gap"; });
                    check(apply_move(st.from, st.move, shape).flag == st.to, [&] { return at + ": chain step"; });
                    prev = st.to;
                }
                check(phi_plus(prev, shape) == phi_plus(chain.end, shape), [&] { return at + ": chain end"; });

                // pairing values
                const RhoParts std_rho = rho_parts(Flag::standard(shape), shape);
                for (int j = 1; j <= n; ++j) {
                    const WeightVec dj = WeightVec::unit(shape.rank(), static_cast<std::size_t>(j - 1));
                    check(pairing(std_rho.rho0, dj, shape) == HalfInt::of(n - j + 1),
                          [&] { return at + ": (rho0, delta_j)"; });
                    check(pairing(std_rho.rho1, dj, shape) == HalfInt{2 * m + (odd ? 1 : 0)},
                          [&] { return at + ": (rho1, delta_j)"; });
                }
                const Prime p3(3);
                for (const ChainStep& st : chain.steps) {
                    if (st.move.type != MoveType::FLIP_SYMPLECTIC) continue;
                    const Label last = st.from.entries.back();
                    const WeightVec alpha = label_weight(last, shape);
                    const RhoParts rp = rho_parts(st.from, shape);
                    check(pairing(rp.rho0, alpha, shape) == HalfInt::of(1), [&] { return at + ": (rho0(F), alpha)"; });
                    check(pairing(rp.rho1, alpha, shape) == HalfInt{odd ? 1 : 0}, [&] { return at + ": (rho1(F), alpha)"; });
                    if (!odd) continue;
                    const WeightVec lambda = WeightVec::integral(std::vector<i64>(shape.rank(), 2));
                    const WeightVec lb = lambda_bracket(lambda, st.from, shape, 1, p3);
                    const HalfInt lhs = pairing(lb, alpha, shape);
                    const HalfInt rhs{pairing(lambda + std_rho.rho, alpha, shape).twice -
                                      2 * 3 * (n - last.index) - 1};
                    check(lhs == rhs, [&] { return at + ": (lambda<F>, alpha) identity"; });
                }
            }
        }
    }
    return std::to_string(flags) + " flags, " + std::to_string(moves) + " moves checked";
}

std::string flag_independence_criterion() {
    const Prime p(3);
    std::size_t compared = 0;
    for (ParityType type : {ParityType::ODD, ParityType::EVEN}) {
        const GroupShape shape{1, 1, type};
        const auto flags = chain_of_borels(shape).flags();
        for (i64 a = 0; a < 3; ++a) {
            for (i64 b = 0; b < 3; ++b) {
                const WeightVec lambda = WeightVec::integral({a, b});
                const LaurentPolyN ref = ch_Zr_flag(lambda, flags.front(), shape, 1, p);
                for (const Flag& f : flags) {
                    const WeightVec lb = lambda_bracket(lambda, f, shape, 1, p);
                    check(ch_Zr_flag(lb, f, shape, 1, p) == ref,
                          [&] { return shape.name() + " " + f.str() + " lambda=" + lambda.str() + ": characters differ"; });
                    ++compared;
                }
            }
        }
    }
    return std::to_string(compared) + " characters equal";
}

// ---- 11: linkage ----------------------------------------------------------------------------

std::string linkage_criterion() {
    for (i64 pv : kPrimes) {
        const Prime p(pv);
        const GroupShape rank1{1, 0, ParityType::ODD};
        const Box box{{0}, {4 * pv * pv}};
        const auto graph = build_graph(box, rank1, {1, 2}, p);
        std::vector<std::vector<i64>> comps;
        for (const auto& c : components(graph)) {
            std::vector<i64> ls;
            for (const WeightVec& w : c) ls.push_back(w.coords()[0]);
            comps.push_back(std::move(ls));
        }
        check_blocks(comps, p, "linkage graph p=" + std::to_string(pv));
        for (const auto& e : graph.edges) {
            const WeightVec diff = e.source - e.target;
            bool downward = false;
            for (const Root& r : phi_plus(Flag::standard(rank1), rank1)) {
                const i64 c = diff.doubled()[0] / r.vec.doubled()[0];
                if (c > 0 && c * r.vec.doubled()[0] == diff.doubled()[0]) downward = true;
            }
            check(downward, [&] { return "move " + e.source.str() + " -> " + e.target.str() + " is not downward"; });
        }
    }
    // Non-isotropic moves reproduce the G_rT factors of the residue.
    for (const GroupShape& shape : {GroupShape{1, 0, ParityType::ODD}, GroupShape{1, 1, ParityType::ODD},
                                    GroupShape{2, 1, ParityType::ODD}}) {
        for (i64 pv : {3, 5}) {
            const Prime p(pv);
            const WeightVec rho = super_rho(shape);
            for (int r : {1, 2}) {
                const i64 pr = ipow(p, r);
                // first coordinate over [-p^r, 2p^r], the others over [-1, 2]
                std::vector<i64> lo(shape.rank(), 0), hi(shape.rank(), 2);
                lo[0] = -pr;
                hi[0] = 2 * pr;
                for (std::size_t c = 1; c < lo.size(); ++c) lo[c] = -1;
                for (const WeightVec& lambda : Box{lo, hi}.points()) {
                    for (int i = 0; i < shape.n; ++i) {
                        const i64 d = (lambda + rho).doubled()[static_cast<std::size_t>(i)];
                        const i64 l = mod_floor((d - 1) / 2, pr);
                        std::set<i64> got;
                        for (const auto& mv : moves_noniso_odd(lambda, shape, r, p)) {
                            const WeightVec diff = mv.source - mv.target;
                            if (diff.doubled()[static_cast<std::size_t>(i)] == 0) continue;
                            got.insert(l - diff.doubled()[static_cast<std::size_t>(i)] / 2);
                        }
                        std::set<i64> want;
                        const FactorMultiset f = comp_factors_r(l, r, p);
                        for (const auto& [w, mult] : f.entries())
                            if (w != l) want.insert(w);
                        check(got == want, [&] {
                            return shape.name() + " lambda=" + lambda.str() + ": non-isotropic targets differ";
                        });
                    }
                }
            }
        }
    }
    return "rank-1 components match B_a; non-isotropic targets match G_rT factors";
}

using Runner = std::function<std::string(const VerifyOptions&)>;

struct Criterion {
    const char* name;
    Runner run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {"word table", [](const VerifyOptions&) { return word_table(); }},
        {"SL(2) oracle equivalence", [](const VerifyOptions& o) { return sl2_oracle(o.sl2_k_max); }},
        {"SL(2) linkage consistency", [](const VerifyOptions& o) { return sl2_linkage(o.sl2_k_max); }},
        {"SpO(2|1) oracle equivalence", [](const VerifyOptions& o) { return spo_oracle(o.spo_l_max); }},
        {"Hom criterion", [](const VerifyOptions& o) { return hom_criterion(o.hom_k_max); }},
        {"psi tables", [](const VerifyOptions& o) { return psi_criterion(o.psi_k_max); }},
        {"G_rT factors and psi_r", [](const VerifyOptions&) { return grt_criterion(); }},
        {"blocks", [](const VerifyOptions&) { return blocks_criterion(); }},
        {"root data", [](const VerifyOptions&) { return rootdata_criterion(); }},
        {"flag independence", [](const VerifyOptions&) { return flag_independence_criterion(); }},
        {"linkage rank-1 consistency", [](const VerifyOptions&) { return linkage_criterion(); }},
    };
    return list;
}

}  // namespace

CriterionResult verify_criterion(int id, const VerifyOptions& opts) {
    if (id < 1 || id > kCriterionCount) throw std::invalid_argument("no criterion " + std::to_string(id));
    const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
    CriterionResult res{id, c.name, false, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        res.detail = c.run(opts);
        res.pass = true;
    } catch (const std::exception& e) {
        res.detail = e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<CriterionResult> verify_all(const VerifyOptions& opts) {
    std::vector<CriterionResult> out;
    if (!opts.parallel) {
        for (int id = 1; id <= kCriterionCount; ++id) out.push_back(verify_criterion(id, opts));
        return out;
    }
    std::vector<std::future<CriterionResult>> jobs;
    for (int id = 1; id <= kCriterionCount; ++id)
        jobs.push_back(std::async(std::launch::async, [id, &opts] { return verify_criterion(id, opts); }));
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace ospl
