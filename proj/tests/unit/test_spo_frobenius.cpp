#include <doctest.h>

#include <algorithm>

#include "ospl/frobenius.hpp"
#include "ospl/oracles.hpp"
#include "ospl/spo21.hpp"
#include "reference.hpp"

using namespace ospl;

namespace {

VectorExpr apply_table(const MorphismTable& t, const VectorExpr& v, int p) {
    VectorExpr out;
    for (const auto& [m, c] : v)
        for (const auto& [target, d] : t.apply(m)) {
            int& slot = out[target];
            slot = static_cast<int>((slot + c * d) % p);
            if (slot == 0) out.erase(target);
        }
    return out;
}

bool contains(const std::vector<BasisMonomial>& xs, const BasisMonomial& m) {
    return std::find(xs.begin(), xs.end(), m) != xs.end();
}

}  // namespace

TEST_SUITE("spo21") {
    TEST_CASE("bases and weights") {
        CHECK(basis_H0(3, Side::PLUS).size() == 7);
        const std::vector<BasisMonomial> socle{{Side::MINUS, 0, 0}, {Side::MINUS, 3, 0}};
        CHECK(socle_basis(3, Prime(3), Side::MINUS) == socle);
        CHECK(weight({Side::MINUS, 1, 1}, 5) == 2);
        CHECK(parity({Side::PLUS, 0, 1}) == Parity::ODD);
        CHECK_THROWS_AS(basis_H0(-1, Side::MINUS), std::invalid_argument);
    }

    TEST_CASE("distribution algebra action") {
        const VectorExpr v{{{Side::PLUS, 1, 1}, 1}};
        const VectorExpr expect{{{Side::PLUS, 2, 0}, 1}};
        CHECK(act(DistOp::Y, 0, v, 3, Prime(3)) == expect);
        CHECK_THROWS_AS(act(DistOp::F, 0, v, 3, Prime(3)), std::invalid_argument);
    }

    TEST_CASE("hom dimensions") {
        CHECK(hom_dim(3, 2, Prime(3)) == HomDim{1, Parity::ODD});
        CHECK(hom_dim(3, 0, Prime(3)).dim == 0);
        CHECK(hom_dim(4, 4, Prime(3)) == HomDim{1, Parity::EVEN});
    }

    TEST_CASE("hom dimension agrees with the radical quotient") {
        for (int p : {3, 5})
            for (ref::i64 k = 0; k <= 60; ++k)
                for (ref::i64 l = 0; l <= k + 1; ++l) REQUIRE(hom_dim(k, l, Prime(p)) == oracle::hom_dim(k, l, Prime(p)));
    }

    TEST_CASE("psi table example") {
        const MorphismTable t = psi_table(3, 0, Prime(3));
        CHECK(t.target_degree == 2);
        for (const auto& row : t.rows) {
            if (row.source.eps != 0) continue;
            const int expect = row.source.i == 1 ? 1 : row.source.i == 2 ? 2 : 0;
            CHECK(row.coeff == expect);
        }
        const std::vector<BasisMonomial> ker{{Side::PLUS, 0, 0}, {Side::PLUS, 3, 0}};
        CHECK(kernel_basis(3, 0, Prime(3)) == ker);
        CHECK_THROWS_AS(psi_table(3, 1, Prime(3)), std::invalid_argument);
    }

    TEST_CASE("psi commutes with divided powers of e on odd monomials") {
        for (int p : {3, 5}) {
            for (ref::i64 k = 1; k <= 80; ++k) {
                for (ref::i64 j = 0; 2 * j <= k - 1; ++j) {
                    if (!admissible(k, j, Prime(p))) continue;
                    const MorphismTable t = psi_table(k, j, Prime(p));
                    for (ref::i64 i = 0; i < k; ++i)
                        for (ref::i64 s = 1; s <= i; ++s) {
                            const VectorExpr v{{{Side::PLUS, i, 1}, 1}};
                            const VectorExpr lhs = apply_table(t, act(DistOp::E, s, v, k, Prime(p)), p);
                            const VectorExpr rhs = act(DistOp::E, s, apply_table(t, v, p), t.target_degree, Prime(p));
                            REQUIRE(lhs == rhs);
                        }
                }
            }
        }
    }

    TEST_CASE("kernel monomials map to zero") {
        for (ref::i64 k = 1; k <= 60; ++k)
            for (ref::i64 j = 0; 2 * j <= k - 1; ++j) {
                if (!admissible(k, j, Prime(3))) continue;
                const MorphismTable t = psi_table(k, j, Prime(3));
                const auto ker = kernel_basis(k, j, Prime(3));
                for (const auto& row : t.rows) REQUIRE((row.coeff == 0) == contains(ker, row.source));
            }
    }

    TEST_CASE("composition factors and blocks") {
        CHECK(comp_factors_H0_spo(3, Prime(3)) == FactorMultiset{3, 2});
        CHECK(comp_factors_H0_spo(5, Prime(3)) == FactorMultiset{5, 0});
        CHECK(comp_factors_H0_spo(0, Prime(3)) == FactorMultiset{0});
        CHECK(block_of(3, Prime(3)) == 2);
        for (int p : {3, 5, 7}) CHECK(block_of(2 * p - 1, Prime(p)) == 0);
        for (int p : {3, 5})
            for (ref::i64 l = 0; l <= 400; ++l) {
                const FactorMultiset f = comp_factors_H0_spo(l, Prime(p));
                REQUIRE(f.mult(l) == 1);
                for (const auto& [w, mult] : f.entries()) {
                    REQUIRE(w <= l);
                    REQUIRE(block_of(w, Prime(p)) == block_of(l, Prime(p)));
                }
            }
    }

    TEST_CASE("ker, image and cokernel factors") {
        const KerImCoker kic = ker_im_coker_factors(3, 0, Prime(3));
        CHECK(kic.ker == FactorMultiset{3});
        CHECK(kic.im == FactorMultiset{2});
    }
}

TEST_SUITE("frobenius") {
    TEST_CASE("examples") {
        const std::vector<BasisMonomial> socle{{Side::MINUS, 0, 0}};
        CHECK(socle_basis_r(3, 1, Prime(3), Side::MINUS) == socle);
        CHECK(hom_r(4, 1, 1, Prime(3)) == 1);
        CHECK(hom_r(4, 2, 1, Prime(3)) == 0);
        CHECK(comp_factors_r(3, 1, Prime(3)) == FactorMultiset{3, 2});
        CHECK(block_of_r(-1, Prime(3)) == 0);
    }

    TEST_CASE("bases have 2p^r elements") {
        for (int r : {1, 2})
            for (ref::i64 l = -20; l <= 20; ++l) CHECK(basis_H0_r(l, r, Prime(3), Side::MINUS).size() == 2 * ipow(3, r));
    }

    TEST_CASE("hom closed form agrees with the radical quotient") {
        for (int p : {3, 5})
            for (int r : {1, 2}) {
                const ref::i64 pr = ipow(p, r);
                for (ref::i64 k = -pr; k <= 3 * pr; k += (r == 2 ? 3 : 1))
                    for (ref::i64 l = -2 * pr; l <= 3 * pr; ++l)
                        REQUIRE(hom_r(k, l, r, Prime(p)) == oracle::hom_r(k, l, r, Prime(p)));
            }
    }

    TEST_CASE("psi_r normalization") {
        // the rad-quotient monomial x_{11}^{2} at k = 3, p = 3 maps with coefficient 1
        const MorphismTable t = psi_r_table(3, 1, Prime(3));
        const VectorExpr image = t.apply({Side::PLUS, 2, 1});
        const VectorExpr expect{{{Side::MINUS, 0, 0}, 1}};
        CHECK(image == expect);
    }

    TEST_CASE("composition factors are shift equivariant") {
        for (int p : {3, 5})
            for (int r : {1, 2}) {
                const ref::i64 pr = ipow(p, r);
                for (ref::i64 l = -2 * pr; l <= 2 * pr; ++l)
                    for (ref::i64 t = -2; t <= 2; ++t)
                        REQUIRE(comp_factors_r(l + t * pr, r, Prime(p)) == comp_factors_r(l, r, Prime(p)).shifted(t * pr));
            }
    }

    TEST_CASE("composition factors reproduce the character") {
        for (int p : {3, 5})
            for (int r : {1, 2}) {
                const SimpleChar L = [p, r](ref::i64 l) { return ch_L_r(l, r, Prime(p)); };
                const ref::i64 pr = ipow(p, r);
                for (ref::i64 l = pr; l < 2 * pr; ++l)
                    REQUIRE(peel(ch_H0_r(l, r, Prime(p)), L) == comp_factors_r(l, r, Prime(p)));
            }
    }
}
