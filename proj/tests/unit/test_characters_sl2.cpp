#include <doctest.h>

#include "ospl/characters.hpp"
#include "ospl/sl2.hpp"
#include "ospl/weight.hpp"
#include "reference.hpp"

using namespace ospl;

namespace {

LaurentPoly1 poly(std::initializer_list<std::pair<ref::i64, ref::i64>> terms) {
    LaurentPoly1 ch;
    for (const auto& [w, c] : terms) ch.add(w, c);
    return ch;
}

}  // namespace

TEST_SUITE("characters") {
    TEST_CASE("Laurent arithmetic") {
        LaurentPoly1 a = poly({{1, 2}, {-1, 1}});
        LaurentPoly1 b = poly({{1, 2}});
        CHECK((a - b) == poly({{-1, 1}}));
        CHECK((a - a).empty());
        CHECK(a.total() == 3);
        CHECK(a.top() == 1);
        CHECK_THROWS(LaurentPoly1{}.top());
        CHECK_FALSE((b - a).nonnegative());
    }

    TEST_CASE("sl2 characters") {
        CHECK(ch_H0_sl2(3) == poly({{3, 1}, {1, 1}, {-1, 1}, {-3, 1}}));
        CHECK(ch_L_sl2(3, Prime(3)) == poly({{3, 1}, {-3, 1}}));
        for (ref::i64 k = 0; k < 5; ++k) CHECK(ch_L_sl2(k, Prime(5)) == ch_H0_sl2(k));
    }

    TEST_CASE("spo characters") {
        CHECK(ch_H0_spo(3).size() == 7);
        CHECK(ch_H0_spo(3).total() == 7);
        CHECK(ch_L_spo(3, Prime(3)) == poly({{3, 1}, {-3, 1}}));
        CHECK(ch_L_spo(2, Prime(3)).size() == 5);
        for (ref::i64 l = 0; l <= 60; ++l) CHECK(ch_H0_spo(l).total() == 2 * l + 1);
    }

    TEST_CASE("peel") {
        const SimpleChar L3 = [](ref::i64 l) { return ch_L_spo(l, Prime(3)); };
        CHECK(peel(ch_H0_spo(3), L3) == FactorMultiset{3, 2});
        for (ref::i64 l = 0; l <= 80; ++l) {
            const FactorMultiset f = peel(ch_H0_spo(l), L3);
            REQUIRE(character_of(f, L3) == ch_H0_spo(l));
        }
        CHECK_THROWS_AS(peel(poly({{1, 1}}), L3), PeelError);
    }

    TEST_CASE("truncation") {
        LaurentPoly1 expect;
        for (ref::i64 w = 0; w <= 5; ++w) expect.add(w, 1);
        CHECK(ch_truncate(ch_H0_spo(5), 5, 1, Prime(3), Side::MINUS) == expect);
        CHECK(ch_truncate(ch_L_spo(3, Prime(3)), 3, 1, Prime(3), Side::MINUS) == poly({{3, 1}}));
    }

    TEST_CASE("factor multisets") {
        FactorMultiset f{5, 3, 3};
        CHECK(f.mult(3) == 2);
        CHECK(f.max_mult() == 2);
        CHECK(f.weights_desc() == std::vector<ref::i64>{5, 3});
        CHECK(f.shifted(1) == FactorMultiset{6, 4, 4});
        CHECK((f - FactorMultiset{3}) == FactorMultiset{5, 3});
    }

    TEST_CASE("product character total") {
        // rank-2 example: one even and two odd positive roots
        const WeightVec lambda = WeightVec::integral({1, 0});
        const std::vector<WeightVec> even{WeightVec::integral({2, 0})};
        const std::vector<WeightVec> odd{WeightVec::integral({1, 1}), WeightVec::integral({1, -1})};
        const LaurentPolyN ch = ch_product_Zr(lambda, even, odd, 1, Prime(3));
        CHECK(ch.total() == 3 * 2 * 2);
    }

    TEST_CASE("half integers") {
        const WeightVec w = WeightVec::from_doubled({1, -2});
        CHECK_FALSE(w.is_integral());
        CHECK(w[0].str() == "1/2");
        CHECK(w[1].value() == -1);
        CHECK((2 * w).is_integral());
        CHECK(WeightVec::from_doubled({2, -2}).halved().doubled() == std::vector<ref::i64>{1, -1});
        CHECK_THROWS(w.halved());
    }
}

TEST_SUITE("sl2") {
    TEST_CASE("examples") {
        CHECK(decompose_sl2(3, Prime(3)) == FactorMultiset{3, 1});
        CHECK(decompose_sl2(2, Prime(3)) == FactorMultiset{2});
        CHECK(linked_sl2(1, 3, Prime(3)));
        CHECK_FALSE(linked_sl2(0, 2, Prime(3)));
    }

    TEST_CASE("decomposition reproduces the character") {
        for (int p : {3, 5, 7}) {
            const SimpleChar L = [p](ref::i64 l) { return ch_L_sl2(l, Prime(p)); };
            for (ref::i64 k = 0; k <= 300; ++k) {
                const FactorMultiset f = decompose_sl2(k, Prime(p));
                REQUIRE(character_of(f, L) == ch_H0_sl2(k));
                REQUIRE(f.max_mult() == 1);
                REQUIRE(f.mult(k) == 1);
                for (const auto& [l, mult] : f.entries()) REQUIRE(linked_sl2(l, k, Prime(p)));
            }
        }
    }

    TEST_CASE("restricted weights are simple") {
        for (ref::i64 k = 0; k < 7; ++k) CHECK(decompose_sl2(k, Prime(7)) == FactorMultiset{k});
    }
}
