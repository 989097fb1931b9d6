#include <doctest.h>

#include <algorithm>
#include <set>

#include "ospl/padic.hpp"
#include "ospl/words.hpp"
#include "reference.hpp"

using namespace ospl;

TEST_SUITE("padic") {
    TEST_CASE("digits") {
        CHECK(digits(4, Prime(3)) == Digits{1, 1});
        CHECK(digits(0, Prime(5)).empty());
        CHECK(digits(242, Prime(3)) == Digits{2, 2, 2, 2, 2});
        CHECK(top_position(242, Prime(3)) == 4);
    }

    TEST_CASE("carries and valuations") {
        CHECK(carries(1, 2, Prime(3)) == 1);
        CHECK(carries(4, 4, Prime(3)) == 0);
        for (int p : {3, 5, 7})
            for (ref::i64 a = 0; a <= 2000; ++a)
                for (ref::i64 b = 0; a + b <= 2000; ++b)
                    REQUIRE(carries(a, b, Prime(p)) == ref::binom_valuation(a + b, a, p));
    }

    TEST_CASE("binomials mod p against Pascal") {
        CHECK(binom_mod(3, 1, Prime(3)) == 0);
        CHECK(binom_mod(7, 2, Prime(3)) == 0);
        CHECK(binom_mod(2, 5, Prime(3)) == 0);
        for (int p : {3, 5, 7, 11}) {
            const auto table = ref::pascal_mod(400, p);
            for (int n = 0; n <= 400; ++n)
                for (int k = 0; k <= n; ++k) REQUIRE(binom_mod(n, k, Prime(p)) == table[n][k]);
        }
    }

    TEST_CASE("a_val and defect") {
        CHECK(a_val(6, Prime(3)) == 1);
        CHECK(a_val(7, Prime(3)) == 0);
        CHECK(a_val(0, Prime(5)) == kInfinity);
        CHECK(defect(8, Prime(3)) == 2);
        CHECK(defect(3, Prime(3)) == 0);
        for (int p : {3, 5, 7}) {
            CHECK(defect(p - 1, Prime(p)) == 1);
            for (ref::i64 l = 1; l <= 2000; ++l) REQUIRE(a_val(l, Prime(p)) == ref::valuation(l, p));
        }
    }

    TEST_CASE("all_divisible") {
        CHECK_FALSE(all_divisible(9, 2, Prime(3)));
        CHECK_FALSE(all_divisible(9, 1, Prime(3)));
        CHECK(all_divisible(9, 0, Prime(3)));
        const auto table = ref::pascal_mod(400, 5);
        for (int k = 1; k <= 200; ++k)
            for (int j = 0; j < k; ++j) {
                bool expect = true;
                for (int t = 1; t <= j; ++t) expect = expect && table[k - j + t - 1][t] == 0;
                REQUIRE(all_divisible(k, j, Prime(5)) == expect);
            }
        for (int p : {3, 5, 7})
            for (ref::i64 k = 2; k <= 1000; ++k)
                for (ref::i64 j = 1; j < k; ++j)
                    REQUIRE(all_divisible(k, j, Prime(p)) == below_power(j, Prime(p), a_val(k - j, Prime(p))));
    }

    TEST_CASE("integer helpers") {
        CHECK(ipow(3, 4) == 81);
        CHECK(floor_div(-7, 3) == -3);
        CHECK(mod_floor(-7, 3) == 2);
        CHECK((inverse_mod(3, Prime(7)) * 3) % 7 == 1);
        CHECK_THROWS_AS(Prime(4), std::invalid_argument);
        CHECK_THROWS_AS(Prime(2), std::invalid_argument);
    }
}

TEST_SUITE("words") {
    TEST_CASE("build_words small cases") {
        const auto w1 = build_words(1, 4);
        REQUIRE(w1.size() == 2);
        CHECK(w1[0].word == Word::parse("<≤≤≤≤"));
        CHECK(w1[1].word == Word::parse("≥<≤≤≤"));
        const auto w0 = build_words(0, 0);
        REQUIRE(w0.size() == 1);
        CHECK(w0[0].word == Word::parse("<"));
        CHECK(w0[0].generation == -1);
    }

    TEST_CASE("word count doubles per generation") {
        for (int s = 0; s <= 6; ++s) CHECK(build_words(s, 6).size() == (std::size_t{1} << s));
    }

    TEST_CASE("independent u=4 table") {
        // Generation-by-generation rewrite: W_j replaces positions j, j+1 of each earlier word.
        std::vector<std::string> expect{"<≤≤≤≤", "≥<≤≤≤"};
        const auto w = build_words(4, 4);
        REQUIRE(w.size() == 16);
        for (std::size_t i = 0; i < expect.size(); ++i) CHECK(w[i].word.str() == expect[i]);
        std::set<std::string> distinct;
        for (const auto& g : w) distinct.insert(g.word.str());
        CHECK(distinct.size() == 16);
        for (const auto& g : w) CHECK(g.word.size() == 5);
    }

    TEST_CASE("parse and render") {
        CHECK(Word::parse("<=>=<>").str() == "≤≥<>");
        CHECK_THROWS_AS(Word::parse("x"), std::invalid_argument);
    }

    TEST_CASE("ell, S and kind") {
        CHECK(ell(3, Word::parse("≥<"), Prime(3)) == 1);
        CHECK(s_set(3, Word::parse("<≤"), Prime(3)) == std::vector<ref::i64>{0, 3});
        CHECK(s_set(3, Word::parse("≥<"), Prime(3)) == std::vector<ref::i64>{1, 2});
        CHECK(kind(Word::parse("<><≤≤"), 1) == Kind::SECOND);
    }

    TEST_CASE("prune") {
        const auto s3 = prune(build_words(1, 1), 3, Prime(3));
        REQUIRE(s3.size() == 2);
        CHECK(s3[0].entry.word.str() == "<≤");
        CHECK(s3[0].weight == 3);
        CHECK(s3[1].entry.word.str() == "≥<");
        CHECK(s3[1].weight == 1);
        const auto s2 = prune(build_words(1, 1), 2, Prime(3));
        REQUIRE(s2.size() == 1);
        CHECK(s2[0].entry.word.str() == "≥<");
        CHECK(s2[0].weight == 2);
    }

    TEST_CASE("S-sets partition [0,k] when no digit is 0 or p-1") {
        for (int p : {5, 7}) {
            for (ref::i64 k = 1; k <= 400; ++k) {
                const Digits d = digits(k, Prime(p));
                if (std::any_of(d.begin(), d.end(), [&](int x) { return x == 0 || x == p - 1; })) continue;
                std::vector<ref::i64> all;
                for (const auto& ww : surviving_words(k, Prime(p))) {
                    const auto s = s_set(k, ww.entry.word, Prime(p));
                    all.insert(all.end(), s.begin(), s.end());
                }
                std::sort(all.begin(), all.end());
                REQUIRE(all.size() == static_cast<std::size_t>(k + 1));
                for (ref::i64 j = 0; j <= k; ++j) REQUIRE(all[static_cast<std::size_t>(j)] == j);
            }
        }
    }

    TEST_CASE("surviving weights are nonnegative and distinct") {
        for (ref::i64 k = 0; k <= 500; ++k) {
            std::set<ref::i64> seen;
            for (const auto& ww : surviving_words(k, Prime(3))) {
                REQUIRE(ww.weight >= 0);
                REQUIRE(ww.weight <= k);
                REQUIRE(seen.insert(ww.weight).second);
            }
        }
    }
}
