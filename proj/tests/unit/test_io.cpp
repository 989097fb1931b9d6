#include <doctest.h>

#include <sstream>

#include "io.hpp"

using namespace ospl;

TEST_SUITE("io") {
    TEST_CASE("factor multiset round trip") {
        const FactorMultiset f{7, 3, 3, 0};
        const io::json j = io::to_json(f);
        CHECK(j.dump() == R"({"factors":[{"hw":7,"mult":1},{"hw":3,"mult":2},{"hw":0,"mult":1}]})");
        CHECK(io::factors_from_json(io::json::parse(j.dump())) == f);
    }

    TEST_CASE("character round trips") {
        const LaurentPoly1 ch = ch_H0_spo(4);
        CHECK(io::poly1_from_json(io::to_json(ch)) == ch);
        LaurentPolyN n;
        n.add({1, -2}, 3);
        n.add({0, 0}, 1);
        const io::json j = io::to_json(n);
        CHECK(j["terms"][0]["weight"] == io::json::array({1, -2}));
        CHECK(io::polyN_from_json(j) == n);
    }

    TEST_CASE("weights print halves") {
        const WeightVec w = WeightVec::from_doubled({-1, 4});
        CHECK(io::to_json(w).dump() == "[-0.5,2]");
        CHECK(io::weight_from_json(io::to_json(w)) == w);
        CHECK_THROWS_AS(io::weight_from_json(io::json::array({0.25})), std::invalid_argument);
    }

    TEST_CASE("flag round trip") {
        const Flag f = Flag::parse("<1bar,-1,2>");
        CHECK(io::to_json(f).dump() == R"(["1bar","-1","2"])");
        CHECK(io::flag_from_json(io::to_json(f)) == f);
    }

    TEST_CASE("chain and graph objects") {
        const GroupShape s{1, 1, ParityType::ODD};
        const io::json c = io::to_json(chain_of_borels(s));
        CHECK(c["flags"].size() == 5);
        CHECK(c["chain"].size() == 4);
        CHECK(c["chain"][0]["move"] == "TRANSPOSE(1)");
        const io::json g = io::to_json(build_graph(Box::parse("0:3,0:3"), s, {1}, Prime(3)));
        CHECK(g["nodes"].size() == 16);
        for (const auto& e : g["edges"]) CHECK(e.contains("kind"));
    }

    TEST_CASE("tables") {
        std::ostringstream os;
        io::factor_table(FactorMultiset{3, 1}).write_tsv(os);
        CHECK(os.str() == "hw\tmult\n3\t1\n1\t1\n");
    }
}
