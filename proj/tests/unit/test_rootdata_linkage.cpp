#include <doctest.h>

#include <algorithm>

#include "ospl/linkage.hpp"
#include "ospl/oracles.hpp"
#include "ospl/padic.hpp"
#include "ospl/rootdata.hpp"
#include "ospl/sl2.hpp"

using namespace ospl;

namespace {

const GroupShape kOdd11{1, 1, ParityType::ODD};
const GroupShape kEven11{1, 1, ParityType::EVEN};

WeightVec wv(std::initializer_list<ospl::i64> c) { return WeightVec::integral(c); }

std::vector<WeightVec> vecs(std::vector<Root> rs) {
    std::vector<WeightVec> out;
    for (const auto& r : rs) out.push_back(r.vec);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_parity(const std::vector<Root>& rs, Parity p) {
    return static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [&](const Root& r) { return r.parity == p; }));
}

}  // namespace

TEST_SUITE("rootdata") {
    TEST_CASE("shapes and labels") {
        CHECK(kOdd11.name() == "SpO(2|3)");
        CHECK(Label::parse("1bar").orthogonal);
        CHECK(Label::parse("-2").sign == -1);
        CHECK(Label::parse("-2").str() == "-2");
        CHECK(Flag::standard(kOdd11).str() == "<1,1bar>");
        CHECK(Flag::parse("<1,1bar>") == Flag::standard(kOdd11));
        CHECK_THROWS(Label::parse("x"));
        CHECK_THROWS(Flag::parse("<1,1>").validate(kOdd11));
        CHECK(parse_parity_type("even") == ParityType::EVEN);
    }

    TEST_CASE("root counts") {
        const auto odd = roots(kOdd11);
        CHECK(count_parity(odd, Parity::EVEN) == 4);
        CHECK(count_parity(odd, Parity::ODD) == 6);
        const auto even = roots(kEven11);
        CHECK(count_parity(even, Parity::EVEN) == 2);
        CHECK(count_parity(even, Parity::ODD) == 4);
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= 3; ++m) {
                if (n + m == 0) continue;
                const GroupShape s{n, m, ParityType::EVEN};
                const auto rs = roots(s);
                CHECK(count_parity(rs, Parity::EVEN) == static_cast<std::size_t>(2 * n * n + 2 * m * (m - 1)));
                CHECK(count_parity(rs, Parity::ODD) == static_cast<std::size_t>(4 * n * m));
            }
    }

    TEST_CASE("positive system of the standard flag") {
        const std::vector<WeightVec> expect = [] {
            std::vector<WeightVec> v{wv({2, 0}), wv({0, 1}), wv({1, 1}), wv({1, 0}), wv({1, -1})};
            std::sort(v.begin(), v.end());
            return v;
        }();
        CHECK(vecs(phi_plus(Flag::standard(kOdd11), kOdd11)) == expect);
    }

    TEST_CASE("positive systems agree with the height oracle") {
        for (ParityType type : {ParityType::ODD, ParityType::EVEN})
            for (int n = 0; n <= 2; ++n)
                for (int m = 0; m <= 2; ++m) {
                    if (n + m == 0) continue;
                    const GroupShape s{n, m, type};
                    for (const Flag& f : chain_of_borels(s).flags())
                        REQUIRE(vecs(phi_plus(f, s)) == vecs(oracle::phi_plus(f, s)));
                }
    }

    TEST_CASE("adjacent transposition") {
        const MoveResult r = apply_move(Flag::standard(kOdd11), {MoveType::TRANSPOSE, 1}, kOdd11);
        CHECK(r.alpha.vec == wv({1, -1}));
        CHECK(r.levi == Levi::GL11);
        CHECK(r.flag.str() == "<1bar,1>");
        CHECK(r.removed.size() == 1);
        CHECK(r.added.size() == 1);
    }

    TEST_CASE("chain of Borels") {
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= 3; ++m) {
                if (n + m == 0) continue;
                const GroupShape odd{n, m, ParityType::ODD};
                const Chain c = chain_of_borels(odd);
                CHECK(c.steps.size() == static_cast<std::size_t>((n + m) * (n + m)));
                CHECK(c.end == Flag::standard(odd).negated());
                const GroupShape even{n, m, ParityType::EVEN};
                CHECK(chain_of_borels(even).steps.size() == static_cast<std::size_t>((n + m) * (n + m) - m));
            }
        const Chain c = chain_of_borels(kOdd11);
        std::vector<std::string> levis;
        for (const auto& s : c.steps) levis.emplace_back(to_string(s.levi));
        CHECK(levis == std::vector<std::string>{"GL11", "SPO21", "GL11", "SO3"});
    }

    TEST_CASE("rho and pairing") {
        const RhoParts rp = rho_parts(Flag::standard(kOdd11), kOdd11);
        CHECK(rp.rho0 == WeightVec::from_doubled({2, 1}));
        CHECK(rp.rho1 == WeightVec::from_doubled({3, 0}));
        CHECK(rp.rho == WeightVec::from_doubled({-1, 1}));
        CHECK(pairing(wv({1, 0}), wv({1, 0}), kOdd11).value() == 1);
        CHECK(pairing(wv({0, 1}), wv({0, 1}), kOdd11).value() == -1);
    }

    TEST_CASE("characters do not depend on the flag") {
        for (const GroupShape& s : {kOdd11, kEven11})
            for (ospl::i64 a = 0; a <= 2; ++a)
                for (ospl::i64 b = 0; b <= 2; ++b) {
                    const WeightVec lambda = wv({a, b});
                    const Chain c = chain_of_borels(s);
                    const LaurentPolyN base = ch_Zr_flag(lambda, c.start, s, 1, Prime(3));
                    for (const Flag& f : c.flags()) {
                        const WeightVec lb = lambda_bracket(lambda, f, s, 1, Prime(3));
                        REQUIRE(ch_Zr_flag(lb, f, s, 1, Prime(3)) == base);
                    }
                }
    }
}

TEST_SUITE("linkage") {
    TEST_CASE("isotropic move example") {
        const auto moves = moves_iso_odd(wv({2, 1}), kOdd11, 1, Prime(3));
        REQUIRE(moves.size() == 2);
        CHECK(std::any_of(moves.begin(), moves.end(), [](const LinkageMove& mv) { return mv.target == wv({1, 2}); }));
        for (const auto& mv : moves) CHECK(mv.kind == MoveKind::ISO_ODD);
    }

    TEST_CASE("box parsing") {
        const Box b = Box::parse("0:2,-1:1");
        CHECK(b.points().size() == 9);
        CHECK(b.contains(wv({2, -1})));
        CHECK_FALSE(b.contains(wv({3, 0})));
        CHECK_THROWS_AS(Box::parse("0-2"), std::invalid_argument);
    }

    TEST_CASE("empty r set gives a discrete graph") {
        const LinkageGraph g = build_graph(Box::parse("0:6,0:6"), kOdd11, {}, Prime(3));
        CHECK(g.edges.empty());
        CHECK(components(g).size() == 49);
    }

    TEST_CASE("edges grow with the r set") {
        for (const GroupShape& s : {kOdd11, kEven11}) {
            const Box box = Box::parse("0:9,0:9");
            const LinkageGraph g1 = build_graph(box, s, {1}, Prime(3));
            const LinkageGraph g12 = build_graph(box, s, {1, 2}, Prime(3));
            CHECK(g1.edges.size() <= g12.edges.size());
            CHECK(components(g12).size() <= components(g1).size());
        }
    }

    TEST_CASE("symmetrizing both residues only merges blocks") {
        const Box box = Box::parse("0:9,0:9");
        const auto a = components(build_graph(box, kOdd11, {1}, Prime(3)));
        const auto b = components(build_graph(box, kOdd11, {1}, Prime(3), NonisoSymmetry::BOTH_RESIDUES));
        CHECK(b.size() <= a.size());
    }

    TEST_CASE("rank-one even moves at height defect+1 respect sl2 linkage") {
        const GroupShape sl2{1, 0, ParityType::EVEN};
        for (int p : {3, 5}) {
            const Box box{{0}, {4 * p * p}};
            std::size_t moves = 0;
            for (const WeightVec& lambda : box.points()) {
                const ospl::i64 a = lambda.coords()[0];
                for (const auto& mv : moves_even(lambda, sl2, defect(a, Prime(p)) + 1, Prime(p), box)) {
                    const ospl::i64 b = mv.target.coords()[0];
                    REQUIRE(linked_sl2(std::min(a, b), std::max(a, b), Prime(p)));
                    ++moves;
                }
            }
            CHECK(moves > 0);
        }
    }

    TEST_CASE("every node of a graph is in exactly one component") {
        const LinkageGraph g = build_graph(Box::parse("0:6,0:6"), kEven11, {1, 2}, Prime(3));
        std::size_t total = 0;
        for (const auto& c : components(g)) total += c.size();
        CHECK(total == g.nodes.size());
    }
}
