#include "ospl/linkage.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ospl/frobenius.hpp"

namespace ospl {

namespace {

i64 dot(const std::vector<i64>& a, const std::vector<i64>& b) {
    i64 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Root> standard_positive(const GroupShape& shape) {
    return phi_plus(Flag::standard(shape), shape);
}

void require_integral(const WeightVec& lambda, const GroupShape& shape) {
    if (lambda.rank() != shape.rank()) throw std::invalid_argument("weight rank must be n+m");
    if (!lambda.is_integral()) throw std::invalid_argument("linkage moves need an integral weight");
}

// nu + (l - l') delta_i for every factor l' != l, with l read at nu.
std::vector<LinkageMove> noniso_moves(const WeightVec& nu, const GroupShape& shape, int r, Prime p,
                                      int direction) {
    std::vector<LinkageMove> out;
    if (shape.type != ParityType::ODD) return out;
    require_integral(nu, shape);
    const i64 pr = ipow(p, r);
    const WeightVec shifted = nu + super_rho(shape);
    for (int i = 0; i < shape.n; ++i) {
        const i64 d = shifted.doubled()[static_cast<std::size_t>(i)];
        const i64 l = mod_floor((d - 1) / 2, pr);  // d is odd here
        const WeightVec alpha = WeightVec::unit(shape.rank(), static_cast<std::size_t>(i));
        const FactorMultiset factors = comp_factors_r(l, r, p);
        for (const auto& [lp, mult] : factors.entries()) {
            (void)mult;
            if (lp == l) continue;
            LinkageMove mv;
            mv.kind = MoveKind::NONISO_ODD;
            mv.alpha = alpha;
            mv.r = r;
            mv.l = l;
            mv.l_prime = lp;
            if (direction < 0) {
                mv.source = nu;
                mv.target = nu - (l - lp) * alpha;
            } else {
                mv.source = nu + (l - lp) * alpha;
                mv.target = nu;
            }
            out.push_back(std::move(mv));
        }
    }
    return out;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

const char* to_string(MoveKind k) noexcept {
    switch (k) {
        case MoveKind::ISO_ODD: return "ISO_ODD";
        case MoveKind::NONISO_ODD: return "NONISO_ODD";
        case MoveKind::EVEN: return "EVEN";
    }
    return "?";
}

bool Box::contains(const WeightVec& w) const {
    if (w.rank() != lo.size() || !w.is_integral()) return false;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        const i64 c = w.doubled()[i] / 2;
        if (c < lo[i] || c > hi[i]) return false;
    }
    return true;
}

std::vector<WeightVec> Box::points() const {
    if (lo.size() != hi.size()) throw std::invalid_argument("box bounds differ in rank");
    std::vector<WeightVec> out;
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return out;
    std::vector<i64> cur = lo;
    while (true) {
        out.push_back(WeightVec::integral(cur));
        std::size_t i = cur.size();
        while (i > 0) {
            --i;
            if (cur[i] < hi[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lo[i];
            if (i == 0) return out;
        }
        if (cur.empty()) return out;
    }
}

Box Box::parse(const std::string& text) {
    Box b;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("box coordinates must look like a:b");
        try {
            b.lo.push_back(std::stoll(part.substr(0, colon)));
            b.hi.push_back(std::stoll(part.substr(colon + 1)));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad box coordinate '" + part + "'");
        }
    }
    if (b.lo.empty()) throw std::invalid_argument("empty box");
    return b;
}

WeightVec super_rho(const GroupShape& shape) { return rho_parts(Flag::standard(shape), shape).rho; }

std::vector<LinkageMove> moves_iso_odd(const WeightVec& lambda, const GroupShape& shape, int r, Prime p) {
    require_integral(lambda, shape);
    const WeightVec shifted = lambda + super_rho(shape);
    std::vector<LinkageMove> out;
    for (const Root& a : standard_positive(shape)) {
        if (a.parity != Parity::ODD || !a.isotropic) continue;
        const i64 v = pairing(shifted, a.vec, shape).value();
        if (mod_floor(v, p) != 0) continue;
        LinkageMove mv;
        mv.kind = MoveKind::ISO_ODD;
        mv.alpha = a.vec;
        mv.source = lambda;
        mv.target = lambda - a.vec;
        mv.r = r;
        out.push_back(std::move(mv));
    }
    return out;
}

std::vector<LinkageMove> moves_noniso_odd(const WeightVec& lambda, const GroupShape& shape, int r,
                                          Prime p) {
    return noniso_moves(lambda, shape, r, p, -1);
}

std::vector<LinkageMove> moves_even(const WeightVec& lambda, const GroupShape& shape, int r, Prime p,
                                    const Box& box) {
    require_integral(lambda, shape);
    const i64 pr = ipow(p, r);
    const std::vector<i64> D = (lambda + super_rho(shape)).doubled();
    std::vector<LinkageMove> out;
    for (const Root& a : standard_positive(shape)) {
        if (a.parity != Parity::EVEN) continue;
        const std::vector<i64>& A = a.vec.doubled();
        // <lambda+rho, alpha^vee> = num/den in the Euclidean form.
        const i64 num = 2 * dot(D, A);
        const i64 den = dot(A, A);
        for (i64 m = floor_div(num - 1, pr * den);; --m) {
            const i64 c_den = num - m * pr * den;  // c = c_den / den > 0
            std::vector<i64> mu = lambda.doubled();
            for (std::size_t i = 0; i < mu.size(); ++i) {
                const i64 step = c_den * A[i];
                if (step % den != 0) throw std::logic_error("non-integral reflection step");
                mu[i] -= step / den;
            }
            const WeightVec target = WeightVec::from_doubled(mu);
            if (!target.is_integral()) throw std::logic_error("reflection left the integral lattice");
            if (!box.contains(target)) break;
            LinkageMove mv;
            mv.kind = MoveKind::EVEN;
            mv.alpha = a.vec;
            mv.source = lambda;
            mv.target = target;
            mv.r = r;
            mv.m = m;
            out.push_back(std::move(mv));
        }
    }
    return out;
}

std::size_t LinkageGraph::index_of(const WeightVec& w) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), w);
    if (it == nodes.end() || !(*it == w)) throw std::out_of_range("weight not in graph: " + w.str());
    return static_cast<std::size_t>(it - nodes.begin());
}

LinkageGraph build_graph(const Box& box, const GroupShape& shape, const std::set<int>& r_set, Prime p,
                         NonisoSymmetry symmetry) {
    shape.validate();
    if (box.lo.size() != shape.rank()) throw std::invalid_argument("box rank must be n+m");
    for (int r : r_set)
        if (r < 1) throw std::invalid_argument("r must be positive");
    LinkageGraph g;
    g.nodes = box.points();
    std::sort(g.nodes.begin(), g.nodes.end());
    using Key = std::tuple<WeightVec, WeightVec, int, WeightVec, int>;
    std::set<Key> seen;
    auto keep = [&](LinkageMove mv) {
        if (!box.contains(mv.source) || !box.contains(mv.target) || mv.source == mv.target) return;
        const WeightVec& a = std::min(mv.source, mv.target);
        const WeightVec& b = std::max(mv.source, mv.target);
        if (seen.emplace(a, b, static_cast<int>(mv.kind), mv.alpha, mv.r).second)
            g.edges.push_back(std::move(mv));
    };
    for (const WeightVec& node : g.nodes) {
        for (int r : r_set) {
            for (auto& mv : moves_iso_odd(node, shape, r, p)) keep(std::move(mv));
            for (auto& mv : moves_noniso_odd(node, shape, r, p)) keep(std::move(mv));
            if (symmetry == NonisoSymmetry::BOTH_RESIDUES)
                for (auto& mv : noniso_moves(node, shape, r, p, +1)) keep(std::move(mv));
            for (auto& mv : moves_even(node, shape, r, p, box)) keep(std::move(mv));
        }
    }
    return g;
}

std::vector<std::vector<WeightVec>> components(const LinkageGraph& graph) {
    UnionFind uf(graph.nodes.size());
    for (const auto& e : graph.edges) uf.unite(graph.index_of(e.source), graph.index_of(e.target));
    std::map<std::size_t, std::vector<WeightVec>> groups;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) groups[uf.find(i)].push_back(graph.nodes[i]);
    std::vector<std::vector<WeightVec>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

}  // namespace ospl
