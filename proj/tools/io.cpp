#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ospl/frobenius.hpp"

namespace ospl::io {

namespace {

json half(i64 twice) {
    if (twice % 2 == 0) return twice / 2;
    return static_cast<double>(twice) / 2.0;
}

i64 twice_of(const json& v) {
    if (v.is_number_integer()) return 2 * v.get<i64>();
    if (v.is_number_float()) {
        const double d = 2.0 * v.get<double>();
        if (d != std::floor(d)) throw std::invalid_argument("weight entries must lie in (1/2)Z");
        return static_cast<i64>(d);
    }
    throw std::invalid_argument("weight entries must be numbers");
}

std::string join(const std::vector<i64>& xs, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

}  // namespace

json to_json(const FactorMultiset& f) {
    json arr = json::array();
    for (i64 w : f.weights_desc()) arr.push_back({{"hw", w}, {"mult", f.mult(w)}});
    return {{"factors", arr}};
}

FactorMultiset factors_from_json(const json& j) {
    FactorMultiset f;
    for (const auto& e : j.at("factors")) f.add(e.at("hw").get<i64>(), e.at("mult").get<i64>());
    return f;
}

json to_json(const LaurentPoly1& ch) {
    json arr = json::array();
    for (auto it = ch.terms().rbegin(); it != ch.terms().rend(); ++it)
        arr.push_back({{"weight", it->first}, {"coeff", it->second}});
    return {{"terms", arr}};
}

LaurentPoly1 poly1_from_json(const json& j) {
    LaurentPoly1 ch;
    for (const auto& e : j.at("terms")) ch.add(e.at("weight").get<i64>(), e.at("coeff").get<i64>());
    return ch;
}

json to_json(const LaurentPolyN& ch) {
    json arr = json::array();
    for (const auto& [k, c] : ch.sorted_desc()) arr.push_back({{"weight", k}, {"coeff", c}});
    return {{"terms", arr}};
}

LaurentPolyN polyN_from_json(const json& j) {
    LaurentPolyN ch;
    for (const auto& e : j.at("terms"))
        ch.add(e.at("weight").get<std::vector<i64>>(), e.at("coeff").get<i64>());
    return ch;
}

json to_json(const WeightVec& w) {
    json arr = json::array();
    for (i64 d : w.doubled()) arr.push_back(half(d));
    return arr;
}

WeightVec weight_from_json(const json& j) {
    std::vector<i64> d;
    for (const auto& v : j) d.push_back(twice_of(v));
    return WeightVec::from_doubled(std::move(d));
}

json to_json(const Flag& f) {
    json arr = json::array();
    for (const Label& a : f.entries) arr.push_back(a.str());
    return arr;
}

Flag flag_from_json(const json& j) {
    Flag f;
    for (const auto& v : j) f.entries.push_back(Label::parse(v.get<std::string>()));
    return f;
}

json to_json(const Root& r) {
    return {{"root", to_json(r.vec)},
            {"parity", to_string(r.parity)},
            {"isotropic", r.isotropic}};
}

json to_json(const BasisMonomial& m, i64 degree, bool frobenius) {
    return {{"side", to_string(m.side)},
            {"i", m.i},
            {"eps", m.eps},
            {"weight", frobenius ? weight_r(m, degree) : weight(m, degree)},
            {"parity", to_string(parity(m))}};
}

json to_json(const MorphismTable& t, bool frobenius) {
    json rows = json::array();
    for (const auto& row : t.rows)
        rows.push_back({{"source", to_json(row.source, t.source_degree, frobenius)},
                        {"target", to_json(row.target, t.target_degree, frobenius)},
                        {"target_valid", row.target_valid},
                        {"coeff", row.coeff}});
    return {{"source_degree", t.source_degree}, {"target_degree", t.target_degree}, {"rows", rows}};
}

json to_json(const Chain& c) {
    json steps = json::array();
    for (const auto& s : c.steps)
        steps.push_back({{"flag", to_json(s.from)},
                         {"move", s.move.str()},
                         {"alpha", to_json(s.alpha.vec)},
                         {"levi", to_string(s.levi)}});
    json flags = json::array();
    for (const Flag& f : c.flags()) flags.push_back(to_json(f));
    return {{"flags", flags}, {"chain", steps}, {"end", to_json(c.end)}};
}

json to_json(const LinkageGraph& g) {
    json nodes = json::array();
    for (const auto& w : g.nodes) nodes.push_back(w.coords());
    json edges = json::array();
    for (const auto& e : g.edges) {
        json je = {{"src", e.source.coords()},
                   {"dst", e.target.coords()},
                   {"kind", to_string(e.kind)},
                   {"alpha", to_json(e.alpha)},
                   {"r", e.r}};
        if (e.kind == MoveKind::NONISO_ODD) je["l"] = {e.l, e.l_prime};
        if (e.kind == MoveKind::EVEN) je["m"] = e.m;
        edges.push_back(std::move(je));
    }
    return {{"nodes", nodes}, {"edges", edges}};
}

json to_json(const CriterionResult& r) {
    return {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}};
}

void Table::write_tsv(std::ostream& os) const {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << cells[i];
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void Table::write_text(std::ostream& os) const {
    std::vector<std::size_t> width(header.size(), 0);
    auto measure = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], cells[i].size());
    };
    measure(header);
    for (const auto& r : rows) measure(r);
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) s += "  ";
            s += cells[i];
            if (i + 1 < cells.size() && i < width.size()) s.append(width[i] - cells[i].size(), ' ');
        }
        os << s << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

Table factor_table(const FactorMultiset& f) {
    Table t{{"hw", "mult"}, {}};
    for (i64 w : f.weights_desc()) t.rows.push_back({std::to_string(w), std::to_string(f.mult(w))});
    return t;
}

Table poly_table(const LaurentPolyN& ch) {
    Table t{{"weight", "coeff"}, {}};
    for (const auto& [k, c] : ch.sorted_desc()) t.rows.push_back({join(k), std::to_string(c)});
    return t;
}

}  // namespace ospl::io
