#include "ospl/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ospl {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::vector<Root> sorted_unique(std::vector<Root> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

WeightVec half_sum(const std::vector<Root>& rs, Parity which, std::size_t rank) {
    WeightVec s(rank);
    for (const Root& r : rs)
        if (r.parity == which) s += r.vec;
    return s.halved();
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

const char* to_string(ParityType t) noexcept { return t == ParityType::ODD ? "odd" : "even"; }

ParityType parse_parity_type(std::string_view text) {
    if (text == "odd" || text == "ODD") return ParityType::ODD;
    if (text == "even" || text == "EVEN") return ParityType::EVEN;
    throw std::invalid_argument("parity type must be odd or even, got '" + std::string(text) + "'");
}

void GroupShape::validate() const {
    require(n >= 0 && m >= 0, "ranks must be nonnegative");
    require(n + m >= 1, "need n >= 1 or m >= 1");
}

std::string GroupShape::name() const {
    return "SpO(" + std::to_string(2 * n) + "|" +
           std::to_string(2 * m + (type == ParityType::ODD ? 1 : 0)) + ")";
}

std::string Label::str() const {
    std::string s = sign < 0 ? "-" : "";
    s += std::to_string(index);
    if (orthogonal) s += "bar";
    return s;
}

Label Label::parse(std::string_view text) {
    std::string t = trim(text);
    Label a;
    std::size_t pos = 0;
    if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) a.sign = t[pos++] == '-' ? -1 : 1;
    std::size_t digits_end = pos;
    while (digits_end < t.size() && std::isdigit(static_cast<unsigned char>(t[digits_end]))) ++digits_end;
    require(digits_end > pos, "bad flag label '" + t + "'");
    a.index = std::stoi(t.substr(pos, digits_end - pos));
    std::string rest = t.substr(digits_end);
    if (rest == "bar" || rest == "b" || rest == "̄") a.orthogonal = true;
    else require(rest.empty(), "bad flag label '" + t + "'");
    require(a.index >= 1, "label indices start at 1");
    return a;
}

Flag Flag::standard(const GroupShape& shape) {
    Flag f;
    for (int i = 1; i <= shape.n; ++i) f.entries.push_back({i, false, 1});
    for (int j = 1; j <= shape.m; ++j) f.entries.push_back({j, true, 1});
    return f;
}

Flag Flag::negated() const {
    Flag f;
    for (const Label& a : entries) f.entries.push_back(a.negated());
    return f;
}

void Flag::validate(const GroupShape& shape) const {
    shape.validate();
    require(entries.size() == shape.rank(), "flag length must be n+m");
    std::vector<int> seen_s(shape.n + 1, 0), seen_o(shape.m + 1, 0);
    for (const Label& a : entries) {
        require(a.sign == 1 || a.sign == -1, "label sign must be +-1");
        int bound = a.orthogonal ? shape.m : shape.n;
        require(a.index >= 1 && a.index <= bound, "label " + a.str() + " out of range");
        int& c = a.orthogonal ? seen_o[a.index] : seen_s[a.index];
        require(++c == 1, "label " + a.str() + " repeated");
    }
}

std::string Flag::str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += entries[i].str();
    }
    return s + ">";
}

Flag Flag::parse(std::string_view text) {
    std::string t = trim(text);
    if (!t.empty() && (t.front() == '<' || t.front() == '[')) t.erase(t.begin());
    if (!t.empty() && (t.back() == '>' || t.back() == ']')) t.pop_back();
    Flag f;
    std::string cur;
    auto flush = [&] {
        std::string c = trim(cur);
        if (!c.empty() && c.front() == '"') c.erase(c.begin());
        if (!c.empty() && c.back() == '"') c.pop_back();
        if (!c.empty()) f.entries.push_back(Label::parse(c));
        cur.clear();
    };
    for (char ch : t) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) flush();
        else cur += ch;
    }
    flush();
    return f;
}

WeightVec label_weight(const Label& a, const GroupShape& shape) {
    std::size_t idx = a.orthogonal ? static_cast<std::size_t>(shape.n + a.index - 1)
                                   : static_cast<std::size_t>(a.index - 1);
    return WeightVec::unit(shape.rank(), idx, a.sign);
}

Root make_root(const WeightVec& v, const GroupShape& shape) {
    // Odd roots have exactly one delta and one eps coordinate, or are +-delta_i.
    int nd = 0, ne = 0;
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (v.doubled()[i] == 0) continue;
        (static_cast<int>(i) < shape.n ? nd : ne) += 1;
    }
    Root r{v, Parity::EVEN, false};
    if (nd == 1 && ne == 1) {
        r.parity = Parity::ODD;
        r.isotropic = true;
    } else if (nd == 1 && ne == 0) {
        i64 c = 0;
        for (i64 d : v.doubled()) c += d < 0 ? -d : d;
        if (c == 2) r.parity = Parity::ODD;  // +-delta_i; +-2delta_i is even
    }
    return r;
}

std::vector<Root> roots(const GroupShape& shape) {
    shape.validate();
    const std::size_t rk = shape.rank();
    const bool odd = shape.type == ParityType::ODD;
    std::vector<Root> out;
    auto push = [&](const WeightVec& v) { out.push_back(make_root(v, shape)); };
    auto delta = [&](int i) { return WeightVec::unit(rk, static_cast<std::size_t>(i)); };
    auto eps = [&](int j) { return WeightVec::unit(rk, static_cast<std::size_t>(shape.n + j)); };
    for (int s1 : {1, -1}) {
        for (int i = 0; i < shape.n; ++i) {
            push(s1 * (2 * delta(i)));
            if (odd) push(s1 * delta(i));
            for (int i2 = i + 1; i2 < shape.n; ++i2)
                for (int s2 : {1, -1}) push(s1 * delta(i) + s2 * delta(i2));
            for (int j = 0; j < shape.m; ++j)
                for (int s2 : {1, -1}) push(s1 * delta(i) + s2 * eps(j));
        }
        for (int j = 0; j < shape.m; ++j) {
            if (odd) push(s1 * eps(j));
            for (int j2 = j + 1; j2 < shape.m; ++j2)
                for (int s2 : {1, -1}) push(s1 * eps(j) + s2 * eps(j2));
        }
    }
    return sorted_unique(std::move(out));
}

std::vector<Root> phi_plus(const Flag& flag, const GroupShape& shape) {
    flag.validate(shape);
    const bool odd = shape.type == ParityType::ODD;
    std::vector<Root> out;
    const auto& a = flag.entries;
    for (std::size_t s = 0; s < a.size(); ++s) {
        WeightVec ps = label_weight(a[s], shape);
        for (std::size_t t = s + 1; t < a.size(); ++t) {
            WeightVec pt = label_weight(a[t], shape);
            out.push_back(make_root(ps + pt, shape));
            out.push_back(make_root(ps - pt, shape));
        }
        if (!a[s].orthogonal) out.push_back(make_root(2 * ps, shape));
        if (odd) out.push_back(make_root(ps, shape));
    }
    return sorted_unique(std::move(out));
}

std::string AdjMove::str() const {
    switch (type) {
        case MoveType::TRANSPOSE: return "TRANSPOSE(" + std::to_string(position) + ")";
        case MoveType::FLIP_SYMPLECTIC: return "FLIP_SYMPLECTIC";
        case MoveType::FLIP_ORTHOGONAL: return "FLIP_ORTHOGONAL";
    }
    return "?";
}

const char* to_string(Levi l) noexcept {
    switch (l) {
        case Levi::GL2: return "GL2";
        case Levi::GL11: return "GL11";
        case Levi::SPO21: return "SPO21";
        case Levi::SO3: return "SO3";
        case Levi::SL2: return "SL2";
    }
    return "?";
}

MoveResult apply_move(const Flag& flag, const AdjMove& move, const GroupShape& shape) {
    flag.validate(shape);
    MoveResult res;
    res.flag = flag;
    auto& e = res.flag.entries;
    const bool odd = shape.type == ParityType::ODD;
    switch (move.type) {
        case MoveType::TRANSPOSE: {
            const int s = move.position;
            require(s >= 1 && s < static_cast<int>(e.size()), "transposition position out of range");
            const Label& x = flag.entries[s - 1];
            const Label& y = flag.entries[s];
            res.alpha = make_root(label_weight(x, shape) - label_weight(y, shape), shape);
            res.levi = res.alpha.parity == Parity::EVEN ? Levi::GL2 : Levi::GL11;
            std::swap(e[s - 1], e[s]);
            res.removed = {res.alpha};
            res.added = {make_root(-res.alpha.vec, shape)};
            break;
        }
        case MoveType::FLIP_SYMPLECTIC: {
            require(!e.empty() && !e.back().orthogonal, "symplectic flip needs a symplectic last entry");
            WeightVec pi = label_weight(e.back(), shape);
            if (odd) {
                res.alpha = make_root(pi, shape);
                res.levi = Levi::SPO21;
                res.removed = {make_root(pi, shape), make_root(2 * pi, shape)};
                res.added = {make_root(-pi, shape), make_root(-2 * pi, shape)};
            } else {
                res.alpha = make_root(2 * pi, shape);
                res.levi = Levi::SL2;
                res.removed = {make_root(2 * pi, shape)};
                res.added = {make_root(-2 * pi, shape)};
            }
            e.back() = e.back().negated();
            break;
        }
        case MoveType::FLIP_ORTHOGONAL: {
            require(odd, "orthogonal flips do not change the Borel in EVEN type");
            require(!e.empty() && e.back().orthogonal, "orthogonal flip needs an orthogonal last entry");
            WeightVec pi = label_weight(e.back(), shape);
            res.alpha = make_root(pi, shape);
            res.levi = Levi::SO3;
            res.removed = {make_root(pi, shape)};
            res.added = {make_root(-pi, shape)};
            e.back() = e.back().negated();
            break;
        }
    }
    res.removed = sorted_unique(std::move(res.removed));
    res.added = sorted_unique(std::move(res.added));
    return res;
}

std::vector<Flag> Chain::flags() const {
    std::vector<Flag> out{start};
    auto push = [&](const Flag& f) {
        if (!(out.back() == f)) out.push_back(f);
    };
    for (const ChainStep& s : steps) {
        push(s.from);
        push(s.to);
    }
    push(end);
    return out;
}

Chain chain_of_borels(const GroupShape& shape) {
    shape.validate();
    const int n = shape.n, m = shape.m;
    const bool odd = shape.type == ParityType::ODD;
    Chain chain;
    chain.start = Flag::standard(shape);
    Flag cur = chain.start;
    auto step = [&](AdjMove mv) {
        MoveResult r = apply_move(cur, mv, shape);
        chain.steps.push_back({cur, mv, r.alpha, r.levi, r.flag});
        cur = r.flag;
    };
    // Move an entry from 1-based position `from` leftwards to position `to`.
    auto move_left = [&](int from, int to) {
        for (int s = from - 1; s >= to; --s) step({MoveType::TRANSPOSE, s});
    };
    // <1..n, 1bar..mbar> -> <1bar..mbar, 1..n>
    for (int j = 1; j <= m; ++j) move_left(n + j, j);
    // -> <-1..-n, 1bar..mbar>
    for (int i = n; i >= 1; --i) {
        step({MoveType::FLIP_SYMPLECTIC, 0});
        move_left(m + n, 1);
    }
    // -> <-1..-n, -1bar..-mbar>
    for (int j = m; j >= 1; --j) {
        if (odd) step({MoveType::FLIP_ORTHOGONAL, 0});
        else cur.entries.back() = cur.entries.back().negated();
        move_left(m + n, n + 1);
    }
    chain.end = cur;
    if (!(chain.end == chain.start.negated()))
        throw std::logic_error("chain of Borels did not reach the negated flag");
    return chain;
}

RhoParts rho_parts(const Flag& flag, const GroupShape& shape) {
    std::vector<Root> pos = phi_plus(flag, shape);
    RhoParts out;
    out.rho0 = half_sum(pos, Parity::EVEN, shape.rank());
    out.rho1 = half_sum(pos, Parity::ODD, shape.rank());
    out.rho = out.rho0 - out.rho1;
    return out;
}

HalfInt pairing(const WeightVec& x, const WeightVec& y, const GroupShape& shape) {
    if (x.rank() != shape.rank() || y.rank() != shape.rank())
        throw std::invalid_argument("pairing: rank mismatch");
    i64 s = 0;  // 4 (x, y)
    for (std::size_t i = 0; i < x.rank(); ++i) {
        i64 term = x.doubled()[i] * y.doubled()[i];
        s += static_cast<int>(i) < shape.n ? term : -term;
    }
    if (s % 2 != 0) throw std::domain_error("pairing value not in (1/2)Z");
    return {s / 2};
}

WeightVec lambda_bracket(const WeightVec& lambda, const Flag& flag, const GroupShape& shape, int r,
                         Prime p) {
    if (!lambda.is_integral()) throw std::invalid_argument("lambda_bracket needs an integral weight");
    const RhoParts f = rho_parts(flag, shape);
    const RhoParts s = rho_parts(Flag::standard(shape), shape);
    WeightVec out = lambda + (ipow(p, r) - 1) * (f.rho0 - s.rho0) + (f.rho1 - s.rho1);
    if (!out.is_integral()) throw std::logic_error("lambda<F> is not integral: " + out.str());
    return out;
}

LaurentPolyN ch_Zr_flag(const WeightVec& lambda, const Flag& flag, const GroupShape& shape, int r,
                        Prime p) {
    std::vector<WeightVec> even, odd;
    for (const Root& a : phi_plus(flag, shape)) (a.parity == Parity::EVEN ? even : odd).push_back(a.vec);
    return ch_product_Zr(lambda, even, odd, r, p);
}

}  // namespace ospl
