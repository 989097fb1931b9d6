#include "ospl/words.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace ospl {

namespace {

const char* render(Sym s) {
    switch (s) {
        case Sym::LT: return "<";
        case Sym::LE: return "≤";
        case Sym::GE: return "≥";
        case Sym::GT: return ">";
    }
    return "?";
}

Digits padded_digits(i64 k, std::size_t len, Prime p) {
    if (k < -1) throw std::invalid_argument("word weight needs k >= -1");
    Digits a = digits(k + 1, p);
    if (a.size() > len) throw std::invalid_argument("word shorter than the expansion of k+1");
    a.resize(len, 0);
    return a;
}

i64 ell_digits(i64 k, const Word& w, const Digits& a, Prime p) {
    i64 v = k, pw = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Sym::GE) v -= 2 * a[i] * pw;
        if (w[i] == Sym::GT) v -= 2 * (a[i] + 1) * pw;
        if (i + 1 < w.size()) pw *= p;
    }
    return v;
}

}  // namespace

std::string Word::str() const {
    std::string s;
    for (Sym x : symbols) s += render(x);
    return s;
}

Word Word::parse(std::string_view text) {
    Word w;
    std::size_t i = 0;
    auto starts = [&](std::string_view tok) { return text.substr(i, tok.size()) == tok; };
    while (i < text.size()) {
        if (starts("≤")) { w.symbols.push_back(Sym::LE); i += 3; }
        else if (starts("≥")) { w.symbols.push_back(Sym::GE); i += 3; }
        else if (starts("<=")) { w.symbols.push_back(Sym::LE); i += 2; }
        else if (starts(">=")) { w.symbols.push_back(Sym::GE); i += 2; }
        else if (starts("<")) { w.symbols.push_back(Sym::LT); i += 1; }
        else if (starts(">")) { w.symbols.push_back(Sym::GT); i += 1; }
        else throw std::invalid_argument("bad word symbol in '" + std::string(text) + "'");
    }
    return w;
}

const char* to_string(Kind k) noexcept {
    switch (k) {
        case Kind::BASE: return "base";
        case Kind::FIRST: return "first";
        case Kind::SECOND: return "second";
    }
    return "?";
}

std::vector<GenWord> build_words(int s, int u) {
    if (u < 0 || s < 0) throw std::invalid_argument("build_words needs s, u >= 0");
    if (s > u + 1) throw std::invalid_argument("build_words needs s <= u+1");
    const std::size_t len = static_cast<std::size_t>(u) + 1;

    // gens[g] holds W_{g-1}
    std::vector<std::vector<Word>> gens;
    Word base{std::vector<Sym>(len, Sym::LE)};
    base.symbols[0] = Sym::LT;
    gens.push_back({base});
    if (s >= 1) {
        Word w0{std::vector<Sym>(len, Sym::LE)};
        w0.symbols[0] = Sym::GE;
        if (len > 1) w0.symbols[1] = Sym::LT;
        gens.push_back({w0});
    }
    for (int j = 1; j < s; ++j) {
        const std::size_t pj = static_cast<std::size_t>(j);
        std::vector<Word> next;
        for (const Word& w : gens[pj]) {
            Word x = w;
            assert(x.symbols[pj] == Sym::LT);
            x.symbols[pj] = Sym::GE;
            if (pj + 1 < len) x.symbols[pj + 1] = Sym::LT;
            next.push_back(std::move(x));
        }
        for (std::size_t g = 0; g < pj; ++g) {
            for (const Word& w : gens[g]) {
                Word x = w;
                assert(x.symbols[pj] == Sym::LE);
                x.symbols[pj] = Sym::GT;
                if (pj + 1 < len) x.symbols[pj + 1] = Sym::LT;
                next.push_back(std::move(x));
            }
        }
        gens.push_back(std::move(next));
    }

    std::vector<GenWord> out;
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (const Word& w : gens[g]) out.push_back({w, static_cast<int>(g) - 1});
    return out;
}

i64 ell(i64 k, const Word& w, Prime p) {
    if (k < 0) throw std::invalid_argument("ell needs k >= 0");
    Digits a = digits(k + 1, p);
    if (a.size() != w.size()) throw std::invalid_argument("word length does not match k+1");
    return ell_digits(k, w, a, p);
}

i64 ell_padded(i64 k, const Word& w, Prime p) {
    return ell_digits(k, w, padded_digits(k, w.size(), p), p);
}

std::vector<i64> s_set(i64 k, const Word& w, Prime p) {
    Digits a = digits(k + 1, p);
    if (a.size() != w.size()) throw std::invalid_argument("word length does not match k+1");
    std::vector<i64> out{0};
    i64 pw = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int lo = 0, hi = 0;
        switch (w[i]) {
            case Sym::LT: lo = 0; hi = a[i] - 1; break;
            case Sym::LE: lo = 0; hi = a[i]; break;
            case Sym::GE: lo = a[i]; hi = static_cast<int>(p) - 1; break;
            case Sym::GT: lo = a[i] + 1; hi = static_cast<int>(p) - 1; break;
        }
        if (lo > hi) return {};
        std::vector<i64> next;
        for (i64 base : out)
            for (int d = lo; d <= hi; ++d) next.push_back(base + d * pw);
        out = std::move(next);
        pw *= p;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::remove_if(out.begin(), out.end(), [k](i64 s) { return s > k; }), out.end());
    return out;
}

Kind kind(const Word& w, int generation) {
    if (generation == -1) return Kind::BASE;
    if (w.size() > 0 && w[0] == Sym::GE) return Kind::FIRST;
    if (w.size() > 0 && w[0] == Sym::LT) return Kind::SECOND;
    throw std::logic_error("word of impossible kind: " + w.str());
}

std::vector<WeightedWord> prune(const std::vector<GenWord>& words, i64 k, Prime p,
                                bool drop_negative) {
    std::map<i64, std::size_t> latest;
    std::vector<i64> weight(words.size(), 0);
    for (std::size_t n = 0; n < words.size(); ++n) {
        const Word& w = words[n].word;
        Digits a = padded_digits(k, w.size(), p);
        bool removed = false;
        for (std::size_t i = 0; i < w.size() && !removed; ++i) {
            if (w[i] == Sym::GT && a[i] == p - 1) removed = true;
            if (w[i] == Sym::LT && a[i] == 0) removed = true;
        }
        if (removed) continue;
        weight[n] = ell_digits(k, w, a, p);
        latest[weight[n]] = n;
    }
    std::vector<std::size_t> keep;
    for (auto [l, n] : latest)
        if (!drop_negative || l >= 0) keep.push_back(n);
    std::sort(keep.begin(), keep.end());
    std::vector<WeightedWord> out;
    for (std::size_t n : keep) out.push_back({words[n], weight[n]});
    return out;
}

std::vector<WeightedWord> surviving_words(i64 k, Prime p) {
    int u = top_position(k + 1, p);
    return prune(build_words(u + 1, u), k, p);
}

}  // namespace ospl
