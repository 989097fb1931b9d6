#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ospl/padic.hpp"

namespace ospl {

// Symbols are rendered as "<", "≤", "≥", ">".
enum class Sym : std::uint8_t { LT, LE, GE, GT };

struct Word {
    std::vector<Sym> symbols;

    std::size_t size() const noexcept { return symbols.size(); }
    Sym operator[](std::size_t i) const { return symbols[i]; }
    std::string str() const;
    // Accepts the rendered form, and the ASCII spellings "<=" and ">=".
    static Word parse(std::string_view text);

    friend bool operator==(const Word&, const Word&) = default;
};

enum class Kind { BASE, FIRST, SECOND };

const char* to_string(Kind k) noexcept;

struct GenWord {
    Word word;
    int generation;  // -1 for the base word
};

struct WeightedWord {
    GenWord entry;
    i64 weight;
};

// W^s = W_{-1} u W_0 u ... u W_{s-1} on words of length u+1, in listed order.
std::vector<GenWord> build_words(int s, int u);

// l_k(w); the word length must equal the digit count of k+1.
i64 ell(i64 k, const Word& w, Prime p);

// l_k(w) for words at least as long as the expansion of k+1 (digits padded with zeros).
i64 ell_padded(i64 k, const Word& w, Prime p);

std::vector<i64> s_set(i64 k, const Word& w, Prime p);

Kind kind(const Word& w, int generation);

// Removal and keep-latest deduplication rules; optionally drops negative weights.
// Survivors are returned in list order.
std::vector<WeightedWord> prune(const std::vector<GenWord>& words, i64 k, Prime p,
                                bool drop_negative = true);

// prune(build_words(u+1, u), k, p) with u the top digit index of k+1.
std::vector<WeightedWord> surviving_words(i64 k, Prime p);

}  // namespace ospl
