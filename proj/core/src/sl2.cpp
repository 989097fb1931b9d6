#include "ospl/sl2.hpp"

#include <stdexcept>

#include "ospl/words.hpp"

namespace ospl {

FactorMultiset decompose_sl2(i64 k, Prime p) {
    if (k < 0) throw std::invalid_argument("decompose_sl2 needs k >= 0");
    FactorMultiset f;
    for (const auto& ww : surviving_words(k, p)) f.add(ww.weight);
    return f;
}

bool linked_sl2(i64 l, i64 k, Prime p) {
    if (l < 0 || k < 0) throw std::invalid_argument("linked_sl2 needs nonnegative weights");
    const int d = defect(l, p);
    if (d != defect(k, p)) return false;
    const i64 m = 2 * ipow(p, d + 1);
    return mod_floor(l - k, m) == 0 || mod_floor(l + k + 2, m) == 0;
}

}  // namespace ospl
