#pragma once

#include "ospl/characters.hpp"
#include "ospl/padic.hpp"

namespace ospl {

// Composition factors of the induced SL(2)-module of highest weight k.
FactorMultiset decompose_sl2(i64 k, Prime p);

// d(l) = d(k) = d and l = k or l = -k-2 modulo 2p^{d+1}.
bool linked_sl2(i64 l, i64 k, Prime p);

}  // namespace ospl
