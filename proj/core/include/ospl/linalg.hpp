#pragma once

#include <map>
#include <vector>

#include "ospl/padic.hpp"

namespace ospl {

// Sparse vector over F_p: column -> nonzero residue.
using SparseVec = std::map<std::size_t, int>;

// Incremental row echelon form over F_p.
class Echelon {
public:
    explicit Echelon(Prime p) : p_(p) {}

    // Reduces v against the current rows; returns true if it enlarged the span.
    bool insert(SparseVec v);
    // True when v lies in the span.
    bool contains(SparseVec v) const;
    std::size_t rank() const noexcept { return pivots_.size(); }
    bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }

private:
    SparseVec reduce(SparseVec v) const;

    Prime p_;
    std::map<std::size_t, SparseVec> pivots_;  // leading column -> row, leading entry 1
};

// Rank of a list of rows over F_p.
std::size_t rank_mod(const std::vector<SparseVec>& rows, Prime p);

}  // namespace ospl
