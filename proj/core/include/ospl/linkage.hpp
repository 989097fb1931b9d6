#pragma once

#include <set>
#include <string>
#include <vector>

#include "ospl/rootdata.hpp"

namespace ospl {

enum class MoveKind { ISO_ODD, NONISO_ODD, EVEN };

const char* to_string(MoveKind k) noexcept;

struct LinkageMove {
    MoveKind kind = MoveKind::EVEN;
    WeightVec alpha;
    WeightVec source;
    WeightVec target;
    int r = 1;
    i64 l = 0;        // NONISO_ODD: residue l
    i64 l_prime = 0;  // NONISO_ODD: the factor l'
    i64 m = 0;        // EVEN: reflection integer
};

// Inclusive axis-aligned box of integral weights (undoubled coordinates).
struct Box {
    std::vector<i64> lo, hi;

    bool contains(const WeightVec& w) const;
    std::vector<WeightVec> points() const;
    // Parses "a:b" per coordinate, separated by commas.
    static Box parse(const std::string& text);
};

// Standard-flag super rho, rho0 - rho1.
WeightVec super_rho(const GroupShape& shape);

std::vector<LinkageMove> moves_iso_odd(const WeightVec& lambda, const GroupShape& shape, int r, Prime p);

// Empty in EVEN type.
std::vector<LinkageMove> moves_noniso_odd(const WeightVec& lambda, const GroupShape& shape, int r,
                                          Prime p);

// Affine reflections in the positive even roots, using the Euclidean form on both blocks.
std::vector<LinkageMove> moves_even(const WeightVec& lambda, const GroupShape& shape, int r, Prime p,
                                    const Box& box);

// SOURCE_RESIDUE takes the residue l at the upper weight of each non-isotropic move.
// BOTH_RESIDUES additionally joins nu with nu + (l - l')alpha for the residue l taken at nu.
enum class NonisoSymmetry { SOURCE_RESIDUE, BOTH_RESIDUES };

struct LinkageGraph {
    std::vector<WeightVec> nodes;     // sorted
    std::vector<LinkageMove> edges;   // one per unordered pair, kind, root and r

    std::size_t index_of(const WeightVec& w) const;
};

LinkageGraph build_graph(const Box& box, const GroupShape& shape, const std::set<int>& r_set, Prime p,
                         NonisoSymmetry symmetry = NonisoSymmetry::SOURCE_RESIDUE);

// Connected components; each sorted, ordered by smallest member.
std::vector<std::vector<WeightVec>> components(const LinkageGraph& graph);

}  // namespace ospl
