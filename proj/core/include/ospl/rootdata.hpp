#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ospl/characters.hpp"
#include "ospl/spo21.hpp"
#include "ospl/weight.hpp"

namespace ospl {

// ODD: SpO(2n|2m+1). EVEN: SpO(2n|2m).
enum class ParityType { ODD, EVEN };

const char* to_string(ParityType t) noexcept;
ParityType parse_parity_type(std::string_view text);

struct GroupShape {
    int n = 0;
    int m = 0;
    ParityType type = ParityType::ODD;

    std::size_t rank() const noexcept { return static_cast<std::size_t>(n + m); }
    // Throws std::invalid_argument for negative ranks or n = m = 0.
    void validate() const;
    std::string name() const;

    friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

// A symplectic label ±i (1 <= i <= n) or an orthogonal label ±ibar (1 <= i <= m).
struct Label {
    int index = 1;
    bool orthogonal = false;
    int sign = 1;

    // "1", "-2", "1bar", "-1bar".
    std::string str() const;
    static Label parse(std::string_view text);
    Label negated() const { return {index, orthogonal, -sign}; }

    friend bool operator==(const Label&, const Label&) = default;
};

struct Flag {
    std::vector<Label> entries;

    // <1, ..., n, 1bar, ..., mbar>
    static Flag standard(const GroupShape& shape);
    Flag negated() const;
    // Throws std::invalid_argument unless every label pair occurs exactly once.
    void validate(const GroupShape& shape) const;
    std::string str() const;
    // Comma- or space-separated labels, optionally wrapped in <> or [].
    static Flag parse(std::string_view text);

    friend bool operator==(const Flag&, const Flag&) = default;
};

// Weight pi_a of a label: ±delta_i or ±eps_i.
WeightVec label_weight(const Label& a, const GroupShape& shape);

struct Root {
    WeightVec vec;
    Parity parity = Parity::EVEN;
    bool isotropic = false;

    friend bool operator==(const Root& a, const Root& b) { return a.vec == b.vec; }
    friend auto operator<=>(const Root& a, const Root& b) { return a.vec <=> b.vec; }
};

Root make_root(const WeightVec& v, const GroupShape& shape);

// Sorted by vector.
std::vector<Root> roots(const GroupShape& shape);
std::vector<Root> phi_plus(const Flag& flag, const GroupShape& shape);

enum class MoveType { TRANSPOSE, FLIP_SYMPLECTIC, FLIP_ORTHOGONAL };

struct AdjMove {
    MoveType type = MoveType::TRANSPOSE;
    int position = 0;  // 1-based s for TRANSPOSE: swaps a_s and a_{s+1}

    std::string str() const;
    friend bool operator==(const AdjMove&, const AdjMove&) = default;
};

enum class Levi { GL2, GL11, SPO21, SO3, SL2 };

const char* to_string(Levi l) noexcept;

struct MoveResult {
    Flag flag;
    Root alpha;
    Levi levi = Levi::GL2;
    std::vector<Root> removed;  // Phi+(F) \ Phi+(F')
    std::vector<Root> added;    // Phi+(F') \ Phi+(F)
};

// Throws std::invalid_argument for moves that do not apply to the flag.
MoveResult apply_move(const Flag& flag, const AdjMove& move, const GroupShape& shape);

struct ChainStep {
    Flag from;
    AdjMove move;
    Root alpha;
    Levi levi = Levi::GL2;
    Flag to;
};

// From the standard flag to its negative. In EVEN type negating the last orthogonal entry
// does not change the Borel; such relabelings appear as a step whose `from` differs from the
// previous step's `to`.
struct Chain {
    Flag start;
    Flag end;
    std::vector<ChainStep> steps;

    // Every flag visited, including relabelings, without consecutive repeats.
    std::vector<Flag> flags() const;
};

Chain chain_of_borels(const GroupShape& shape);

struct RhoParts {
    WeightVec rho0, rho1, rho;
};

RhoParts rho_parts(const Flag& flag, const GroupShape& shape);

// (delta_i, delta_j) = [i = j], (eps_i, eps_j) = -[i = j], mixed terms 0.
// Throws std::domain_error if the value is not in (1/2)Z.
HalfInt pairing(const WeightVec& x, const WeightVec& y, const GroupShape& shape);

// lambda + (p^r - 1)(rho0(F) - rho0) + (rho1(F) - rho1) for the standard rho0, rho1.
WeightVec lambda_bracket(const WeightVec& lambda, const Flag& flag, const GroupShape& shape, int r,
                         Prime p);

LaurentPolyN ch_Zr_flag(const WeightVec& lambda, const Flag& flag, const GroupShape& shape, int r,
                        Prime p);

}  // namespace ospl
