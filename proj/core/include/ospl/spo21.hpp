#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ospl/characters.hpp"
#include "ospl/padic.hpp"

namespace ospl {

// MINUS(l): x11^{l-i-eps} x1,-1^i x1,0^eps.  PLUS(k): x-1,-1^i x-1,1^{k-i-eps} x-1,0^eps.
// For the Frobenius-thickened bases the index i counts the x1,-1 (MINUS) or x-1,1 (PLUS)
// exponent instead; see frobenius.hpp.
struct BasisMonomial {
    Side side = Side::MINUS;
    i64 i = 0;
    int eps = 0;

    friend auto operator<=>(const BasisMonomial&, const BasisMonomial&) = default;
};

std::string to_string(const BasisMonomial& m, i64 degree);

using VectorExpr = std::map<BasisMonomial, int>;

enum class Parity { EVEN, ODD };

const char* to_string(Parity p) noexcept;

// Weight of a basis monomial of H0_-(l) or H0_+(-k); deg is l or k. Both equal deg-2i-eps.
i64 weight(const BasisMonomial& m, i64 deg);

Parity parity(const BasisMonomial& m) noexcept;

std::vector<BasisMonomial> basis_H0(i64 deg, Side side);

std::vector<BasisMonomial> socle_basis(i64 l, Prime p, Side side);

// Generators of Dist: f^(t), y, e^(t), x (t ignored for y and x).
enum class DistOp { F, Y, E, X };

// Left action on H0_-(deg) or H0_+(-deg), extended linearly; coefficients mod p.
VectorExpr act(DistOp op, i64 t, const VectorExpr& v, i64 deg, Prime p);

// Closed-form spanning monomials of rad_{B^-} H0_+(-k).
std::vector<BasisMonomial> rad_basis(i64 k, Prime p);

struct HomDim {
    int dim = 0;
    Parity parity = Parity::EVEN;

    friend bool operator==(const HomDim&, const HomDim&) = default;
};

HomDim hom_dim(i64 k, i64 l, Prime p);

// (k, j) for which psi_{-k,k-1-2j} exists.
bool admissible(i64 k, i64 j, Prime p);

// PLUS(k) monomial -> MINUS(k) monomial with the same exponents.
BasisMonomial iso_k(const BasisMonomial& v, i64 k);

struct TableRow {
    BasisMonomial source;
    BasisMonomial target;
    bool target_valid = false;  // target exponents inside the codomain basis
    int coeff = 0;              // residue mod p; 0 whenever !target_valid
    int raw_coeff = 0;          // closed-form residue before the range check
};

struct MorphismTable {
    i64 source_degree = 0;  // k of H0_+(-k)
    i64 target_degree = 0;  // l of H0_-(l)
    std::vector<TableRow> rows;

    VectorExpr apply(const BasisMonomial& source) const;
};

MorphismTable psi_table(i64 k, i64 j, Prime p);

std::vector<BasisMonomial> kernel_basis(i64 k, i64 j, Prime p);

FactorMultiset comp_factors_H0_spo(i64 l, Prime p);

int block_of(i64 l, Prime p);

struct KerImCoker {
    FactorMultiset ker, im, coker;
};

KerImCoker ker_im_coker_factors(i64 k, i64 j, Prime p);

// Image factors through the alternative word description, using the correspondence
// w -> z = "<≤..≤" z_t w_{t+1}... of the image argument. Defined when the digit of k
// at position t is nonzero (t = number of digits of j); throws std::domain_error otherwise.
FactorMultiset image_factors_reindexed(i64 k, i64 j, Prime p);

}  // namespace ospl
