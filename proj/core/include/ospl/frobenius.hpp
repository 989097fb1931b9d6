#pragma once

#include <vector>

#include "ospl/characters.hpp"
#include "ospl/spo21.hpp"

namespace ospl {

// Bases of the G_rT-induced modules. Here i in [0, p^r) counts the x1,-1 exponent (MINUS,
// monomial x11^{l-i-eps} x1,-1^i x1,0^eps, weight l-2i-eps) or the x-1,1 exponent (PLUS,
// monomial x-1,-1^{k-i-eps} x-1,1^i x-1,0^eps, weight 2i-k+eps). Exponents of the
// group-like generators may be negative.

i64 weight_r(const BasisMonomial& m, i64 deg);

std::vector<BasisMonomial> basis_H0_r(i64 deg, int r, Prime p, Side side);

// C(n, k) mod p for 0 <= k < p^r and any integer n, read through n mod p^r.
int binom_mod_r(i64 n, i64 k, int r, Prime p);

std::vector<BasisMonomial> socle_basis_r(i64 l, int r, Prime p, Side side);

// Characters of H0_{r,-}(l) and L_{r,-}(l).
LaurentPoly1 ch_H0_r(i64 l, int r, Prime p);
LaurentPoly1 ch_L_r(i64 l, int r, Prime p);

// Left action on the PLUS basis of H0_{r,+}(-k) (f^(t) for 1 <= t < p^r, and y).
VectorExpr act_r(DistOp op, i64 t, const VectorExpr& v, i64 k, int r, Prime p);

int hom_r(i64 k, i64 l, int r, Prime p);

// Writes k = t p^r + s with 0 <= s < p^r; returns s + p^r.
i64 k_tilde(i64 k, int r, Prime p);

MorphismTable psi_r_table(i64 k, int r, Prime p);

FactorMultiset comp_factors_r(i64 l, int r, Prime p);

int block_of_r(i64 l, Prime p);

KerImCoker psi_r_ker_im_coker(i64 k, int r, Prime p);

}  // namespace ospl
