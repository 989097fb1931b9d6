#pragma once

#include <functional>
#include <vector>

#include "ospl/frobenius.hpp"
#include "ospl/rootdata.hpp"
#include "ospl/spo21.hpp"

// Brute-force computations used to cross-check the closed forms.
namespace ospl::oracle {

// Monomials of H0_+(-k) outside the span of all f^(t)v and yv, by elimination mod p.
std::vector<BasisMonomial> rad_quotient(i64 k, Prime p);
HomDim hom_dim(i64 k, i64 l, Prime p);

// Same for H0_{r,+}(-k) under f^(t) (t < p^r) and y.
std::vector<BasisMonomial> rad_quotient_r(i64 k, int r, Prime p);
int hom_r(i64 k, i64 l, int r, Prime p);

// Character of the image of a morphism table, weights read in the target.
LaurentPoly1 image_character(const MorphismTable& t, bool frobenius);

struct RankNullity {
    bool weights_preserved = true;
    bool balanced = true;  // per weight: #sources = rank + #kernel monomials
};

RankNullity rank_nullity(const MorphismTable& t, const std::vector<BasisMonomial>& kernel, Prime p,
                         bool frobenius);

// Weights l in [lo, hi], joined whenever two of them are factors of a common module
// factors(q), q in [lo, hi]. Components sorted by smallest member.
std::vector<std::vector<i64>> shared_factor_components(
    i64 lo, i64 hi, const std::function<FactorMultiset(i64)>& factors);

// Roots on which h(pi_{a_s}) = m+n+1-s is positive.
std::vector<Root> phi_plus(const Flag& flag, const GroupShape& shape);

}  // namespace ospl::oracle
