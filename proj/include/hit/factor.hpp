#pragma once

#include <gmpxx.h>
#include <vector>

#include "hit/poly.hpp"

namespace hit {

struct FactorPower {
    RationalUniPoly factor;  // primitive integer polynomial, positive leading coefficient
    int multiplicity = 1;
};

struct Factorization {
    mpq_class unit;  // p = unit * prod factor^multiplicity
    std::vector<FactorPower> factors;

    int total_multiplicity() const;
    // A nonconstant polynomial is reducible iff it has at least two
    // irreducible factors counted with multiplicity.
    bool reducible() const { return total_multiplicity() >= 2; }
    RationalUniPoly expand() const;
    std::string to_string(const std::string& var = "X") const;
};

// Complete factorization over Q.  Factors are sorted by degree, then by
// coefficients.  Throws InputError for the zero polynomial.
Factorization factor_Q(const RationalUniPoly& p);

// Square-free decomposition of a primitive polynomial: pairs (a_i, i) with
// p = prod a_i^i up to a constant, each a_i square-free and nonconstant.
std::vector<FactorPower> squarefree_decomposition(const RationalUniPoly& p);

bool is_irreducible_Q(const RationalUniPoly& p);

}  // namespace hit
