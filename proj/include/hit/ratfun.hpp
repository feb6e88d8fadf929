#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "hit/perm.hpp"
#include "hit/poly.hpp"
#include "hit/verdict.hpp"

namespace hit {

// num/den in lowest terms with den monic.
class RationalFunction {
public:
    RationalFunction(RationalUniPoly num, RationalUniPoly den);
    static RationalFunction polynomial(RationalUniPoly p);
    // "num / den" or any expression in one variable.
    static RationalFunction parse(const std::string& text, const std::string& var = "Z");

    const RationalUniPoly& numerator() const { return num_; }
    const RationalUniPoly& denominator() const { return den_; }
    // max(deg num, deg den).
    int degree() const;
    bool is_constant() const { return degree() <= 0; }
    std::string to_string(const std::string& var = "Z") const;

private:
    RationalUniPoly num_, den_;
};

struct FiberPoint {
    RationalUniPoly factor;  // irreducible defining polynomial; empty at infinity
    bool at_infinity = false;
    int field_degree = 1;
    int multiplicity = 1;
    int real_roots = 1;
    bool real() const { return real_roots == field_degree; }
};

struct FiberProfile {
    std::vector<FiberPoint> points;
    // Number of distinct points over the algebraic closure.
    int geometric_count() const;
    int total_multiplicity() const;
};

// Fiber of g over a rational value, or over infinity when value is empty.
FiberProfile fiber_profile(const RationalFunction& g, const std::optional<mpq_class>& value);

struct Admissibility {
    bool admissible = false;
    std::string reason;
};
// Necessary pole conditions for g to be a Siegel function.
Admissibility siegel_admissible(const RationalFunction& g, FieldFlag field);

// Cycle lengths of an inertia generator over value, sorted descending.
std::vector<int> inertia_cycle_type_at(const RationalFunction& g, const std::optional<mpq_class>& value);

// Number of distinct real roots of a square-free polynomial (Sturm).
int count_real_roots(const RationalUniPoly& p);

// Whether Q(sqrt d) lies in Q(zeta_m).  d must be squarefree and not 0 or 1.
bool sqrt_in_cyclotomic(long d, long m);

enum class InfinityMode { General, QTwoRealConjugatePoles };

struct ConstraintItem {
    std::string id;
    std::string description;
    bool pass = false;
};

struct ConstraintChecklist {
    std::vector<ConstraintItem> items;
    bool all_pass() const;
    const ConstraintItem* find(const std::string& id) const;
};

// Evaluates the group-theoretic conditions that a place over infinity of a
// Siegel function imposes on (A, G, D, I = <sigma>).  G defaults to A.
// Throws InputError when I != <sigma>, sigma is not in D, D is not in A or
// G is not normal in A.
ConstraintChecklist infinity_constraints(const PermGroup& A, const PermGroup& D, const PermGroup& I,
                                         const Permutation& sigma, InfinityMode mode,
                                         const std::optional<PermGroup>& G = std::nullopt);

}  // namespace hit
