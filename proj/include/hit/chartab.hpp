#pragma once

#include <complex>
#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "hit/action.hpp"
#include "hit/perm.hpp"

namespace hit {

// Conjugacy classes of a materialized group, in the order of
// PermGroup::classes().
struct ClassData {
    PermGroup group;
    std::vector<Permutation> reps;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint64_t> rep_orders;
    std::vector<std::size_t> inverse;  // class of reps[i]^-1
    std::uint64_t order = 1;
    std::uint64_t exponent = 1;

    std::size_t num_classes() const { return reps.size(); }
    std::size_t class_of(const Permutation& p) const;
    // Class of reps[i]^k.
    std::size_t power_class(std::size_t i, long long k) const;
};

ClassData conjugacy_classes(const PermGroup& g);

// Integer-valued class function, one value per class.
struct ClassFunction {
    std::vector<long long> values;

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator*(long long c, const ClassFunction& a);

ClassFunction principal_character(const ClassData& cd);
// Fixed-point counts of the induced action on each class representative.
ClassFunction permutation_character(const ClassData& cd, const Action& action);
ClassFunction permutation_character(const ClassData& cd);

// (1/|G|) sum over classes of size * a * b.  Integer class functions are
// real, so no conjugation is needed.
mpq_class inner_product(const ClassData& cd, const ClassFunction& a, const ClassFunction& b);

// Element of Z[zeta_e], stored as coefficients of zeta_e^0 .. zeta_e^(e-1).
// The representation is not unique; comparisons reduce modulo the e-th
// cyclotomic polynomial.
class Cyclotomic {
public:
    explicit Cyclotomic(int e = 1, long long value = 0);
    static Cyclotomic zeta_power(int e, long long a);

    int base() const { return static_cast<int>(c_.size()); }
    const std::vector<long long>& coefficients() const { return c_; }

    Cyclotomic conj() const;
    // Coefficients modulo Phi_e, length phi(e).
    std::vector<long long> reduced() const;
    std::optional<long long> as_integer() const;
    std::complex<double> to_complex() const;
    std::string to_string() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(long long k, const Cyclotomic& a);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

private:
    std::vector<long long> c_;
};

// Coefficients of Phi_e, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(int e);

struct CharacterTable {
    ClassData classes;
    std::uint64_t prime = 0;  // modulus used by the Dixon-Burnside step
    std::vector<std::vector<Cyclotomic>> rows;
    std::vector<std::uint64_t> degrees;
};

// Dixon-Burnside over GF(p) with p = 1 mod exp(G), lifted to exact values.
// Every row is checked against row and column orthogonality before
// returning.  Throws CapExceeded above limits().table_cap or
// limits().table_classes.
CharacterTable character_table(const PermGroup& g);

enum class CharStatus { Character, NotCharacter, Undecided };

struct CharacterCheck {
    CharStatus status = CharStatus::Undecided;
    std::vector<mpq_class> multiplicities;  // per table row, when decided by a table
    std::string method;                     // "table", "2-transitive" or "undecided-general"
};

const char* to_string(CharStatus s);

CharacterCheck is_character(const ClassFunction& f, const CharacterTable& table);

// Decides whether pi_F - pi_E is a character of g.  Uses the supplied
// table, else computes one within the caps, else falls back to the
// 2-transitive test: for E 2-transitive and F transitive the difference is a
// character exactly when g has at least two orbits on E x F.
CharacterCheck difference_is_character(const PermGroup& g, const Action& e, const Action& f,
                                       const CharacterTable* table = nullptr, bool allow_table = true);

}  // namespace hit
