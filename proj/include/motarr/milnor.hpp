#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "motarr/scalar.hpp"

namespace motarr {

// Indecomposable symbol [a]. On Q and the formal backend every unit is
// expanded multiplicatively into [-1], primes and letters; on F_p the whole
// degree-one group F_p^x is kept as a single residue.
struct Atom {
    enum class Kind : std::uint8_t { minus_one, prime, letter, residue };

    Kind kind = Kind::minus_one;
    mpz_class value;
    std::string name;

    static Atom minus_one() { return {}; }
    static Atom prime(mpz_class p) { return {Kind::prime, std::move(p), {}}; }
    static Atom letter(std::string n) { return {Kind::letter, 0, std::move(n)}; }
    static Atom residue(std::uint64_t r);

    std::strong_ordering operator<=>(const Atom& o) const;
    bool operator==(const Atom& o) const { return (*this <=> o) == 0; }

    std::string to_string() const;
};

// A product [a_1]...[a_p] of atoms in canonical (sorted) order.
using MilnorTerm = std::vector<Atom>;

struct TermOrder {
    bool operator()(const MilnorTerm& a, const MilnorTerm& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

enum class Decision { zero, nonzero, unknown };

const char* decision_name(Decision d);

// Graded integer combination of Milnor symbols over a fixed backend. Every
// value is kept in normal form; the backend rules are
//   - graded sign when atoms are reordered,
//   - [a][a] = -[-1][a],
//   - 2[-1] = 0, so any term containing [-1] has a coefficient mod 2,
//   - [-1][2] = 0 on Q and formal (Steinberg for 2 + (-1) = 1),
//   - all of degree >= 2 vanishes on F_p.
class Coefficient {
public:
    using Terms = std::map<MilnorTerm, mpz_class, TermOrder>;

    Coefficient() = default;
    explicit Coefficient(const Field& field) : field_(field) {}

    static Coefficient integer(const Field& field, const mpz_class& n);
    static Coefficient one(const Field& field) { return integer(field, 1); }
    // Degree-one symbol [lambda]; symbol(1) = 0.
    static Coefficient symbol(const FieldUnit& unit, const Field& field);

    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Largest / smallest degree present; -1 when empty.
    int max_degree() const;
    int min_degree() const;
    bool is_homogeneous() const;
    Coefficient homogeneous_part(int degree) const;
    mpz_class degree_zero_part() const;

    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator-() const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o) { return *this += -o; }
    Coefficient scaled(const mpz_class& n) const;

    // Multiplies the degree-d part by (-1)^(k*d): the sign picked up when
    // this coefficient is moved past k degree-one generators.
    Coefficient graded_twist(std::size_t k) const;

    Decision is_zero() const;

    // For a homogeneous degree-one element [lambda] (or 0), returns lambda.
    std::optional<FieldUnit> as_unit() const;

    std::string to_string() const;

    bool operator==(const Coefficient& o) const { return field_ == o.field_ && terms_ == o.terms_; }

private:
    void add_term(MilnorTerm factors, mpz_class coefficient);
    void collapse_residues();

    Field field_ = Field::rational();
    Terms terms_;
};

Decision equal(const Coefficient& a, const Coefficient& b);

// Like is_zero, but letter-free terms of degree >= 2 on Q are decided through
// K_2(Q) = Z/2 + sum_{p odd} F_p^x (real symbol and tame symbols at odd primes)
// and K_n(Q) = Z/2 for n >= 3 (sign of [-1]^n). Letters stay unknown.
Decision certify_zero(const Coefficient& c);

// Prime factorization of a positive integer, ascending primes.
std::vector<std::pair<mpz_class, int>> factor_positive(const mpz_class& n);

}  // namespace motarr
