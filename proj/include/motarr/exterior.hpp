#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace motarr {

// Index subset of {0..63}, bit i standing for hyperplane i (0-based).
using Subset = std::uint64_t;

inline int subset_size(Subset s) { return std::popcount(s); }
inline bool subset_has(Subset s, std::size_t i) { return (s >> i) & 1U; }
inline Subset bit(std::size_t i) { return Subset{1} << i; }
inline Subset below(std::size_t i) { return bit(i) - 1; }

std::vector<std::size_t> subset_indices(Subset s);
Subset subset_from(const std::vector<std::size_t>& indices);
// "{1,3}" with 1-based indices.
std::string subset_string(Subset s);

// Sign of e_a ^ e_b relative to e_{a|b}; 0 when a and b meet.
int wedge_sign(Subset a, Subset b);

// Degree first, then lexicographic on the sorted index lists.
struct SubsetOrder {
    bool operator()(Subset a, Subset b) const;
};

// Integer combination of exterior monomials e_S.
class ExteriorElement {
public:
    using Terms = std::map<Subset, mpz_class, SubsetOrder>;

    ExteriorElement() = default;
    static ExteriorElement monomial(Subset s, const mpz_class& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Subset s, const mpz_class& c);
    ExteriorElement operator+(const ExteriorElement& o) const;
    ExteriorElement operator-(const ExteriorElement& o) const;
    ExteriorElement operator*(const mpz_class& k) const;
    ExteriorElement wedge(const ExteriorElement& o) const;

    bool operator==(const ExteriorElement& o) const = default;

    std::string to_string() const;

private:
    Terms terms_;
};

}  // namespace motarr
