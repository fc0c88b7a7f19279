#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "motarr/arrangement.hpp"
#include "motarr/exterior.hpp"

namespace motarr {

// Generators of L: e_C for circuits with empty flat, the boundary
// sum_k (-1)^(k-1) e_{C - c_k} for circuits with a codimension drop.
std::vector<ExteriorElement> os_generators(const Arrangement& arr);

struct GradedRanks {
    std::vector<std::size_t> ranks;                         // degree 0..r
    std::vector<std::vector<mpz_class>> elementary_divisors;  // nonzero SNF diagonal per degree
    std::vector<std::size_t> rational_ranks;                 // rank of L_d over Q, independent pass
};

GradedRanks graded_rank(const Arrangement& arr);

// Integer spanning rows of the degree-d piece of L, one column per d-subset in
// `degree_monomials(r, d)` order.
IntMatrix ideal_rows(const Arrangement& arr, const std::vector<ExteriorElement>& generators, std::size_t d);
std::vector<Subset> degree_monomials(std::size_t r, std::size_t d);

// Quotient Lambda_Z Q / L in no-broken-circuit coordinates.
class OrlikSolomon {
public:
    explicit OrlikSolomon(const Arrangement& arr);

    const std::vector<AffineDependency>& circuits() const { return circuits_; }
    const std::vector<Subset>& nbc() const { return nbc_; }
    bool is_nbc(Subset s) const;

    // Unique representative supported on nbc monomials.
    ExteriorElement reduce(const ExteriorElement& x) const;
    ExteriorElement reduce_monomial(Subset s) const;
    ExteriorElement multiply(const ExteriorElement& a, const ExteriorElement& b) const;

private:
    std::vector<AffineDependency> circuits_;
    std::vector<Subset> empty_circuits_;
    std::vector<Subset> central_circuits_;
    std::vector<Subset> nbc_;
};

std::vector<Subset> nbc_basis(const Arrangement& arr);

}  // namespace motarr
