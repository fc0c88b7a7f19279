#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "motarr/arrangement.hpp"
#include "motarr/milnor.hpp"
#include "motarr/os_algebra.hpp"

namespace motarr {

// Sum of c_S * [phi_S], where [phi_S] is the product of generators in
// increasing index order and c_S sits to the left.
using WordSum = std::map<Subset, Coefficient, SubsetOrder>;

void add_to(WordSum& w, Subset s, const Coefficient& c);
// Product of word sums; repeated generators use [f]^2 = -[-1][f].
WordSum multiply_words(const WordSum& a, const WordSum& b, const Field& field);

// Element of H(U) written on the module basis of one ring.
class CohomologyElement {
public:
    using Terms = std::map<Subset, Coefficient, SubsetOrder>;

    CohomologyElement(std::string context, Field field) : context_(std::move(context)), field_(field) {}

    const std::string& context() const { return context_; }
    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(Subset s, const Coefficient& c);
    CohomologyElement operator+(const CohomologyElement& o) const;
    CohomologyElement operator-(const CohomologyElement& o) const;
    // c * x with the coefficient on the left.
    CohomologyElement left_multiply(const Coefficient& c) const;

    Decision is_zero() const;
    std::string to_string() const;
    bool operator==(const CohomologyElement& o) const { return context_ == o.context_ && terms_ == o.terms_; }

private:
    void check_same(const CohomologyElement& o) const;

    std::string context_;
    Field field_;
    Terms terms_;
};

Decision equal(const CohomologyElement& a, const CohomologyElement& b);
// Coefficient-wise certify_zero.
Decision certify_zero(const CohomologyElement& x);

using Rng = std::mt19937_64;

// Uniform draw from [0, n) by rejection; the sequence depends only on the seed.
std::uint64_t draw(Rng& rng, std::uint64_t n);

class CohomologyRing {
public:
    // The module basis is built with `pivot` as the first recursion step.
    explicit CohomologyRing(Arrangement arr, std::size_t pivot = 0);

    const Arrangement& arrangement() const { return arr_; }
    const Field& field() const { return arr_.field(); }
    std::size_t pivot() const { return pivot_; }
    const std::vector<Subset>& basis() const { return basis_; }
    const OrlikSolomon& os() const { return os_; }
    const std::string& context() const { return context_; }

    CohomologyElement zero() const;
    CohomologyElement one() const;
    CohomologyElement constant(const Coefficient& c) const;
    CohomologyElement basis_element(Subset s) const;
    CohomologyElement unit_class(const UnitElement& u) const;

    CohomologyElement multiply(const CohomologyElement& x, const CohomologyElement& y, Rng* rng = nullptr) const;
    // Expands the whole product of unit classes before straightening.
    CohomologyElement reduce_word(const std::vector<UnitElement>& units, Rng* rng = nullptr) const;

    // Straightening to no-broken-circuit words; `rng` picks among applicable rewrites.
    WordSum straighten(const WordSum& w, Rng* rng = nullptr) const;
    CohomologyElement from_words(const WordSum& w, Rng* rng = nullptr) const;
    CohomologyElement from_nbc(const WordSum& nbc) const;
    WordSum to_nbc(const CohomologyElement& x) const;
    WordSum words(const CohomologyElement& x) const;
    // Same element on another basis of the same arrangement.
    CohomologyElement convert(const CohomologyElement& x, const CohomologyRing& target) const;

    WordSum unit_word(const UnitElement& u) const;

    // Relation elements; each must reduce to zero.
    CohomologyElement rel_sum_one(const std::vector<UnitElement>& units) const;
    CohomologyElement rel_square(const UnitElement& u) const;
    CohomologyElement rel_R(const std::vector<UnitElement>& units) const;
    // R~ without the sum condition.
    CohomologyElement r_tilde(const std::vector<UnitElement>& units) const;

    // Residue along Y_j: writes x = [phi_j] * alpha(x1) + alpha(x2) on the
    // pivot-j basis and returns iota(x1) on the default basis of the restriction.
    CohomologyElement gysin_residue(const CohomologyElement& x, std::size_t j) const;

    // Degree-zero coefficient parts, as an element of Lambda Q / L in nbc coordinates.
    ExteriorElement a0_projection(const CohomologyElement& x) const;

    void check(const CohomologyElement& x) const;

private:
    struct Rewrite {
        Subset lhs;
        std::vector<std::pair<Subset, Coefficient>> rhs;
    };

    Arrangement arr_;
    std::size_t pivot_;
    std::string context_;
    OrlikSolomon os_;
    std::vector<Subset> basis_;
    std::vector<Rewrite> rules_;
    // straightened basis monomials and inverses of their diagonal blocks
    std::map<Subset, WordSum> transition_;
    std::map<std::size_t, std::map<Subset, std::map<Subset, mpz_class>>> inverse_block_;
};

struct TamePair {
    FieldUnit value;
    Subset flat;
};

std::vector<TamePair> tame_symbol(const CohomologyRing& ring, const std::vector<UnitElement>& units);

struct LinePair {
    FieldUnit value;
    Scalar point;
};

// Closed formula on A^1 minus points p_i; f and g are units for the forms x - p_i.
std::vector<LinePair> tame_symbol_line(const std::vector<Scalar>& points, const UnitElement& f, const UnitElement& g);

// A^1 minus the given points, with chosen forms x - p_i.
Arrangement punctured_line(const Field& field, const std::vector<Scalar>& points);

}  // namespace motarr
