#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "motarr/cohomology.hpp"

namespace motarr {

struct RelationSuiteResult {
    std::map<std::string, std::size_t> instances;  // kind -> count
    std::map<std::string, std::size_t> failures;
    std::vector<std::string> samples;               // first few failures
    // zero only after the K_*(Q) residue invariants; the syntactic normal form was not empty
    std::size_t certified = 0;

    std::size_t total() const;
    std::size_t failed() const;
};

// Random instances of the defining relations of H(U), each of which must
// reduce to zero, plus R(f_1, ..., f_{t-1}, -1) = (-1)^t [f_1]...[f_{t-1}].
// Kinds: "sum_one", "square", "R", "minus_one".
RelationSuiteResult relation_suite(const CohomologyRing& ring, Rng& rng, std::size_t trials);

// Random unit with exponents in [-2, 2] and a small random constant.
UnitElement random_unit(const Arrangement& arr, Rng& rng);
FieldUnit random_constant(const Field& field, Rng& rng);

}  // namespace motarr
