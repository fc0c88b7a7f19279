#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "motarr/arrangement.hpp"
#include "motarr/exterior.hpp"

namespace motarr {

struct TwistMultiset {
    std::map<std::size_t, std::size_t> counts;  // twist n -> multiplicity

    std::size_t total() const;
    bool operator==(const TwistMultiset&) const = default;
};

// twists(A) = twists(A - H_1) + shift(twists(A | H_1)), twists(empty) = {0}.
TwistMultiset tate_twists(const Arrangement& arr);

// Coefficient of t^n is the multiplicity of twist n.
std::vector<std::size_t> poincare_polynomial(const Arrangement& arr);

// basis(A) = basis(A - H_j) followed by {j} + lift(basis(A | H_j)); the lift
// of a restricted hyperplane is the smallest index tracing onto it. Below the
// top level the recursion always pivots on the first hyperplane.
std::vector<Subset> module_basis(const Arrangement& arr, std::size_t pivot = 0);

std::size_t module_rank(const Arrangement& arr);

}  // namespace motarr
