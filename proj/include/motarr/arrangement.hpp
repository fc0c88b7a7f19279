#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "motarr/exterior.hpp"
#include "motarr/linalg.hpp"
#include "motarr/scalar.hpp"

namespace motarr {

// phi(x) = constant + sum coeffs[i] * x_i
struct Hyperplane {
    Scalar constant;
    Vector coeffs;

    bool operator==(const Hyperplane&) const = default;
    std::string to_string() const;
};

struct NormalizedForm {
    Hyperplane hyperplane;  // first nonzero coefficient is 1
    Scalar scale;           // input form = scale * hyperplane
};

NormalizedForm normalize_form(const Scalar& constant, const Vector& coeffs);

class Arrangement {
public:
    Arrangement(Field field, std::size_t dimension) : field_(field), dimension_(dimension) {}
    // `forms` are the chosen defining polynomials, in order.
    Arrangement(Field field, std::size_t dimension, const std::vector<Hyperplane>& forms);

    const Field& field() const { return field_; }
    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return normalized_.size(); }

    const Hyperplane& normalized(std::size_t i) const { return normalized_.at(i); }
    const Hyperplane& chosen(std::size_t i) const { return chosen_.at(i); }
    const Scalar& scale(std::size_t i) const { return scale_.at(i); }
    const std::vector<Hyperplane>& chosen_forms() const { return chosen_; }

    // Cone vector (constant, coeffs...) of the chosen form.
    Vector cone_vector(std::size_t i) const;
    Subset all() const { return size() == 64 ? ~Subset{0} : bit(size()) - 1; }

    // Identity of the underlying geometry (normalized forms and order).
    std::string key() const;
    bool same_geometry(const Arrangement& o) const;

    Scalar zero() const { return Scalar(field_, 0); }
    Scalar one() const { return Scalar(field_, 1); }

private:
    Field field_;
    std::size_t dimension_;
    std::vector<Hyperplane> normalized_;
    std::vector<Hyperplane> chosen_;
    std::vector<Scalar> scale_;
};

// Reorders hyperplanes: result hyperplane k is input hyperplane order[k].
Arrangement permute(const Arrangement& arr, const std::vector<std::size_t>& order);

struct Flat {
    Subset indices = 0;
    bool is_empty = false;
    std::size_t codim = 0;
    std::optional<std::vector<mpq_class>> witness_point;
};

Flat flat_of(const Arrangement& arr, Subset s);

struct Deletion {
    Arrangement arrangement;
    std::vector<std::optional<std::size_t>> index_map;  // old -> new
};

Deletion delete_hyperplane(const Arrangement& arr, std::size_t j);

struct Restriction {
    Arrangement arrangement;
    std::size_t pivot_variable = 0;
    // For i != j with a trace: chosen phi_i restricted to Y_j equals kappa[i] * psi_{trace_map[i]}.
    std::vector<std::optional<std::size_t>> trace_map;
    std::vector<std::optional<Scalar>> kappa;
    // For parallel hyperplanes the restriction is this nonzero constant.
    std::vector<std::optional<Scalar>> parallel_value;
};

Restriction restrict_to(const Arrangement& arr, std::size_t j);

// sum_k lambdas[k] * phi_{indices[k]} = constant, indices ascending.
struct AffineDependency {
    Subset indices = 0;
    std::vector<Scalar> lambdas;
    int constant = 0;
};

std::optional<AffineDependency> affine_dependency(const Arrangement& arr, Subset s);
bool verify_dependency(const Arrangement& arr, const AffineDependency& dep);
std::vector<AffineDependency> circuits(const Arrangement& arr);

bool is_normal_crossing(const Arrangement& arr);

// lambda * prod phi_i^{e_i} in terms of the chosen forms.
struct UnitElement {
    FieldUnit scalar;
    std::vector<long> exponents;

    UnitElement operator*(const UnitElement& o) const;
    UnitElement inverse() const;
    bool operator==(const UnitElement&) const = default;
};

UnitElement unit_one(const Arrangement& arr);
UnitElement unit_constant(const Arrangement& arr, const FieldUnit& lambda);
UnitElement unit_generator(const Arrangement& arr, std::size_t i);

// Generators of the kernel of restricting units of the deletion to Y_j,
// expressed on delete_hyperplane(arr, j).
std::vector<UnitElement> unit_kernel_generators(const Arrangement& arr, std::size_t j);

// Value of a concrete unit of `arr` restricted to Y_j, as a unit of the restriction.
UnitElement restrict_unit(const Arrangement& arr, const Restriction& res, std::size_t j, const UnitElement& u);

}  // namespace motarr
