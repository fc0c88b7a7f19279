#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motarr/arrangement.hpp"

namespace motarr {

// Sparse polynomial in x_1..x_N with coefficients in K[letters, letters^-1].
class Polynomial {
public:
    using Monomial = std::pair<std::vector<long>, std::map<std::string, int>>;

    Polynomial(Field field, std::size_t vars) : field_(field), vars_(vars) {}

    static Polynomial constant(Field field, std::size_t vars, const FieldUnit& c);
    static Polynomial from_form(Field field, const Hyperplane& h);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(unsigned long e) const;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

private:
    void add(const Monomial& m, const Scalar& c);

    Field field_;
    std::size_t vars_;
    std::map<Monomial, Scalar> terms_;
};

// Exact test of sum_k units[k] == c as rational functions on U.
bool units_sum_to(const Arrangement& arr, const std::vector<UnitElement>& units, long c);

}  // namespace motarr
