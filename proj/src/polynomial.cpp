#include "motarr/polynomial.hpp"

#include <algorithm>

namespace motarr {

void Polynomial::add(const Monomial& m, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

Polynomial Polynomial::constant(Field field, std::size_t vars, const FieldUnit& c)
{
    Polynomial p(field, vars);
    p.add({std::vector<long>(vars, 0), c.letters()}, c.value());
    return p;
}

Polynomial Polynomial::from_form(Field field, const Hyperplane& h)
{
    const std::size_t n = h.coeffs.size();
    Polynomial p(field, n);
    p.add({std::vector<long>(n, 0), {}}, h.constant);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        p.add({e, {}}, h.coeffs[i]);
    }
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial p = *this;
    for (const auto& [m, c] : o.terms_)
        p.add(m, c);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial p = *this;
    for (const auto& [m, c] : o.terms_)
        p.add(m, -c);
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    Polynomial p(field_, vars_);
    for (const auto& [a, x] : terms_) {
        for (const auto& [b, y] : o.terms_) {
            Monomial m = a;
            for (std::size_t i = 0; i < vars_; ++i)
                m.first[i] += b.first[i];
            for (const auto& [name, e] : b.second) {
                int& slot = m.second[name];
                slot += e;
                if (slot == 0)
                    m.second.erase(name);
            }
            p.add(m, x * y);
        }
    }
    return p;
}

Polynomial Polynomial::pow(unsigned long e) const
{
    Polynomial result = constant(field_, vars_, FieldUnit(Scalar(field_, 1)));
    for (unsigned long i = 0; i < e; ++i)
        result = result * *this;
    return result;
}

bool units_sum_to(const Arrangement& arr, const std::vector<UnitElement>& units, long c)
{
    const std::size_t r = arr.size(), n = arr.dimension();
    std::vector<long> denominator(r, 0);
    for (const auto& u : units) {
        if (u.exponents.size() != r)
            return false;
        for (std::size_t i = 0; i < r; ++i)
            denominator[i] = std::max(denominator[i], -u.exponents[i]);
    }
    std::vector<Polynomial> forms;
    for (std::size_t i = 0; i < r; ++i)
        forms.push_back(Polynomial::from_form(arr.field(), arr.chosen(i)));
    auto monomial = [&](const FieldUnit& lambda, const std::vector<long>& e) {
        Polynomial p = Polynomial::constant(arr.field(), n, lambda);
        for (std::size_t i = 0; i < r; ++i)
            p = p * forms[i].pow(static_cast<unsigned long>(e[i]));
        return p;
    };
    Polynomial lhs(arr.field(), n);
    for (const auto& u : units) {
        std::vector<long> e(r);
        for (std::size_t i = 0; i < r; ++i)
            e[i] = u.exponents[i] + denominator[i];
        lhs = lhs + monomial(u.scalar, e);
    }
    Polynomial rhs(arr.field(), n);
    if (c != 0)
        rhs = monomial(FieldUnit(Scalar(arr.field(), c)), denominator);
    return (lhs - rhs).is_zero();
}

}  // namespace motarr
