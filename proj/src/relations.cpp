#include "motarr/relations.hpp"

#include <algorithm>
#include <optional>

#include "motarr/error.hpp"
#include "motarr/io.hpp"

namespace motarr {

std::size_t RelationSuiteResult::total() const
{
    std::size_t n = 0;
    for (const auto& [k, v] : instances)
        n += v;
    return n;
}

std::size_t RelationSuiteResult::failed() const
{
    std::size_t n = 0;
    for (const auto& [k, v] : failures)
        n += v;
    return n;
}

FieldUnit random_constant(const Field& field, Rng& rng)
{
    for (;;) {
        long a = static_cast<long>(draw(rng, 11)) - 5;
        long b = field.is_prime() ? 1 : static_cast<long>(draw(rng, 4)) + 1;
        if (field.is_prime() && a % static_cast<long>(field.characteristic()) == 0)
            continue;
        if (a == 0)
            continue;
        FieldUnit u(Scalar(field, mpq_class(a, b)));
        if (field.is_formal() && draw(rng, 4) == 0)
            u = u * FieldUnit::letter(Scalar(field, 1), draw(rng, 2) ? "s" : "t", draw(rng, 2) ? 1 : -1);
        return u;
    }
}

UnitElement random_unit(const Arrangement& arr, Rng& rng)
{
    UnitElement u = unit_constant(arr, random_constant(arr.field(), rng));
    for (auto& e : u.exponents)
        e = draw(rng, 2) ? static_cast<long>(draw(rng, 5)) - 2 : 0;
    return u;
}

namespace {

UnitElement scaled(const UnitElement& u, const Scalar& s)
{
    UnitElement v = u;
    v.scalar = v.scalar * FieldUnit(s);
    return v;
}

template <class T>
void shuffle(std::vector<T>& v, Rng& rng)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[draw(rng, i)]);
}

// Units lambda_k phi_{c_k} of a circuit sum_k lambda_k phi_{c_k} = constant.
std::vector<UnitElement> circuit_units(const Arrangement& arr, const AffineDependency& dep)
{
    std::vector<UnitElement> out;
    auto idx = subset_indices(dep.indices);
    for (std::size_t k = 0; k < idx.size(); ++k)
        out.push_back(scaled(unit_generator(arr, idx[k]), dep.lambdas[k]));
    return out;
}

class Generator {
public:
    Generator(const CohomologyRing& ring, Rng& rng) : arr_(ring.arrangement()), rng_(rng)
    {
        for (const auto& c : ring.os().circuits())
            (c.constant ? affine_ : central_).push_back(c);
    }

    std::vector<UnitElement> zero_sum()
    {
        std::vector<UnitElement> out;
        if (!central_.empty() && draw(rng_, 3)) {
            const auto& c = central_[draw(rng_, central_.size())];
            UnitElement g = random_unit(arr_, rng_);
            for (auto& u : circuit_units(arr_, c))
                out.push_back(g * u);
        }
        // cancelling pairs keep the sum at zero
        std::size_t pairs = out.empty() ? 1 + draw(rng_, 2) : draw(rng_, 2);
        for (std::size_t k = 0; k < pairs; ++k) {
            UnitElement f = random_unit(arr_, rng_);
            out.push_back(f);
            out.push_back(scaled(f, -arr_.one()));
        }
        shuffle(out, rng_);
        return out;
    }

    std::optional<std::vector<UnitElement>> one_sum()
    {
        std::vector<std::vector<UnitElement>> options;
        for (int attempt = 0; attempt < 4; ++attempt) {
            FieldUnit a = random_constant(arr_.field(), rng_);
            Scalar b = arr_.one() - a.value();
            if (a.is_concrete() && !b.is_zero())
                options.push_back({unit_constant(arr_, a), unit_constant(arr_, FieldUnit(b))});
        }
        if (!affine_.empty())
            options.push_back(circuit_units(arr_, affine_[draw(rng_, affine_.size())]));
        if (!central_.empty()) {
            // sum_k lambda_k phi_k = 0 divided by one of its terms
            auto units = circuit_units(arr_, central_[draw(rng_, central_.size())]);
            std::size_t m = draw(rng_, units.size());
            UnitElement d = scaled(units[m], -arr_.one()).inverse();
            std::vector<UnitElement> out;
            for (std::size_t k = 0; k < units.size(); ++k)
                if (k != m)
                    out.push_back(units[k] * d);
            options.push_back(out);
        }
        if (options.empty())
            return std::nullopt;
        auto out = options[draw(rng_, options.size())];
        shuffle(out, rng_);
        return out;
    }

private:
    const Arrangement& arr_;
    Rng& rng_;
    std::vector<AffineDependency> affine_, central_;
};

std::string describe(const Arrangement& arr, const std::string& kind, const std::vector<UnitElement>& units)
{
    std::string s = kind + "(";
    for (std::size_t k = 0; k < units.size(); ++k)
        s += (k ? "; " : "") + unit_to_string(arr, units[k]);
    return s + ")";
}

}  // namespace

RelationSuiteResult relation_suite(const CohomologyRing& ring, Rng& rng, std::size_t trials)
{
    const Arrangement& arr = ring.arrangement();
    Generator gen(ring, rng);
    RelationSuiteResult result;
    const std::vector<std::string> kinds{"sum_one", "square", "R", "minus_one"};
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::string kind = kinds[draw(rng, kinds.size())];
        std::vector<UnitElement> units;
        if (kind == "sum_one") {
            auto u = gen.one_sum();
            if (!u)
                kind = "square";
            else
                units = *u;
        }
        if (kind == "square")
            units = {random_unit(arr, rng)};
        else if (kind == "R")
            units = gen.zero_sum();
        else if (kind == "minus_one")
            for (std::size_t k = 1 + draw(rng, 3); k > 0; --k)
                units.push_back(random_unit(arr, rng));
        ++result.instances[kind];
        std::string what;
        try {
            CohomologyElement x = ring.zero();
            if (kind == "sum_one") {
                x = ring.rel_sum_one(units);
            } else if (kind == "square") {
                x = ring.rel_square(units[0]);
            } else if (kind == "R") {
                x = ring.rel_R(units);
            } else {
                auto with = units;
                with.push_back(unit_constant(arr, FieldUnit(-arr.one())));
                const long sign = with.size() % 2 ? -1 : 1;
                x = ring.r_tilde(with) -
                    ring.reduce_word(units).left_multiply(Coefficient::integer(arr.field(), sign));
            }
            Decision d = x.is_zero();
            if (d == Decision::unknown) {
                d = certify_zero(x);
                result.certified += d == Decision::zero;
            }
            if (d != Decision::zero)
                what = std::string(decision_name(d)) + ": " + x.to_string();
        } catch (const Error& e) {
            what = e.what();
        }
        if (!what.empty()) {
            ++result.failures[kind];
            if (result.samples.size() < 5)
                result.samples.push_back(describe(arr, kind, units) + " -> " + what);
        }
    }
    return result;
}

}  // namespace motarr
