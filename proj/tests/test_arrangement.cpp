#include "doctest.h"

#include "fixtures.hpp"
#include "motarr/arrangement.hpp"
#include "motarr/error.hpp"

using namespace motarr;
using namespace fixtures;

namespace {

Subset S(std::initializer_list<std::size_t> one_based)
{
    Subset s = 0;
    for (auto i : one_based)
        s |= bit(i - 1);
    return s;
}

// Independent check: evaluate the chosen forms at a point.
Scalar eval(const Hyperplane& h, const std::vector<Scalar>& x)
{
    Scalar v = h.constant;
    for (std::size_t i = 0; i < x.size(); ++i)
        v += h.coeffs[i] * x[i];
    return v;
}

}  // namespace

TEST_CASE("normalize_form")
{
    auto f = q();
    auto a = normalize_form(Scalar(f, 0), {Scalar(f, 2), Scalar(f, 0)});
    CHECK(a.scale == Scalar(f, 2));
    CHECK(a.hyperplane.coeffs[0] == Scalar(f, 1));
    auto b = normalize_form(Scalar(f, 3), {Scalar(f, 0), Scalar(f, -3)});
    CHECK(b.scale == Scalar(f, -3));
    CHECK(b.hyperplane.constant == Scalar(f, -1));
    CHECK(b.hyperplane.coeffs[1] == Scalar(f, 1));
    CHECK_THROWS_AS(normalize_form(Scalar(f, 1), {Scalar(f, 0)}), Error);
    CHECK_THROWS_AS(make(f, 1, {{"0", "1"}, {"0", "2"}}), Error);
}

TEST_CASE("flats")
{
    auto t = flat_of(T(), S({1, 2, 3}));
    CHECK_FALSE(t.is_empty);
    CHECK(t.codim == 2);
    CHECK(flat_of(L2(), S({1, 2})).is_empty);
    auto b = flat_of(B(), S({1}));
    CHECK(b.codim == 1);
    CHECK(flat_of(B(), 0).codim == 0);

    // the witness point really lies on every hyperplane of the flat
    auto arr = make(q(), 3, {{"1", "1", "2", "0"}, {"-2", "0", "1", "1"}, {"5", "3", "0", "-1"}});
    auto w = flat_of(arr, S({1, 2, 3}));
    REQUIRE(w.witness_point);
    std::vector<Scalar> x;
    for (const auto& c : *w.witness_point)
        x.emplace_back(q(), c);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(eval(arr.chosen(i), x).is_zero());
}

TEST_CASE("delete and restrict")
{
    auto d = delete_hyperplane(T(), 0);
    CHECK(d.arrangement.size() == 2);
    CHECK(d.arrangement.normalized(0) == T().normalized(1));
    CHECK(delete_hyperplane(Gm(), 0).arrangement.size() == 0);
    CHECK_THROWS_AS(delete_hyperplane(B(), 2), Error);

    auto r = restrict_to(T(), 2);
    CHECK(r.arrangement.dimension() == 1);
    CHECK(r.arrangement.size() == 1);
    CHECK(r.trace_map[0] == 0u);
    CHECK(r.trace_map[1] == 0u);

    auto l = restrict_to(L2(), 0);
    CHECK(l.arrangement.size() == 0);
    CHECK_FALSE(l.trace_map[1].has_value());
    CHECK(*l.parallel_value[1] == Scalar(q(), -1));

    auto b = restrict_to(B(), 0);
    CHECK(b.trace_map[1] == 0u);
}

TEST_CASE("restriction and deletion commute")
{
    auto arr = make(q(), 3, {{"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"-1", "1", "1", "0"},
                             {"0", "1", "1", "1"}, {"2", "0", "1", "-1"}});
    for (std::size_t j = 0; j < arr.size(); ++j) {
        auto res = restrict_to(arr, j);
        for (std::size_t k = 0; k < arr.size(); ++k) {
            if (k == j || !res.trace_map[k])
                continue;
            // only meaningful when k's trace is not shared with another hyperplane
            std::size_t shared = 0;
            for (std::size_t i = 0; i < arr.size(); ++i)
                shared += (i != j && res.trace_map[i] == res.trace_map[k]);
            if (shared != 1)
                continue;
            auto del = delete_hyperplane(arr, k);
            auto lhs = restrict_to(del.arrangement, *del.index_map[j]).arrangement;
            auto rhs = delete_hyperplane(res.arrangement, *res.trace_map[k]).arrangement;
            CHECK(lhs.same_geometry(rhs));
        }
    }
}

TEST_CASE("affine dependencies and circuits")
{
    auto t = affine_dependency(T(), S({1, 2, 3}));
    REQUIRE(t);
    CHECK(t->constant == 0);
    CHECK(t->lambdas == std::vector<Scalar>{Scalar(q(), 1), Scalar(q(), -1), Scalar(q(), -1)});
    auto l = affine_dependency(L2(), S({1, 2}));
    REQUIRE(l);
    CHECK(l->constant == 1);
    CHECK(l->lambdas == std::vector<Scalar>{Scalar(q(), 1), Scalar(q(), -1)});
    CHECK_FALSE(affine_dependency(B(), S({1, 2})));

    auto ct = circuits(T());
    REQUIRE(ct.size() == 1);
    CHECK(ct[0].indices == S({1, 2, 3}));
    auto cl = circuits(L2());
    REQUIRE(cl.size() == 1);
    CHECK(cl[0].constant == 1);
    CHECK(circuits(B()).empty());
}

TEST_CASE("circuits agree with a brute-force minimal dependent set search")
{
    auto arr = make(q(), 2, {{"0", "1", "0"}, {"0", "0", "1"}, {"0", "1", "-1"}, {"-1", "1", "0"},
                             {"-1", "0", "1"}, {"-2", "1", "1"}});
    auto dependent = [&](Subset s) {
        auto f = flat_of(arr, s);
        return f.is_empty || f.codim < static_cast<std::size_t>(subset_size(s));
    };
    std::vector<Subset> oracle;
    for (Subset s = 1; s < arr.all() + 1; ++s) {
        if (!dependent(s))
            continue;
        bool minimal = true;
        for (auto i : subset_indices(s))
            minimal = minimal && !dependent(s & ~bit(i));
        if (minimal)
            oracle.push_back(s);
    }
    auto cs = circuits(arr);
    std::vector<Subset> got;
    for (const auto& c : cs) {
        got.push_back(c.indices);
        CHECK(verify_dependency(arr, c));
        CHECK(c.constant == (flat_of(arr, c.indices).is_empty ? 1 : 0));
        for (const auto& l : c.lambdas)
            CHECK_FALSE(l.is_zero());
    }
    std::sort(got.begin(), got.end());
    std::sort(oracle.begin(), oracle.end());
    CHECK(got == oracle);
}

TEST_CASE("normal crossing")
{
    CHECK(is_normal_crossing(B()));
    CHECK_FALSE(is_normal_crossing(T()));
    CHECK_FALSE(is_normal_crossing(L2()));
    CHECK(is_normal_crossing(P()));
    CHECK(is_normal_crossing(make(q(), 2, {})));
    CHECK(is_normal_crossing(make(q(), 2, {{"0", "1", "0"}, {"0", "0", "1"}, {"-1", "1", "1"}})));
}

TEST_CASE("unit kernel generators restrict to 1")
{
    auto t = unit_kernel_generators(T(), 0);
    REQUIRE(t.size() == 1);
    CHECK(t[0].scalar.value() == Scalar(q(), -1));
    CHECK(t[0].exponents == std::vector<long>{1, -1});
    auto l = unit_kernel_generators(L2(), 0);
    REQUIRE(l.size() == 1);
    CHECK(l[0].scalar.value() == Scalar(q(), -1));
    CHECK(l[0].exponents == std::vector<long>{1});
    CHECK(unit_kernel_generators(B(), 0).empty());

    auto arr = make(q(), 2, {{"0", "1", "0"}, {"0", "0", "1"}, {"0", "3", "-2"}, {"-1", "1", "0"},
                             {"4", "-2", "1"}, {"2", "0", "5"}});
    for (std::size_t j = 0; j < arr.size(); ++j) {
        auto del = delete_hyperplane(arr, j);
        auto res = restrict_to(arr, j);
        for (const auto& g : unit_kernel_generators(arr, j)) {
            // lift the generator to arr, then restrict
            UnitElement lifted = unit_constant(arr, g.scalar);
            for (std::size_t i = 0; i < arr.size(); ++i) {
                if (del.index_map[i])
                    lifted.exponents[i] = g.exponents[*del.index_map[i]];
            }
            auto back = restrict_unit(arr, res, j, lifted);
            CHECK(back.scalar.is_one());
            for (auto e : back.exponents)
                CHECK(e == 0);

            // evaluate at points of Y_j: x_pivot solved from phi_j = 0
            const auto& h = arr.chosen(j);
            std::size_t v = h.coeffs[0].is_zero() ? 1 : 0;
            for (long s = 2; s < 9; ++s) {
                std::vector<Scalar> x(2, Scalar(q(), s));
                x[v] = Scalar(q(), 0);
                x[v] = -eval(h, x) / h.coeffs[v];
                REQUIRE(eval(h, x).is_zero());
                Scalar value = lifted.scalar.value();
                bool on_other = false;
                for (std::size_t i = 0; i < arr.size(); ++i) {
                    if (i == j || lifted.exponents[i] == 0)
                        continue;
                    Scalar phi = eval(arr.chosen(i), x);
                    on_other = on_other || phi.is_zero();
                    if (!phi.is_zero())
                        value *= phi.pow(lifted.exponents[i]);
                }
                if (!on_other)
                    CHECK(value.is_one());
            }
        }
    }
}
