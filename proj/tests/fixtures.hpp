#pragma once

#include <string>
#include <vector>

#include "motarr/arrangement.hpp"

namespace fixtures {

using motarr::Arrangement;
using motarr::Field;
using motarr::Hyperplane;
using motarr::Scalar;

// Each form is {constant, a_1, ..., a_N} as rational strings.
inline Arrangement make(const Field& f, std::size_t n, const std::vector<std::vector<std::string>>& forms)
{
    std::vector<Hyperplane> hs;
    for (const auto& row : forms) {
        Hyperplane h{Scalar::parse(f, row.at(0)), {}};
        for (std::size_t i = 1; i < row.size(); ++i)
            h.coeffs.push_back(Scalar::parse(f, row[i]));
        hs.push_back(std::move(h));
    }
    return Arrangement(f, n, hs);
}

inline Field q() { return Field::rational(); }

// {x, y, x - y} in A^2
inline Arrangement T(const Field& f = q()) { return make(f, 2, {{"0", "1", "0"}, {"0", "0", "1"}, {"0", "1", "-1"}}); }
// {x, y} in A^2
inline Arrangement B(const Field& f = q()) { return make(f, 2, {{"0", "1", "0"}, {"0", "0", "1"}}); }
// {x, x - 1} in A^2
inline Arrangement L2(const Field& f = q()) { return make(f, 2, {{"0", "1", "0"}, {"-1", "1", "0"}}); }
// {x, x - 1} in A^1
inline Arrangement P(const Field& f = q()) { return make(f, 1, {{"0", "1"}, {"-1", "1"}}); }
// {x} in A^1
inline Arrangement Gm(const Field& f = q()) { return make(f, 1, {{"0", "1"}}); }
// {x - y, y - z, x - z} in A^3
inline Arrangement braid3(const Field& f = q())
{
    return make(f, 3, {{"0", "1", "-1", "0"}, {"0", "0", "1", "-1"}, {"0", "1", "0", "-1"}});
}

}  // namespace fixtures
