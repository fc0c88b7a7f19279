#include "motarr/os_algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace motarr {

std::vector<ExteriorElement> os_generators(const Arrangement& arr)
{
    std::vector<ExteriorElement> out;
    for (const auto& c : circuits(arr)) {
        if (c.constant == 1) {
            out.push_back(ExteriorElement::monomial(c.indices));
            continue;
        }
        ExteriorElement g;
        int sign = 1;
        for (auto k : subset_indices(c.indices)) {
            g.add(c.indices & ~bit(k), sign);
            sign = -sign;
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Subset> degree_monomials(std::size_t r, std::size_t d)
{
    std::vector<Subset> out;
    if (d > r)
        return out;
    std::function<void(std::size_t, Subset, std::size_t)> go = [&](std::size_t start, Subset s, std::size_t left) {
        if (left == 0) {
            out.push_back(s);
            return;
        }
        for (std::size_t i = start; i + left <= r; ++i)
            go(i + 1, s | bit(i), left - 1);
    };
    go(0, 0, d);
    return out;
}

IntMatrix ideal_rows(const Arrangement& arr, const std::vector<ExteriorElement>& generators, std::size_t d)
{
    const std::size_t r = arr.size();
    auto cols = degree_monomials(r, d);
    std::map<Subset, std::size_t> column;
    for (std::size_t i = 0; i < cols.size(); ++i)
        column[cols[i]] = i;
    IntMatrix rows;
    for (const auto& g : generators) {
        std::size_t gd = static_cast<std::size_t>(subset_size(g.terms().begin()->first));
        if (gd > d)
            continue;
        for (Subset m : degree_monomials(r, d - gd)) {
            ExteriorElement p = g.wedge(ExteriorElement::monomial(m));
            if (p.is_zero())
                continue;
            IntVector row(cols.size());
            for (const auto& [s, c] : p.terms())
                row[column.at(s)] = c;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

GradedRanks graded_rank(const Arrangement& arr)
{
    const std::size_t r = arr.size();
    auto generators = os_generators(arr);
    GradedRanks g;
    for (std::size_t d = 0; d <= r; ++d) {
        auto cols = degree_monomials(r, d);
        IntMatrix rows = ideal_rows(arr, generators, d);
        IntegerLattice lattice(cols.size());
        for (auto& row : rows)
            lattice.insert(row);
        auto diag = smith_diagonal(lattice.basis());
        g.ranks.push_back(cols.size() - diag.size());
        g.elementary_divisors.push_back(std::move(diag));
        g.rational_ranks.push_back(rational_rank(rows));
    }
    return g;
}

OrlikSolomon::OrlikSolomon(const Arrangement& arr) : circuits_(motarr::circuits(arr))
{
    for (const auto& c : circuits_)
        (c.constant == 1 ? empty_circuits_ : central_circuits_).push_back(c.indices);

    // nbc sets are closed under taking subsets
    std::function<void(Subset, std::size_t)> grow = [&](Subset s, std::size_t start) {
        nbc_.push_back(s);
        for (std::size_t i = start; i < arr.size(); ++i) {
            if (is_nbc(s | bit(i)))
                grow(s | bit(i), i + 1);
        }
    };
    grow(0, 0);
    std::sort(nbc_.begin(), nbc_.end(), SubsetOrder{});
}

bool OrlikSolomon::is_nbc(Subset s) const
{
    for (Subset c : empty_circuits_) {
        if ((c & s) == c)
            return false;
    }
    for (Subset c : central_circuits_) {
        Subset broken = c & (c - 1);
        if ((broken & s) == broken)
            return false;
    }
    return true;
}

ExteriorElement OrlikSolomon::reduce_monomial(Subset s) const
{
    std::map<Subset, ExteriorElement> memo;
    std::function<ExteriorElement(Subset)> go = [&](Subset m) -> ExteriorElement {
        if (auto it = memo.find(m); it != memo.end())
            return it->second;
        ExteriorElement out;
        bool done = false;
        for (Subset c : empty_circuits_) {
            if ((c & m) == c) {
                done = true;
                break;
            }
        }
        if (!done) {
            for (Subset c : central_circuits_) {
                if ((c & m) == c) {
                    done = true;
                    break;
                }
            }
        }
        if (!done) {
            for (Subset c : central_circuits_) {
                Subset broken = c & (c - 1);
                if ((broken & m) != broken)
                    continue;
                // e_B = sum_{k >= 2} (-1)^k e_{C - c_k}
                Subset rest = m & ~broken;
                int sign = wedge_sign(broken, rest);
                auto members = subset_indices(c);
                for (std::size_t k = 1; k < members.size(); ++k) {
                    Subset b2 = c & ~bit(members[k]);
                    int s2 = wedge_sign(b2, rest);
                    if (s2 == 0)
                        continue;
                    // position k is 0-based, so (-1)^(k+1) in 1-based terms
                    int coef = sign * s2 * (k % 2 ? 1 : -1);
                    ExteriorElement sub = go(b2 | rest);
                    for (const auto& [t, v] : sub.terms())
                        out.add(t, coef * v);
                }
                done = true;
                break;
            }
        }
        if (!done)
            out.add(m, 1);
        memo.emplace(m, out);
        return out;
    };
    return go(s);
}

ExteriorElement OrlikSolomon::reduce(const ExteriorElement& x) const
{
    ExteriorElement out;
    for (const auto& [s, c] : x.terms())
        out = out + reduce_monomial(s) * c;
    return out;
}

ExteriorElement OrlikSolomon::multiply(const ExteriorElement& a, const ExteriorElement& b) const
{
    return reduce(a.wedge(b));
}

std::vector<Subset> nbc_basis(const Arrangement& arr)
{
    return OrlikSolomon(arr).nbc();
}

}  // namespace motarr
