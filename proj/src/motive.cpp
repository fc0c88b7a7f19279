#include "motarr/motive.hpp"

#include <functional>
#include <string>
#include <unordered_map>

namespace motarr {

std::size_t TwistMultiset::total() const
{
    std::size_t n = 0;
    for (const auto& [twist, m] : counts)
        n += m;
    return n;
}

TwistMultiset tate_twists(const Arrangement& arr)
{
    std::unordered_map<std::string, TwistMultiset> memo;
    std::function<TwistMultiset(const Arrangement&)> go = [&](const Arrangement& a) -> TwistMultiset {
        if (a.size() == 0)
            return {{{0, 1}}};
        std::string key = a.key();
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        TwistMultiset out = go(delete_hyperplane(a, 0).arrangement);
        for (const auto& [twist, m] : go(restrict_to(a, 0).arrangement).counts)
            out.counts[twist + 1] += m;
        memo.emplace(key, out);
        return out;
    };
    return go(arr);
}

std::vector<std::size_t> poincare_polynomial(const Arrangement& arr)
{
    auto twists = tate_twists(arr);
    std::vector<std::size_t> poly(twists.counts.rbegin()->first + 1, 0);
    for (const auto& [twist, m] : twists.counts)
        poly[twist] = m;
    return poly;
}

namespace {

using Memo = std::unordered_map<std::string, std::vector<Subset>>;

std::vector<Subset> basis_with_pivot(const Arrangement& a, std::size_t j, Memo& memo);

std::vector<Subset> basis_rec(const Arrangement& a, Memo& memo)
{
    if (a.size() == 0)
        return {0};
    std::string key = a.key();
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    auto out = basis_with_pivot(a, 0, memo);
    memo.emplace(key, out);
    return out;
}

std::vector<Subset> basis_with_pivot(const Arrangement& a, std::size_t j, Memo& memo)
{
    Deletion del = delete_hyperplane(a, j);
    Restriction res = restrict_to(a, j);

    std::vector<std::size_t> del_to_old(del.arrangement.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (del.index_map[i])
            del_to_old[*del.index_map[i]] = i;
    }
    std::vector<std::size_t> lift(res.arrangement.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (res.trace_map[i] && lift[*res.trace_map[i]] == a.size())
            lift[*res.trace_map[i]] = i;
    }

    std::vector<Subset> out;
    for (Subset s : basis_rec(del.arrangement, memo)) {
        Subset m = 0;
        for (auto k : subset_indices(s))
            m |= bit(del_to_old[k]);
        out.push_back(m);
    }
    for (Subset s : basis_rec(res.arrangement, memo)) {
        Subset m = bit(j);
        for (auto t : subset_indices(s))
            m |= bit(lift[t]);
        out.push_back(m);
    }
    return out;
}

}  // namespace

std::vector<Subset> module_basis(const Arrangement& arr, std::size_t pivot)
{
    Memo memo;
    if (arr.size() == 0)
        return {0};
    return basis_with_pivot(arr, pivot, memo);
}

std::size_t module_rank(const Arrangement& arr)
{
    return module_basis(arr).size();
}

}  // namespace motarr
