#include "motarr/arrangement.hpp"

#include "motarr/error.hpp"

#include <algorithm>
#include <sstream>

namespace motarr {

std::string Hyperplane::to_string() const
{
    std::ostringstream out;
    bool first = true;
    auto term = [&](const Scalar& c, const std::string& var) {
        if (c.is_zero())
            return;
        std::string s = c.to_string();
        bool negative = c.modulus() == 0 && c.rational() < 0;
        if (negative)
            s = (-c).to_string();
        out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        if (var.empty())
            out << s;
        else if (s == "1")
            out << var;
        else
            out << s << '*' << var;
    };
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        term(coeffs[i], "x" + std::to_string(i + 1));
    term(constant, "");
    if (first)
        out << constant.to_string();
    return out.str();
}

NormalizedForm normalize_form(const Scalar& constant, const Vector& coeffs)
{
    auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (lead == coeffs.end())
        fail(ErrorKind::zero_form, "linear part of the form vanishes");
    Scalar scale = *lead;
    Scalar inv = scale.inverse();
    NormalizedForm n{{constant * inv, coeffs}, scale};
    for (auto& c : n.hyperplane.coeffs)
        c *= inv;
    return n;
}

Arrangement::Arrangement(Field field, std::size_t dimension, const std::vector<Hyperplane>& forms)
    : field_(field), dimension_(dimension)
{
    if (forms.size() > 64)
        fail(ErrorKind::precondition_violated, "at most 64 hyperplanes are supported");
    for (const auto& f : forms) {
        if (f.coeffs.size() != dimension)
            fail(ErrorKind::precondition_violated, "form '" + f.to_string() + "' has the wrong number of coefficients");
        auto n = normalize_form(f.constant, f.coeffs);
        if (std::find(normalized_.begin(), normalized_.end(), n.hyperplane) != normalized_.end())
            fail(ErrorKind::precondition_violated, "hyperplane '" + n.hyperplane.to_string() + "' occurs twice");
        normalized_.push_back(n.hyperplane);
        chosen_.push_back(f);
        scale_.push_back(n.scale);
    }
}

Vector Arrangement::cone_vector(std::size_t i) const
{
    Vector v{chosen_.at(i).constant};
    v.insert(v.end(), chosen_[i].coeffs.begin(), chosen_[i].coeffs.end());
    return v;
}

std::string Arrangement::key() const
{
    std::ostringstream out;
    out << field_.to_string() << '|' << dimension_;
    for (const auto& h : normalized_) {
        out << '|' << h.constant.to_string();
        for (const auto& c : h.coeffs)
            out << ',' << c.to_string();
    }
    return out.str();
}

bool Arrangement::same_geometry(const Arrangement& o) const
{
    return field_ == o.field_ && dimension_ == o.dimension_ && normalized_ == o.normalized_;
}

Arrangement permute(const Arrangement& arr, const std::vector<std::size_t>& order)
{
    if (order.size() != arr.size())
        fail(ErrorKind::precondition_violated, "order has the wrong length");
    std::vector<bool> seen(arr.size(), false);
    std::vector<Hyperplane> forms;
    for (auto k : order) {
        if (k >= arr.size() || seen[k])
            fail(ErrorKind::precondition_violated, "order is not a permutation");
        seen[k] = true;
        forms.push_back(arr.chosen(k));
    }
    return Arrangement(arr.field(), arr.dimension(), forms);
}

Flat flat_of(const Arrangement& arr, Subset s)
{
    Flat f;
    f.indices = s;
    Matrix a;
    Vector b;
    for (auto i : subset_indices(s)) {
        if (i >= arr.size())
            fail(ErrorKind::index_out_of_range, "hyperplane " + std::to_string(i + 1) + " does not exist");
        a.push_back(arr.chosen(i).coeffs);
        b.push_back(-arr.chosen(i).constant);
    }
    auto x = solve(a, b, arr.dimension(), arr.field());
    if (!x) {
        f.is_empty = true;
        return f;
    }
    f.codim = rank(a, arr.dimension());
    if (!arr.field().is_prime()) {
        std::vector<mpq_class> point;
        for (const auto& c : *x)
            point.push_back(c.rational());
        f.witness_point = std::move(point);
    }
    return f;
}

Deletion delete_hyperplane(const Arrangement& arr, std::size_t j)
{
    if (j >= arr.size())
        fail(ErrorKind::index_out_of_range, "cannot delete hyperplane " + std::to_string(j + 1));
    std::vector<Hyperplane> forms;
    std::vector<std::optional<std::size_t>> map(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i == j)
            continue;
        map[i] = forms.size();
        forms.push_back(arr.chosen(i));
    }
    return {Arrangement(arr.field(), arr.dimension(), forms), std::move(map)};
}

Restriction restrict_to(const Arrangement& arr, std::size_t j)
{
    if (j >= arr.size())
        fail(ErrorKind::index_out_of_range, "cannot restrict to hyperplane " + std::to_string(j + 1));
    const std::size_t n = arr.dimension();
    const Hyperplane& a = arr.chosen(j);
    std::size_t v = 0;
    while (a.coeffs[v].is_zero())
        ++v;

    std::vector<Hyperplane> traces;
    Restriction r{Arrangement(arr.field(), n - 1), v, {}, {}, {}};
    r.trace_map.resize(arr.size());
    r.kappa.resize(arr.size());
    r.parallel_value.resize(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i == j)
            continue;
        const Hyperplane& b = arr.chosen(i);
        Scalar f = b.coeffs[v] / a.coeffs[v];
        Scalar constant = b.constant - f * a.constant;
        Vector coeffs;
        for (std::size_t k = 0; k < n; ++k) {
            if (k != v)
                coeffs.push_back(b.coeffs[k] - f * a.coeffs[k]);
        }
        bool parallel = std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s.is_zero(); });
        if (parallel) {
            r.parallel_value[i] = constant;
            continue;
        }
        auto nf = normalize_form(constant, coeffs);
        auto it = std::find(traces.begin(), traces.end(), nf.hyperplane);
        r.trace_map[i] = static_cast<std::size_t>(it - traces.begin());
        if (it == traces.end())
            traces.push_back(nf.hyperplane);
        r.kappa[i] = nf.scale;
    }
    r.arrangement = Arrangement(arr.field(), n - 1, traces);
    return r;
}

namespace {

Matrix columns_to_rows(const std::vector<Vector>& cols, std::size_t height)
{
    Matrix m(height, Vector(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < height; ++r)
            m[r][c] = cols[c][r];
    }
    return m;
}

bool independent(const std::vector<Vector>& vectors, std::size_t height)
{
    if (vectors.empty())
        return true;
    return rank(columns_to_rows(vectors, height), vectors.size()) == vectors.size();
}

}  // namespace

std::optional<AffineDependency> affine_dependency(const Arrangement& arr, Subset s)
{
    const std::size_t h = arr.dimension() + 1;
    std::vector<Vector> cols;
    auto idx = subset_indices(s);
    for (auto i : idx) {
        if (i >= arr.size())
            fail(ErrorKind::index_out_of_range, "hyperplane " + std::to_string(i + 1) + " does not exist");
        cols.push_back(arr.cone_vector(i));
    }
    Matrix m = columns_to_rows(cols, h);
    Vector e0(h, arr.zero());
    e0[0] = arr.one();

    AffineDependency dep;
    dep.indices = s;
    if (auto x = solve(m, e0, idx.size(), arr.field())) {
        dep.lambdas = *x;
        dep.constant = 1;
        return dep;
    }
    auto ker = kernel(m, idx.size(), arr.field());
    if (ker.empty())
        return std::nullopt;
    Vector v = ker.front();
    auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
    Scalar inv = lead->inverse();
    for (auto& x : v)
        x *= inv;
    dep.lambdas = std::move(v);
    dep.constant = 0;
    return dep;
}

bool verify_dependency(const Arrangement& arr, const AffineDependency& dep)
{
    Vector sum(arr.dimension() + 1, arr.zero());
    auto idx = subset_indices(dep.indices);
    if (idx.size() != dep.lambdas.size())
        return false;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        Vector v = arr.cone_vector(idx[k]);
        for (std::size_t c = 0; c < v.size(); ++c)
            sum[c] += dep.lambdas[k] * v[c];
    }
    Vector want(arr.dimension() + 1, arr.zero());
    want[0] = Scalar(arr.field(), dep.constant);
    return sum == want;
}

std::vector<AffineDependency> circuits(const Arrangement& arr)
{
    const std::size_t r = arr.size();
    const std::size_t h = arr.dimension() + 1;
    std::vector<AffineDependency> out;
    std::vector<Subset> found;
    Vector e0(h, arr.zero());
    e0[0] = arr.one();

    // Dependent sets are exactly those S with {e0} u {v_i : i in S} linearly dependent.
    std::vector<Subset> level{0};
    for (std::size_t size = 1; size <= std::min(r, arr.dimension() + 2); ++size) {
        std::vector<Subset> next;
        for (Subset s : level) {
            std::size_t start = s ? static_cast<std::size_t>(64 - std::countl_zero(s)) : 0;
            for (std::size_t i = start; i < r; ++i) {
                Subset t = s | bit(i);
                bool contains = std::any_of(found.begin(), found.end(), [&](Subset c) { return (c & t) == c; });
                if (contains)
                    continue;
                std::vector<Vector> vs{e0};
                for (auto k : subset_indices(t))
                    vs.push_back(arr.cone_vector(k));
                if (independent(vs, h)) {
                    next.push_back(t);
                    continue;
                }
                found.push_back(t);
                out.push_back(*affine_dependency(arr, t));
            }
        }
        level = std::move(next);
    }
    return out;
}

bool is_normal_crossing(const Arrangement& arr)
{
    const std::size_t h = arr.dimension() + 1;
    std::vector<Vector> all;
    Vector e0(h, arr.zero());
    e0[0] = arr.one();
    all.push_back(e0);
    for (std::size_t i = 0; i < arr.size(); ++i)
        all.push_back(arr.cone_vector(i));

    const std::size_t k = std::min(h, all.size());
    // every k-subset of the r + 1 projective hyperplanes must be independent
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = i;
    for (;;) {
        std::vector<Vector> vs;
        for (auto i : pick)
            vs.push_back(all[i]);
        if (!independent(vs, h))
            return false;
        std::size_t pos = k;
        while (pos > 0 && pick[pos - 1] == all.size() - k + pos - 1)
            --pos;
        if (pos == 0)
            return true;
        ++pick[pos - 1];
        for (std::size_t i = pos; i < k; ++i)
            pick[i] = pick[i - 1] + 1;
    }
}

UnitElement UnitElement::operator*(const UnitElement& o) const
{
    if (exponents.size() != o.exponents.size())
        fail(ErrorKind::mixed_arrangement, "units live on different arrangements");
    UnitElement u{scalar * o.scalar, exponents};
    for (std::size_t i = 0; i < exponents.size(); ++i)
        u.exponents[i] += o.exponents[i];
    return u;
}

UnitElement UnitElement::inverse() const
{
    UnitElement u{scalar.inverse(), exponents};
    for (auto& e : u.exponents)
        e = -e;
    return u;
}

UnitElement unit_one(const Arrangement& arr)
{
    return {FieldUnit(arr.one()), std::vector<long>(arr.size(), 0)};
}

UnitElement unit_constant(const Arrangement& arr, const FieldUnit& lambda)
{
    return {lambda, std::vector<long>(arr.size(), 0)};
}

UnitElement unit_generator(const Arrangement& arr, std::size_t i)
{
    if (i >= arr.size())
        fail(ErrorKind::index_out_of_range, "hyperplane " + std::to_string(i + 1) + " does not exist");
    UnitElement u = unit_one(arr);
    u.exponents[i] = 1;
    return u;
}

std::vector<UnitElement> unit_kernel_generators(const Arrangement& arr, std::size_t j)
{
    Restriction res = restrict_to(arr, j);
    Deletion del = delete_hyperplane(arr, j);
    const Arrangement& d = del.arrangement;
    std::vector<UnitElement> out;
    std::vector<std::optional<std::size_t>> first(res.arrangement.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i == j)
            continue;
        if (res.parallel_value[i]) {
            UnitElement u = unit_generator(d, *del.index_map[i]);
            u.scalar = FieldUnit(res.parallel_value[i]->inverse());
            out.push_back(std::move(u));
            continue;
        }
        auto t = *res.trace_map[i];
        if (!first[t]) {
            first[t] = i;
            continue;
        }
        std::size_t m = *first[t];
        UnitElement u = unit_one(d);
        u.exponents[*del.index_map[m]] = 1;
        u.exponents[*del.index_map[i]] = -1;
        u.scalar = FieldUnit(*res.kappa[i] / *res.kappa[m]);
        out.push_back(std::move(u));
    }
    return out;
}

UnitElement restrict_unit(const Arrangement& arr, const Restriction& res, std::size_t j, const UnitElement& u)
{
    if (u.exponents.size() != arr.size())
        fail(ErrorKind::mixed_arrangement, "unit does not belong to the arrangement");
    if (u.exponents[j] != 0)
        fail(ErrorKind::precondition_violated, "unit has a zero or pole along the restricted hyperplane");
    UnitElement out = unit_constant(res.arrangement, u.scalar);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        long e = u.exponents[i];
        if (i == j || e == 0)
            continue;
        if (res.parallel_value[i]) {
            out.scalar = out.scalar * FieldUnit(res.parallel_value[i]->pow(e));
            continue;
        }
        out.scalar = out.scalar * FieldUnit(res.kappa[i]->pow(e));
        out.exponents[*res.trace_map[i]] += e;
    }
    return out;
}

}  // namespace motarr
