#include "motarr/cohomology.hpp"

#include "motarr/error.hpp"
#include "motarr/motive.hpp"
#include "motarr/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace motarr {

namespace {

// Larger words are rewritten first: size, then index sum.
struct WorkOrder {
    bool operator()(Subset a, Subset b) const
    {
        int sa = subset_size(a), sb = subset_size(b);
        if (sa != sb)
            return sa < sb;
        std::size_t ia = 0, ib = 0;
        for (auto i : subset_indices(a))
            ia += i;
        for (auto i : subset_indices(b))
            ib += i;
        if (ia != ib)
            return ia < ib;
        return a < b;
    }
};

template <class Map>
void accumulate(Map& m, Subset s, const Coefficient& c)
{
    if (c.empty())
        return;
    auto it = m.find(s);
    if (it == m.end()) {
        m.emplace(s, c);
        return;
    }
    it->second += c;
    if (it->second.empty())
        m.erase(it);
}

Coefficient minus_one_symbol(const Field& field)
{
    return Coefficient::symbol(FieldUnit(Scalar(field, -1)), field);
}

// c * w_1 ... w_k with possibly unsorted, repeated generators -> factor * [phi_U].
std::pair<Coefficient, Subset> normalize_word(std::vector<std::size_t> w, const Field& field)
{
    Coefficient factor = Coefficient::one(field);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                factor = -factor;
                changed = true;
            } else if (w[i] == w[i + 1]) {
                // [f][f] = -[-1][f]; [-1] then moves left past i generators
                factor = factor.scaled(i % 2 ? 1 : -1) * minus_one_symbol(field);
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
                break;
            }
        }
    }
    return {factor, subset_from(w)};
}

std::vector<std::size_t> concat(Subset a, Subset b)
{
    auto w = subset_indices(a);
    auto rest = subset_indices(b);
    w.insert(w.end(), rest.begin(), rest.end());
    return w;
}

// prod_k ([lambda_k] + [phi_{m_k}]) over the given members, in order.
WordSum expand_factors(const std::vector<std::pair<Coefficient, std::size_t>>& factors, const Field& field)
{
    WordSum w;
    w.emplace(0, Coefficient::one(field));
    for (const auto& [sym, index] : factors) {
        WordSum next;
        for (const auto& [a, c] : w) {
            // c [phi_A] [lambda] = (-1)^|A| c [lambda] [phi_A]
            accumulate(next, a, (c * sym).scaled(subset_size(a) % 2 ? -1 : 1));
            accumulate(next, a | bit(index), c);
        }
        w = std::move(next);
    }
    return w;
}

}  // namespace

void add_to(WordSum& w, Subset s, const Coefficient& c)
{
    accumulate(w, s, c);
}

WordSum multiply_words(const WordSum& a, const WordSum& b, const Field& field)
{
    WordSum out;
    for (const auto& [s, x] : a) {
        for (const auto& [t, y] : b) {
            Coefficient c = x * y.graded_twist(static_cast<std::size_t>(subset_size(s)));
            if (c.empty())
                continue;
            if ((s & t) == 0) {
                accumulate(out, s | t, c.scaled(wedge_sign(s, t)));
                continue;
            }
            auto [f, u] = normalize_word(concat(s, t), field);
            accumulate(out, u, c * f);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

void CohomologyElement::check_same(const CohomologyElement& o) const
{
    if (context_ != o.context_)
        fail(ErrorKind::mixed_arrangement, "elements belong to different rings");
}

void CohomologyElement::add(Subset s, const Coefficient& c)
{
    accumulate(terms_, s, c);
}

CohomologyElement CohomologyElement::operator+(const CohomologyElement& o) const
{
    check_same(o);
    CohomologyElement x = *this;
    for (const auto& [s, c] : o.terms_)
        x.add(s, c);
    return x;
}

CohomologyElement CohomologyElement::operator-(const CohomologyElement& o) const
{
    check_same(o);
    CohomologyElement x = *this;
    for (const auto& [s, c] : o.terms_)
        x.add(s, -c);
    return x;
}

CohomologyElement CohomologyElement::left_multiply(const Coefficient& c) const
{
    CohomologyElement x(context_, field_);
    for (const auto& [s, y] : terms_)
        x.add(s, c * y);
    return x;
}

Decision CohomologyElement::is_zero() const
{
    Decision d = Decision::zero;
    for (const auto& [s, c] : terms_) {
        Decision e = c.is_zero();
        if (e == Decision::nonzero)
            return Decision::nonzero;
        if (e == Decision::unknown)
            d = Decision::unknown;
    }
    return d;
}

std::string CohomologyElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        out << (first ? "" : "; ") << subset_string(s) << ": " << c.to_string();
        first = false;
    }
    return out.str();
}

Decision certify_zero(const CohomologyElement& x)
{
    bool unknown = false;
    for (const auto& [m, c] : x.terms()) {
        Decision d = certify_zero(c);
        if (d == Decision::nonzero)
            return d;
        unknown = unknown || d == Decision::unknown;
    }
    return unknown ? Decision::unknown : Decision::zero;
}

Decision equal(const CohomologyElement& a, const CohomologyElement& b)
{
    return (a - b).is_zero();
}

// ---------------------------------------------------------------------------

CohomologyRing::CohomologyRing(Arrangement arr, std::size_t pivot)
    : arr_(std::move(arr)), pivot_(pivot), os_(arr_)
{
    context_ = arr_.key() + "#" + std::to_string(pivot_);
    basis_ = arr_.size() == 0 ? std::vector<Subset>{0} : module_basis(arr_, pivot_);
    const Field& field = arr_.field();

    for (const auto& dep : os_.circuits()) {
        auto members = subset_indices(dep.indices);
        const std::size_t t = members.size();
        std::vector<Coefficient> syms;
        for (const auto& l : dep.lambdas)
            syms.push_back(Coefficient::symbol(FieldUnit(l), field));
        Rewrite rule;
        if (dep.constant == 1) {
            // prod_k (lambda_k phi_k) = 0
            std::vector<std::pair<Coefficient, std::size_t>> factors;
            for (std::size_t k = 0; k < t; ++k)
                factors.emplace_back(syms[k], members[k]);
            WordSum e = expand_factors(factors, field);
            if (!(e.at(dep.indices) == Coefficient::one(field)))
                fail(ErrorKind::cross_check_mismatch, "unexpected leading term in a product relation");
            rule.lhs = dep.indices;
            for (const auto& [a, c] : e) {
                if (a != dep.indices)
                    rule.rhs.emplace_back(a, -c);
            }
        } else {
            // R~(lambda_1 phi_1, ..., lambda_t phi_t) = 0
            WordSum r;
            for (Subset omit = 1; omit < bit(t); ++omit) {
                int size = subset_size(omit);
                Coefficient prefix = Coefficient::one(field);
                if (size == 1) {
                    std::size_t i = static_cast<std::size_t>(std::countr_zero(omit)) + 1;
                    prefix = prefix.scaled(i % 2 ? -1 : 1);
                }
                for (int k = 1; k < size; ++k)
                    prefix = prefix * minus_one_symbol(field);
                std::vector<std::pair<Coefficient, std::size_t>> factors;
                for (std::size_t k = 0; k < t; ++k) {
                    if (!subset_has(omit, k))
                        factors.emplace_back(syms[k], members[k]);
                }
                for (const auto& [a, c] : expand_factors(factors, field))
                    accumulate(r, a, prefix * c);
            }
            Subset broken = dep.indices & (dep.indices - 1);
            if (!(r.at(broken) == Coefficient::integer(field, -1)))
                fail(ErrorKind::cross_check_mismatch, "unexpected leading term in a circuit relation");
            rule.lhs = broken;
            for (const auto& [a, c] : r) {
                if (a != broken)
                    rule.rhs.emplace_back(a, c);
            }
        }
        rules_.push_back(std::move(rule));
    }

    // transition from the module basis to nbc words, degree blocks inverted over Z
    std::map<std::size_t, std::vector<Subset>> rows, cols;
    for (Subset m : basis_) {
        WordSum w;
        w.emplace(m, Coefficient::one(field));
        transition_[m] = straighten(w);
        rows[subset_size(m)].push_back(m);
    }
    for (Subset s : os_.nbc())
        cols[subset_size(s)].push_back(s);
    for (auto& [d, ms] : rows) {
        const auto& ss = cols[d];
        if (ms.size() != ss.size())
            fail(ErrorKind::cross_check_mismatch,
                 "module basis and nbc basis differ in degree " + std::to_string(d));
        const std::size_t n = ms.size();
        std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
        for (std::size_t i = 0; i < n; ++i) {
            const WordSum& tr = transition_[ms[i]];
            for (std::size_t k = 0; k < n; ++k) {
                auto it = tr.find(ss[k]);
                if (it != tr.end()) {
                    if (it->second.max_degree() != 0)
                        fail(ErrorKind::cross_check_mismatch, "transition block is not integral");
                    a[i][k] = it->second.degree_zero_part();
                }
            }
            a[i][n + i] = 1;
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && a[p][c] == 0)
                ++p;
            if (p == n)
                fail(ErrorKind::cross_check_mismatch, "transition block is singular in degree " + std::to_string(d));
            std::swap(a[p], a[c]);
            mpq_class inv = 1 / a[c][c];
            for (auto& v : a[c])
                v *= inv;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == c || a[i][c] == 0)
                    continue;
                mpq_class f = a[i][c];
                for (std::size_t k = 0; k < 2 * n; ++k)
                    a[i][k] -= f * a[c][k];
            }
        }
        // a now holds [I | T0^-1]; rows of T0 are module monomials, columns nbc words
        auto& block = inverse_block_[d];
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                const mpq_class& v = a[k][n + i];
                if (v.get_den() != 1)
                    fail(ErrorKind::cross_check_mismatch, "transition block is not unimodular in degree " + std::to_string(d));
                if (v != 0)
                    block[ss[k]][ms[i]] = v.get_num();
            }
        }
    }
}

void CohomologyRing::check(const CohomologyElement& x) const
{
    if (x.context() != context_)
        fail(ErrorKind::mixed_arrangement, "element does not belong to this ring");
}

CohomologyElement CohomologyRing::zero() const
{
    return CohomologyElement(context_, field());
}

CohomologyElement CohomologyRing::one() const
{
    return constant(Coefficient::one(field()));
}

CohomologyElement CohomologyRing::constant(const Coefficient& c) const
{
    CohomologyElement x = zero();
    x.add(0, c);
    return x;
}

CohomologyElement CohomologyRing::basis_element(Subset s) const
{
    if (std::find(basis_.begin(), basis_.end(), s) == basis_.end())
        fail(ErrorKind::precondition_violated, subset_string(s) + " is not a basis monomial");
    CohomologyElement x = zero();
    x.add(s, Coefficient::one(field()));
    return x;
}

std::uint64_t draw(Rng& rng, std::uint64_t n)
{
    const std::uint64_t limit = Rng::max() - Rng::max() % n;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit)
            return x % n;
    }
}

WordSum CohomologyRing::straighten(const WordSum& w, Rng* rng) const
{
    std::map<Subset, Coefficient, WorkOrder> work;
    for (const auto& [s, c] : w)
        accumulate(work, s, c);
    WordSum out;
    std::vector<const Rewrite*> applicable;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Subset s = it->first;
        Coefficient c = std::move(it->second);
        work.erase(it);

        applicable.clear();
        for (const auto& rule : rules_) {
            if ((rule.lhs & s) == rule.lhs) {
                applicable.push_back(&rule);
                if (!rng)
                    break;
            }
        }
        if (applicable.empty()) {
            accumulate(out, s, c);
            continue;
        }
        const Rewrite& rule = *applicable[rng ? draw(*rng, applicable.size()) : 0];
        Subset rest = s & ~rule.lhs;
        int sign = wedge_sign(rule.lhs, rest);
        for (const auto& [d, coef] : rule.rhs) {
            Coefficient x = (c * coef).scaled(sign);
            if (x.empty())
                continue;
            if ((d & rest) == 0) {
                accumulate(work, d | rest, x.scaled(wedge_sign(d, rest)));
                continue;
            }
            auto [f, u] = normalize_word(concat(d, rest), field());
            accumulate(work, u, x * f);
        }
    }
    return out;
}

CohomologyElement CohomologyRing::from_nbc(const WordSum& nbc) const
{
    WordSum r = nbc;
    CohomologyElement y = zero();
    std::map<std::size_t, std::vector<Subset>> by_degree;
    for (Subset m : basis_)
        by_degree[subset_size(m)].push_back(m);
    for (auto d = by_degree.rbegin(); d != by_degree.rend(); ++d) {
        const auto& block = inverse_block_.at(d->first);
        std::vector<std::pair<Subset, Coefficient>> found;
        for (Subset m : d->second) {
            Coefficient ym(field());
            for (const auto& [s, row] : block) {
                auto it = r.find(s);
                auto jt = row.find(m);
                if (it != r.end() && jt != row.end())
                    ym += it->second.scaled(jt->second);
            }
            if (!ym.empty())
                found.emplace_back(m, ym);
        }
        for (const auto& [m, ym] : found) {
            y.add(m, ym);
            for (const auto& [s, t] : transition_.at(m))
                accumulate(r, s, -(ym * t));
        }
    }
    if (!r.empty())
        fail(ErrorKind::cross_check_mismatch, "word sum is not supported on nbc words");
    return y;
}

WordSum CohomologyRing::to_nbc(const CohomologyElement& x) const
{
    check(x);
    WordSum out;
    for (const auto& [m, y] : x.terms()) {
        for (const auto& [s, t] : transition_.at(m))
            accumulate(out, s, y * t);
    }
    return out;
}

WordSum CohomologyRing::words(const CohomologyElement& x) const
{
    check(x);
    WordSum out;
    for (const auto& [m, y] : x.terms())
        out.emplace(m, y);
    return out;
}

CohomologyElement CohomologyRing::from_words(const WordSum& w, Rng* rng) const
{
    return from_nbc(straighten(w, rng));
}

CohomologyElement CohomologyRing::convert(const CohomologyElement& x, const CohomologyRing& target) const
{
    if (!arr_.same_geometry(target.arr_))
        fail(ErrorKind::mixed_arrangement, "rings live on different arrangements");
    return target.from_nbc(to_nbc(x));
}

WordSum CohomologyRing::unit_word(const UnitElement& u) const
{
    if (u.exponents.size() != arr_.size())
        fail(ErrorKind::mixed_arrangement, "unit does not belong to the arrangement");
    WordSum w;
    accumulate(w, 0, Coefficient::symbol(u.scalar, field()));
    for (std::size_t i = 0; i < u.exponents.size(); ++i)
        accumulate(w, bit(i), Coefficient::integer(field(), u.exponents[i]));
    return w;
}

CohomologyElement CohomologyRing::unit_class(const UnitElement& u) const
{
    return from_words(unit_word(u));
}

CohomologyElement CohomologyRing::multiply(const CohomologyElement& x, const CohomologyElement& y, Rng* rng) const
{
    check(x);
    check(y);
    return from_words(multiply_words(words(x), words(y), field()), rng);
}

CohomologyElement CohomologyRing::reduce_word(const std::vector<UnitElement>& units, Rng* rng) const
{
    WordSum w;
    w.emplace(0, Coefficient::one(field()));
    for (const auto& u : units)
        w = multiply_words(w, unit_word(u), field());
    return from_words(w, rng);
}

CohomologyElement CohomologyRing::rel_sum_one(const std::vector<UnitElement>& units) const
{
    if (!units_sum_to(arr_, units, 1))
        fail(ErrorKind::precondition_violated, "units do not sum to 1");
    return reduce_word(units);
}

CohomologyElement CohomologyRing::rel_square(const UnitElement& u) const
{
    return reduce_word({u, u}) + unit_class(u).left_multiply(minus_one_symbol(field()));
}

CohomologyElement CohomologyRing::r_tilde(const std::vector<UnitElement>& units) const
{
    const std::size_t t = units.size();
    if (t == 0 || t > 20)
        fail(ErrorKind::precondition_violated, "R~ needs between 1 and 20 units");
    std::vector<WordSum> classes;
    for (const auto& u : units)
        classes.push_back(unit_word(u));
    WordSum total;
    for (Subset omit = 1; omit < bit(t); ++omit) {
        int size = subset_size(omit);
        Coefficient prefix = Coefficient::one(field());
        if (size == 1) {
            std::size_t i = static_cast<std::size_t>(std::countr_zero(omit)) + 1;
            prefix = prefix.scaled(i % 2 ? -1 : 1);
        }
        for (int k = 1; k < size; ++k)
            prefix = prefix * minus_one_symbol(field());
        WordSum w;
        w.emplace(0, prefix);
        for (std::size_t k = 0; k < t; ++k) {
            if (!subset_has(omit, k))
                w = multiply_words(w, classes[k], field());
        }
        for (const auto& [s, c] : w)
            accumulate(total, s, c);
    }
    return from_words(total);
}

CohomologyElement CohomologyRing::rel_R(const std::vector<UnitElement>& units) const
{
    if (!units_sum_to(arr_, units, 0))
        fail(ErrorKind::precondition_violated, "units do not sum to 0");
    return r_tilde(units);
}

CohomologyElement CohomologyRing::gysin_residue(const CohomologyElement& x, std::size_t j) const
{
    check(x);
    if (j >= arr_.size())
        fail(ErrorKind::index_out_of_range, "hyperplane " + std::to_string(j + 1) + " does not exist");
    CohomologyRing pj(arr_, j);
    CohomologyElement xj = pivot_ == j ? x : convert(x, pj);
    Restriction res = restrict_to(arr_, j);
    CohomologyRing target(res.arrangement);
    const Field& f = field();

    std::vector<WordSum> iota(arr_.size());
    for (std::size_t i = 0; i < arr_.size(); ++i) {
        if (i == j)
            continue;
        if (res.parallel_value[i]) {
            accumulate(iota[i], 0, Coefficient::symbol(FieldUnit(*res.parallel_value[i]), f));
            continue;
        }
        accumulate(iota[i], 0, Coefficient::symbol(FieldUnit(*res.kappa[i]), f));
        accumulate(iota[i], bit(*res.trace_map[i]), Coefficient::one(f));
    }

    WordSum z;
    for (const auto& [m, y] : xj.terms()) {
        if (!subset_has(m, j))
            continue;
        int eps = subset_size(m & below(j)) % 2 ? -1 : 1;
        WordSum w;
        w.emplace(0, y.graded_twist(1).scaled(eps));
        for (auto i : subset_indices(m & ~bit(j)))
            w = multiply_words(w, iota[i], f);
        for (const auto& [s, c] : w)
            accumulate(z, s, c);
    }
    return target.from_words(z);
}

ExteriorElement CohomologyRing::a0_projection(const CohomologyElement& x) const
{
    check(x);
    ExteriorElement e;
    for (const auto& [m, c] : x.terms())
        e.add(m, c.degree_zero_part());
    return os_.reduce(e);
}

// ---------------------------------------------------------------------------

std::vector<TamePair> tame_symbol(const CohomologyRing& ring, const std::vector<UnitElement>& units)
{
    const Arrangement& arr = ring.arrangement();
    if (!is_normal_crossing(arr))
        fail(ErrorKind::not_normal_crossing, "tame symbol needs a normal crossing arrangement");
    if (units.size() != arr.dimension() + 1)
        fail(ErrorKind::precondition_violated,
             "tame symbol takes " + std::to_string(arr.dimension() + 1) + " units");
    CohomologyElement x = ring.reduce_word(units);
    std::vector<TamePair> out;
    for (const auto& [s, c] : x.terms()) {
        if (static_cast<std::size_t>(subset_size(s)) != arr.dimension())
            continue;
        Coefficient d1 = c.homogeneous_part(1);
        if (d1.empty())
            continue;
        auto u = d1.as_unit();
        if (!u || !u->is_concrete())
            fail(ErrorKind::non_concrete_coefficient, "coefficient " + d1.to_string() + " is not a concrete unit");
        if (!u->is_one())
            out.push_back({*u, s});
    }
    return out;
}

std::vector<LinePair> tame_symbol_line(const std::vector<Scalar>& points, const UnitElement& f, const UnitElement& g)
{
    const std::size_t r = points.size();
    if (f.exponents.size() != r || g.exponents.size() != r)
        fail(ErrorKind::mixed_arrangement, "units do not match the points");
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = i + 1; k < r; ++k) {
            if (points[i] == points[k])
                fail(ErrorKind::precondition_violated, "points must be distinct");
        }
    }
    std::vector<LinePair> out;
    for (std::size_t i = 0; i < r; ++i) {
        long nf = f.exponents[i], ng = g.exponents[i];
        FieldUnit value = f.scalar.pow(ng) / g.scalar.pow(nf);
        if ((nf * ng) % 2 != 0)
            value = -value;
        for (std::size_t k = 0; k < r; ++k) {
            long e = f.exponents[k] * ng - g.exponents[k] * nf;
            if (k == i) {
                if (e != 0)
                    fail(ErrorKind::cross_check_mismatch, "pole at evaluation point");
                continue;
            }
            if (e != 0)
                value = value * FieldUnit((points[i] - points[k]).pow(e));
        }
        if (!value.is_one())
            out.push_back({value, points[i]});
    }
    return out;
}

Arrangement punctured_line(const Field& field, const std::vector<Scalar>& points)
{
    std::vector<Hyperplane> forms;
    for (const auto& p : points)
        forms.push_back({-p, {Scalar(field, 1)}});
    return Arrangement(field, 1, forms);
}

}  // namespace motarr
