#include "motarr/milnor.hpp"

#include "motarr/error.hpp"

#include <algorithm>
#include <sstream>

namespace motarr {

const char* decision_name(Decision d)
{
    switch (d) {
    case Decision::zero: return "zero";
    case Decision::nonzero: return "nonzero";
    case Decision::unknown: return "unknown";
    }
    return "unknown";
}

Atom Atom::residue(std::uint64_t r)
{
    Atom a;
    a.kind = Kind::residue;
    a.value = mpz_class(std::to_string(r));
    return a;
}

std::strong_ordering Atom::operator<=>(const Atom& o) const
{
    if (kind != o.kind)
        return kind <=> o.kind;
    switch (kind) {
    case Kind::minus_one: return std::strong_ordering::equal;
    case Kind::letter: return name <=> o.name;
    default: {
        int c = cmp(value, o.value);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    }
}

std::string Atom::to_string() const
{
    switch (kind) {
    case Kind::minus_one: return "-1";
    case Kind::letter: return name;
    default: return value.get_str();
    }
}

// ---------------------------------------------------------------------------

std::vector<std::pair<mpz_class, int>> factor_positive(const mpz_class& n)
{
    std::vector<std::pair<mpz_class, int>> out;
    mpz_class m = n;
    if (m <= 0)
        fail(ErrorKind::precondition_violated, "factor_positive needs a positive integer");

    auto push = [&](const mpz_class& p) {
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e > 0)
            out.emplace_back(p, e);
    };

    for (unsigned long p = 2; p < 100000 && m > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_class(p) * p > m)
            break;
        push(mpz_class(p));
    }
    // Pollard rho for whatever large cofactor remains.
    std::vector<mpz_class> stack;
    if (m > 1)
        stack.push_back(m);
    std::vector<mpz_class> primes;
    while (!stack.empty()) {
        mpz_class c = stack.back();
        stack.pop_back();
        if (mpz_probab_prime_p(c.get_mpz_t(), 40) != 0) {
            primes.push_back(c);
            continue;
        }
        mpz_class d = c;
        for (unsigned long seed = 1; d == c; ++seed) {
            mpz_class x = 2, y = 2;
            d = 1;
            auto f = [&](const mpz_class& v) { return mpz_class((v * v + seed) % c); };
            while (d == 1) {
                x = f(x);
                y = f(f(y));
                mpz_class diff = abs(x - y);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), c.get_mpz_t());
            }
        }
        stack.push_back(d);
        stack.push_back(c / d);
    }
    std::sort(primes.begin(), primes.end());
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// ---------------------------------------------------------------------------

Coefficient Coefficient::integer(const Field& field, const mpz_class& n)
{
    Coefficient c(field);
    c.add_term({}, n);
    return c;
}

Coefficient Coefficient::symbol(const FieldUnit& unit, const Field& field)
{
    Coefficient c(field);
    if (field.is_prime()) {
        if (!unit.is_concrete())
            fail(ErrorKind::precondition_violated, "formal letters are not available over " + field.to_string());
        if (!unit.value().is_one())
            c.add_term({Atom::residue(unit.value().residue())}, 1);
        return c;
    }
    if (!unit.is_concrete() && !field.is_formal())
        fail(ErrorKind::precondition_violated, "formal letters are not available over " + field.to_string());
    const mpq_class& q = unit.value().rational();
    if (q < 0)
        c.add_term({Atom::minus_one()}, 1);
    for (const auto& [p, e] : factor_positive(abs(q.get_num())))
        c.add_term({Atom::prime(p)}, e);
    for (const auto& [p, e] : factor_positive(q.get_den()))
        c.add_term({Atom::prime(p)}, -e);
    for (const auto& [name, e] : unit.letters())
        c.add_term({Atom::letter(name)}, e);
    return c;
}

void Coefficient::add_term(MilnorTerm f, mpz_class n)
{
    if (n == 0)
        return;
    if (field_.is_prime()) {
        if (f.size() >= 2)
            return;
        if (f.size() == 1 && f[0].kind != Atom::Kind::residue)
            fail(ErrorKind::precondition_violated, "non-residue atom over a prime field");
        auto& slot = terms_[f];
        slot += n;
        if (slot == 0)
            terms_.erase(f);
        if (f.size() == 1)
            collapse_residues();
        return;
    }

    // Sort with sign; an adjacent repeated atom a != -1 becomes [-1][a].
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            if (f[i + 1] < f[i]) {
                std::swap(f[i], f[i + 1]);
                sign = -sign;
                changed = true;
            } else if (f[i] == f[i + 1] && f[i].kind != Atom::Kind::minus_one) {
                f[i] = Atom::minus_one();
                sign = -sign;
                changed = true;
            }
        }
    }
    n *= sign;

    const bool has_minus_one = !f.empty() && f.front().kind == Atom::Kind::minus_one;
    if (has_minus_one) {
        bool has_two = std::any_of(f.begin(), f.end(),
                                   [](const Atom& a) { return a.kind == Atom::Kind::prime && a.value == 2; });
        if (has_two && f.size() >= 2)
            return;
    }
    auto& slot = terms_[f];
    slot += n;
    if (has_minus_one)
        slot = mpz_class(((slot % 2) + 2) % 2);
    if (slot == 0)
        terms_.erase(f);
}

// F_p: the degree-one part is the single class [prod u_i^{n_i}].
void Coefficient::collapse_residues()
{
    const std::uint64_t p = field_.characteristic();
    std::uint64_t acc = 1 % p;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() == 1) {
            std::uint64_t u = mpz_fdiv_ui(it->first[0].value.get_mpz_t(), p);
            // exponent taken modulo the group order p - 1
            std::uint64_t e = p > 1 ? mpz_fdiv_ui(it->second.get_mpz_t(), p - 1) : 0;
            acc = mulmod(acc, powmod(u, e, p), p);
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    if (acc != 1 % p)
        terms_[{Atom::residue(acc)}] = 1;
}

int Coefficient::max_degree() const
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

int Coefficient::min_degree() const
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
}

bool Coefficient::is_homogeneous() const
{
    return max_degree() == min_degree();
}

Coefficient Coefficient::homogeneous_part(int degree) const
{
    Coefficient c(field_);
    for (const auto& [t, n] : terms_) {
        if (static_cast<int>(t.size()) == degree)
            c.terms_.emplace(t, n);
    }
    return c;
}

mpz_class Coefficient::degree_zero_part() const
{
    auto it = terms_.find(MilnorTerm{});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

Coefficient& Coefficient::operator+=(const Coefficient& o)
{
    if (terms_.empty())
        field_ = o.field_;
    else if (!o.terms_.empty() && !(field_ == o.field_))
        fail(ErrorKind::precondition_violated, "adding coefficients over different fields");
    for (const auto& [t, n] : o.terms_)
        add_term(t, n);
    return *this;
}

Coefficient Coefficient::operator+(const Coefficient& o) const
{
    Coefficient c = *this;
    c += o;
    return c;
}

Coefficient Coefficient::scaled(const mpz_class& k) const
{
    Coefficient c(field_);
    for (const auto& [t, n] : terms_)
        c.add_term(t, n * k);
    return c;
}

Coefficient Coefficient::operator-() const
{
    return scaled(-1);
}

Coefficient Coefficient::operator-(const Coefficient& o) const
{
    return *this + (-o);
}

Coefficient Coefficient::operator*(const Coefficient& o) const
{
    if (!terms_.empty() && !o.terms_.empty() && !(field_ == o.field_))
        fail(ErrorKind::precondition_violated, "multiplying coefficients over different fields");
    Coefficient c(terms_.empty() ? o.field_ : field_);
    for (const auto& [s, a] : terms_) {
        for (const auto& [t, b] : o.terms_) {
            MilnorTerm f = s;
            f.insert(f.end(), t.begin(), t.end());
            c.add_term(std::move(f), a * b);
        }
    }
    return c;
}

Coefficient Coefficient::graded_twist(std::size_t k) const
{
    if (k % 2 == 0)
        return *this;
    Coefficient c(field_);
    for (const auto& [t, n] : terms_)
        c.add_term(t, t.size() % 2 ? mpz_class(-n) : n);
    return c;
}

Decision Coefficient::is_zero() const
{
    if (terms_.empty())
        return Decision::zero;
    switch (field_.kind()) {
    case Field::Kind::prime:
        return Decision::nonzero;
    case Field::Kind::rational:
        return min_degree() <= 1 ? Decision::nonzero : Decision::unknown;
    case Field::Kind::formal:
        return min_degree() <= 0 ? Decision::nonzero : Decision::unknown;
    }
    return Decision::unknown;
}

std::optional<FieldUnit> Coefficient::as_unit() const
{
    if (field_.is_prime()) {
        Scalar one(field_, 1);
        if (terms_.empty())
            return FieldUnit(one);
        if (max_degree() != 1 || min_degree() != 1)
            return std::nullopt;
        return FieldUnit(Scalar(field_, mpq_class(terms_.begin()->first[0].value)));
    }
    if (!terms_.empty() && (max_degree() != 1 || min_degree() != 1))
        return std::nullopt;
    mpq_class value = 1;
    std::map<std::string, int> letters;
    for (const auto& [t, n] : terms_) {
        const Atom& a = t[0];
        switch (a.kind) {
        case Atom::Kind::minus_one:
            if (n % 2 != 0)
                value = -value;
            break;
        case Atom::Kind::prime: {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), a.value.get_mpz_t(), mpz_class(abs(n)).get_ui());
            value *= n > 0 ? mpq_class(pw) : mpq_class(1, pw);
            value.canonicalize();
            break;
        }
        case Atom::Kind::letter:
            letters[a.name] = static_cast<int>(n.get_si());
            break;
        case Atom::Kind::residue:
            return std::nullopt;
        }
    }
    FieldUnit u(Scalar(field_, value));
    for (const auto& [name, e] : letters)
        u = u * FieldUnit::letter(Scalar(field_, 1), name, e);
    return u;
}

std::string Coefficient::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [t, n] : terms_) {
        const bool negative = n < 0;
        mpz_class mag = abs(n);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (t.empty()) {
            out << mag.get_str();
            continue;
        }
        for (const auto& a : t)
            out << '[' << a.to_string() << ']';
        if (mag != 1)
            out << "·" << mag.get_str();
    }
    return out.str();
}

Decision equal(const Coefficient& a, const Coefficient& b)
{
    return (a - b).is_zero();
}

namespace {

mpz_class atom_integer(const Atom& a)
{
    return a.kind == Atom::Kind::minus_one ? mpz_class(-1) : a.value;
}

Decision decide_degree_two(const Coefficient& part)
{
    mpz_class real = 0;
    std::map<mpz_class, mpz_class> residues;
    for (const auto& [t, n] : part.terms()) {
        const mpz_class a = atom_integer(t[0]), b = atom_integer(t[1]);
        if (a < 0 && b < 0)
            real += n;
        for (const auto& atom : t) {
            if (atom.kind != Atom::Kind::prime || atom.value == 2)
                continue;
            const mpz_class& p = atom.value;
            if (t[0] == t[1] && &atom != &t[0])
                continue;
            const int va = a == p ? 1 : 0, vb = b == p ? 1 : 0;
            // d_p{a, b} = (-1)^(va vb) a^vb / b^va mod p
            mpz_class value = (va * vb) % 2 ? -1 : 1;
            if (vb)
                value *= a;
            if (va) {
                mpz_class inv;
                mpz_invert(inv.get_mpz_t(), mpz_class(b % p + p).get_mpz_t(), p.get_mpz_t());
                value *= inv;
            }
            value = ((value % p) + p) % p;
            mpz_class power;
            mpz_powm(power.get_mpz_t(), value.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            auto [it, fresh] = residues.emplace(p, 1);
            it->second = it->second * power % p;
        }
    }
    if (real % 2 != 0)
        return Decision::nonzero;
    for (const auto& [p, r] : residues)
        if (r != 1)
            return Decision::nonzero;
    return Decision::zero;
}

bool has_letters(const Coefficient& c)
{
    for (const auto& [t, n] : c.terms())
        for (const auto& a : t)
            if (a.kind == Atom::Kind::letter)
                return true;
    return false;
}

}  // namespace

Decision certify_zero(const Coefficient& c)
{
    Decision d = c.is_zero();
    if (d != Decision::unknown || c.field().is_prime())
        return d;
    bool unknown = false;
    for (int deg = std::max(c.min_degree(), 0); deg <= c.max_degree(); ++deg) {
        Coefficient part = c.homogeneous_part(deg);
        if (part.empty())
            continue;
        Decision pd = part.is_zero();
        if (pd == Decision::unknown && !has_letters(part)) {
            if (deg == 2) {
                pd = decide_degree_two(part);
            } else if (deg >= 3) {
                mpz_class n = 0;
                for (const auto& [t, k] : part.terms()) {
                    bool all_minus = true;
                    for (const auto& a : t)
                        all_minus = all_minus && a.kind == Atom::Kind::minus_one;
                    if (all_minus)
                        n += k;
                }
                pd = n % 2 != 0 ? Decision::nonzero : Decision::zero;
            }
        }
        if (pd == Decision::nonzero)
            return Decision::nonzero;
        unknown = unknown || pd == Decision::unknown;
    }
    return unknown ? Decision::unknown : Decision::zero;
}

}  // namespace motarr
