#include "motarr/scalar.hpp"

#include "motarr/error.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace motarr {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1)
            result = mulmod(result, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return result;
}

Field Field::prime(std::uint64_t p)
{
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        fail(ErrorKind::precondition_violated, "field characteristic " + std::to_string(p) + " is not prime");
    return Field(Kind::prime, p);
}

Field Field::parse(std::string_view text)
{
    if (text == "q" || text == "Q" || text == "rational")
        return rational();
    if (text == "formal")
        return formal();
    if (text.substr(0, 3) == "fp:") {
        std::uint64_t p = 0;
        auto rest = text.substr(3);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
        if (ec != std::errc() || ptr != rest.data() + rest.size())
            fail(ErrorKind::parse_error, "bad prime in field descriptor '" + std::string(text) + "'");
        return prime(p);
    }
    fail(ErrorKind::parse_error, "unknown field descriptor '" + std::string(text) + "'");
}

std::string Field::to_string() const
{
    switch (kind_) {
    case Kind::rational: return "q";
    case Kind::formal: return "formal";
    case Kind::prime: return "fp:" + std::to_string(p_);
    }
    return "?";
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p)
{
    return mpz_fdiv_ui(v.get_mpz_t(), p);
}

}  // namespace

Scalar::Scalar(const Field& field, long value)
{
    if (field.is_prime()) {
        p_ = field.characteristic();
        r_ = reduce_mpz(mpz_class(value), p_);
    } else {
        q_ = value;
    }
}

Scalar::Scalar(const Field& field, const mpq_class& value)
{
    if (field.is_prime()) {
        p_ = field.characteristic();
        auto num = reduce_mpz(value.get_num(), p_);
        auto den = reduce_mpz(value.get_den(), p_);
        if (den == 0)
            fail(ErrorKind::precondition_violated,
                 "denominator of " + value.get_str() + " vanishes modulo " + std::to_string(p_));
        r_ = mulmod(num, powmod(den, p_ - 2, p_), p_);
    } else {
        q_ = value;
        q_.canonicalize();
    }
}

Scalar Scalar::parse(const Field& field, std::string_view text)
{
    std::string s(text);
    auto trimmed_begin = s.find_first_not_of(" \t");
    auto trimmed_end = s.find_last_not_of(" \t");
    if (trimmed_begin == std::string::npos)
        fail(ErrorKind::parse_error, "empty scalar");
    s = s.substr(trimmed_begin, trimmed_end - trimmed_begin + 1);
    if (!s.empty() && s[0] == '+')
        s = s.substr(1);
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            fail(ErrorKind::parse_error, "bad scalar '" + std::string(text) + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        fail(ErrorKind::parse_error, "bad scalar '" + std::string(text) + "'");
    q.canonicalize();
    return Scalar(field, q);
}

void Scalar::check_compatible(const Scalar& o) const
{
    if (p_ != o.p_)
        fail(ErrorKind::precondition_violated, "mixing scalars of different fields");
}

bool Scalar::is_zero() const
{
    return p_ ? r_ == 0 : q_ == 0;
}

bool Scalar::is_one() const
{
    return p_ ? r_ == 1 % p_ : q_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check_compatible(o);
    Scalar s = *this;
    if (p_) {
        s.r_ = (r_ + o.r_) % p_;
    } else {
        s.q_ = q_ + o.q_;
    }
    return s;
}

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    if (p_) {
        s.r_ = (p_ - r_) % p_;
    } else {
        s.q_ = -q_;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const
{
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check_compatible(o);
    Scalar s = *this;
    if (p_) {
        s.r_ = mulmod(r_, o.r_, p_);
    } else {
        s.q_ = q_ * o.q_;
    }
    return s;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        fail(ErrorKind::zero_unit, "division by zero");
    Scalar s = *this;
    if (p_) {
        s.r_ = powmod(r_, p_ - 2, p_);
    } else {
        s.q_ = 1 / q_;
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    return *this * o.inverse();
}

Scalar Scalar::pow(long exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    Scalar result = *this;
    if (p_) {
        result.r_ = powmod(r_, static_cast<std::uint64_t>(exponent), p_);
        return result;
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    result.q_ = mpq_class(num, den);
    result.q_.canonicalize();
    return result;
}

bool Scalar::operator==(const Scalar& o) const
{
    return p_ == o.p_ && (p_ ? r_ == o.r_ : q_ == o.q_);
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const
{
    if (p_ != o.p_)
        return p_ <=> o.p_;
    if (p_)
        return r_ <=> o.r_;
    int c = cmp(q_, o.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Scalar::to_string() const
{
    return p_ ? std::to_string(r_) : q_.get_str();
}

// ---------------------------------------------------------------------------

FieldUnit::FieldUnit(Scalar value) : value_(std::move(value))
{
    if (value_.is_zero())
        fail(ErrorKind::zero_unit, "zero is not a unit");
}

FieldUnit FieldUnit::letter(const Scalar& one, const std::string& name, int power)
{
    FieldUnit u(one);
    if (power != 0)
        u.letters_[name] = power;
    return u;
}

FieldUnit FieldUnit::operator*(const FieldUnit& o) const
{
    FieldUnit u(value_ * o.value_);
    u.letters_ = letters_;
    for (const auto& [name, e] : o.letters_) {
        int& slot = u.letters_[name];
        slot += e;
        if (slot == 0)
            u.letters_.erase(name);
    }
    return u;
}

FieldUnit FieldUnit::operator-() const
{
    FieldUnit u = *this;
    u.value_ = -value_;
    return u;
}

FieldUnit FieldUnit::inverse() const
{
    FieldUnit u(value_.inverse());
    for (const auto& [name, e] : letters_)
        u.letters_[name] = -e;
    return u;
}

FieldUnit FieldUnit::pow(long exponent) const
{
    FieldUnit u(value_.pow(exponent));
    for (const auto& [name, e] : letters_)
        u.letters_[name] = static_cast<int>(e * exponent);
    if (exponent == 0)
        u.letters_.clear();
    return u;
}

std::strong_ordering FieldUnit::operator<=>(const FieldUnit& o) const
{
    if (auto c = value_ <=> o.value_; c != 0)
        return c;
    return letters_ <=> o.letters_;
}

std::string FieldUnit::to_string() const
{
    std::ostringstream out;
    bool first = true;
    if (!value_.is_one() || letters_.empty()) {
        out << value_.to_string();
        first = false;
    }
    for (const auto& [name, e] : letters_) {
        if (!first)
            out << '*';
        out << name;
        if (e != 1)
            out << '^' << e;
        first = false;
    }
    return out.str();
}

}  // namespace motarr
