#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace motarr {

// Base field descriptor. The formal backend does its geometry over Q and
// additionally allows named transcendental letters inside constant units.
class Field {
public:
    enum class Kind { rational, prime, formal };

    static Field rational() { return Field(Kind::rational, 0); }
    static Field formal() { return Field(Kind::formal, 0); }
    static Field prime(std::uint64_t p);
    // "q", "fp:<p>", "formal"
    static Field parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    bool is_prime() const noexcept { return kind_ == Kind::prime; }
    bool is_formal() const noexcept { return kind_ == Kind::formal; }
    std::string to_string() const;

    bool operator==(const Field&) const = default;

private:
    Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

// Element of Q or of F_p. Canonical form: reduced fraction with positive
// denominator, or a residue in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(const Field& field, long value);
    Scalar(const Field& field, const mpq_class& value);

    static Scalar parse(const Field& field, std::string_view text);

    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const noexcept { return r_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;
    Scalar pow(long exponent) const;

    bool operator==(const Scalar& o) const;
    std::strong_ordering operator<=>(const Scalar& o) const;

    std::string to_string() const;

private:
    void check_compatible(const Scalar& o) const;

    mpq_class q_ = 0;
    std::uint64_t r_ = 0;
    std::uint64_t p_ = 0;
};

// A nonzero constant of the base field, optionally times a Laurent monomial
// in formal letters (formal backend only).
class FieldUnit {
public:
    FieldUnit() = default;
    explicit FieldUnit(Scalar value);
    static FieldUnit letter(const Scalar& one, const std::string& name, int power = 1);

    const Scalar& value() const { return value_; }
    const std::map<std::string, int>& letters() const { return letters_; }
    bool is_concrete() const { return letters_.empty(); }
    bool is_one() const { return letters_.empty() && value_.is_one(); }

    FieldUnit operator*(const FieldUnit& o) const;
    FieldUnit operator/(const FieldUnit& o) const { return *this * o.inverse(); }
    FieldUnit operator-() const;
    FieldUnit inverse() const;
    FieldUnit pow(long exponent) const;

    bool operator==(const FieldUnit& o) const = default;
    std::strong_ordering operator<=>(const FieldUnit& o) const;

    std::string to_string() const;

private:
    Scalar value_;
    std::map<std::string, int> letters_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

}  // namespace motarr
