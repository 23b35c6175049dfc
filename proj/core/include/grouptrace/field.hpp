#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "grouptrace/errors.hpp"

namespace grouptrace {

enum class FieldKind { Rationals, PrimeField };

/// The exact base field: Q, or F_p for a prime p <= 2^31.
///
/// The bound on p keeps every product of two canonical residues inside an
/// unsigned 64-bit intermediate.
class Field {
public:
    static Field rationals() { return Field(FieldKind::Rationals, 0); }
    static Field prime_field(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

    /// 0 for Q, p for F_p.
    std::uint64_t characteristic() const { return p_; }

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;
};

/// An exact field element: a reduced fraction over Q (big-integer numerator
/// and denominator, positive denominator) or a canonical residue in [0, p)
/// over F_p.
class Scalar {
public:
    /// Rational zero. Provided so Scalar is usable in containers; real code
    /// should construct via zero()/one()/of_int() with an explicit field.
    Scalar() : field_(Field::rationals()), v_(mpq_class(0)) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long long v);
    static Scalar of_fraction(const Field& f, long long num, long long den);
    static Scalar of_rational(mpq_class q);
    static Scalar of_residue(const Field& f, std::uint64_t r);

    /// Parses "a", "-a/b" or "a mod p" (the mod tag, when present, must match
    /// the field).
    static Scalar parse(const Field& f, std::string_view text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const; // throws Error on zero

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Scalars over different fields are never equal.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "-3/7", "4"
    std::string str() const;
    /// "-3/7" over Q, "4 mod 5" over F_5
    std::string str_tagged() const;

    /// Q only.
    const mpq_class& rational_value() const;
    /// F_p only.
    std::uint64_t residue_value() const;

    /// The value as an integer if it is one (denominator 1 over Q, the
    /// canonical residue over F_p); throws otherwise.
    mpz_class as_integer() const;

private:
    Scalar(Field f, mpq_class q) : field_(f), v_(std::move(q)) {}
    Scalar(Field f, std::uint64_t r) : field_(f), v_(r) {}

    void check_same_field(const Scalar& o) const;
    const mpq_class& q() const { return std::get<mpq_class>(v_); }
    mpq_class& q() { return std::get<mpq_class>(v_); }
    std::uint64_t r() const { return std::get<std::uint64_t>(v_); }
    std::uint64_t& r() { return std::get<std::uint64_t>(v_); }

    Field field_;
    std::variant<mpq_class, std::uint64_t> v_;
};

bool is_prime(std::uint64_t n);

} // namespace grouptrace
