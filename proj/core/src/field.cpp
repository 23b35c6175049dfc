#include "grouptrace/field.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace grouptrace {

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t(1) << 31;

// Extended Euclid; returns x with a*x = 1 (mod p).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p);
    std::int64_t new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1)
        throw Error("not invertible mod " + std::to_string(p));
    if (t < 0)
        t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime_field(std::uint64_t p) {
    if (p > kMaxCharacteristic)
        throw Error("characteristic " + std::to_string(p) + " exceeds 2^31");
    if (!is_prime(p))
        throw Error("characteristic " + std::to_string(p) + " is not prime");
    return Field(FieldKind::PrimeField, p);
}

std::string Field::name() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) {
    return f.is_rationals() ? Scalar(f, mpq_class(0)) : Scalar(f, std::uint64_t(0));
}

Scalar Scalar::one(const Field& f) {
    return f.is_rationals() ? Scalar(f, mpq_class(1))
                            : Scalar(f, std::uint64_t(1 % f.characteristic()));
}

Scalar Scalar::of_int(const Field& f, long long v) {
    if (f.is_rationals())
        return Scalar(f, mpq_class(mpz_class(std::to_string(v))));
    const auto p = static_cast<std::int64_t>(f.characteristic());
    std::int64_t r = static_cast<std::int64_t>(v % p);
    if (r < 0)
        r += p;
    return Scalar(f, static_cast<std::uint64_t>(r));
}

Scalar Scalar::of_fraction(const Field& f, long long num, long long den) {
    if (den == 0)
        throw Error("zero denominator");
    return of_int(f, num) / of_int(f, den);
}

Scalar Scalar::of_rational(mpq_class q) {
    q.canonicalize();
    return Scalar(Field::rationals(), std::move(q));
}

Scalar Scalar::of_residue(const Field& f, std::uint64_t r) {
    if (!f.is_prime_field())
        throw FieldMismatchError("residue constructor requires a prime field");
    return Scalar(f, r % f.characteristic());
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? sgn(q()) == 0 : r() == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? q() == 1 : r() == 1 % field_.characteristic();
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals())
        return Scalar(field_, mpq_class(-q()));
    const std::uint64_t p = field_.characteristic();
    return Scalar(field_, r() == 0 ? std::uint64_t(0) : p - r());
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error("division by zero in " + field_.name());
    if (field_.is_rationals())
        return Scalar(field_, mpq_class(1 / q()));
    return Scalar(field_, inverse_mod(r(), field_.characteristic()));
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("scalar over " + field_.name() +
                                 " combined with scalar over " + o.field_.name());
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rationals())
        q() += o.q();
    else
        r() = (r() + o.r()) % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rationals()) {
        q() -= o.q();
    } else {
        const std::uint64_t p = field_.characteristic();
        r() = (r() + p - o.r()) % p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rationals())
        q() *= o.q();
    else
        r() = (r() * o.r()) % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    *this *= o.inverse();
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_)
        return false;
    return a.field_.is_rationals() ? a.q() == b.q() : a.r() == b.r();
}

std::string Scalar::str() const {
    return field_.is_rationals() ? q().get_str() : std::to_string(r());
}

std::string Scalar::str_tagged() const {
    if (field_.is_rationals())
        return str();
    return str() + " mod " + std::to_string(field_.characteristic());
}

const mpq_class& Scalar::rational_value() const {
    if (!field_.is_rationals())
        throw FieldMismatchError("rational_value() on " + field_.name());
    return q();
}

std::uint64_t Scalar::residue_value() const {
    if (!field_.is_prime_field())
        throw FieldMismatchError("residue_value() on " + field_.name());
    return r();
}

mpz_class Scalar::as_integer() const {
    if (field_.is_prime_field())
        return mpz_class(std::to_string(r()));
    if (q().get_den() != 1)
        throw Error("scalar " + str() + " is not an integer");
    return q().get_num();
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    if (s.empty())
        throw ParseError("empty scalar");

    // optional " mod p" suffix
    if (auto pos = s.find(" mod "); pos != std::string_view::npos) {
        std::string_view tag = trim(s.substr(pos + 5));
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(tag.data(), tag.data() + tag.size(), p);
        if (ec != std::errc() || ptr != tag.data() + tag.size())
            throw ParseError("bad modulus in scalar '" + std::string(text) + "'");
        if (!f.is_prime_field() || f.characteristic() != p)
            throw ParseError("scalar '" + std::string(text) + "' tagged mod " +
                             std::to_string(p) + " but field is " + f.name());
        s = trim(s.substr(0, pos));
    }

    const std::string body(s);
    if (body.empty())
        throw ParseError("empty scalar '" + std::string(text) + "'");
    for (char c : body)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("bad scalar '" + std::string(text) + "'");

    mpq_class q;
    if (q.set_str(body, 10) != 0)
        throw ParseError("bad scalar '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in scalar '" + std::string(text) + "'");
    q.canonicalize();

    if (f.is_rationals())
        return Scalar(f, std::move(q));

    // reduce numerator and denominator mod p
    const mpz_class pm(std::to_string(f.characteristic()));
    mpz_class nr = ((q.get_num() % pm) + pm) % pm;
    mpz_class dr = ((q.get_den() % pm) + pm) % pm;
    Scalar n = of_residue(f, nr.get_ui());
    Scalar d = of_residue(f, dr.get_ui());
    if (d.is_zero())
        throw ParseError("denominator of '" + std::string(text) + "' vanishes in " + f.name());
    return n / d;
}

} // namespace grouptrace
