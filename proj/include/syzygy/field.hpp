#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <boost/multiprecision/gmp.hpp>

namespace syzygy {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Error taxonomy shared across the toolkit. Every failure mode the API
// contracts name gets its own type so callers can dispatch on it.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };
struct MissingStructure : Error { using Error::Error; };
struct BoundTooSmall : Error { using Error::Error; };
struct ZeroComplex : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

enum class FieldKind { Rationals, PrimeField };

bool is_prime_u32(uint32_t n);

// The coefficient field: Q or F_p with p prime, p < 2^31.
class FieldSpec {
  public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime_field(uint32_t p);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
    uint32_t characteristic() const { return p_; }  // 0 for Q
    uint32_t p() const;

    bool operator==(const FieldSpec&) const = default;
    std::string to_string() const;

  private:
    FieldSpec(FieldKind k, uint32_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    uint32_t p_;
};

// Residue arithmetic helpers for F_p, p < 2^31.
inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;  // < 2^32, no overflow since a,b < 2^31
    return s >= p ? s - p : s;
}
inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}
inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }
inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>(uint64_t(a) * b % p);
}
uint32_t fp_inv(uint32_t a, uint32_t p);  // throws InvalidParameter on a == 0
uint32_t fp_pow(uint32_t a, uint64_t e, uint32_t p);

// A field element in canonical form: reduced fraction with positive
// denominator over Q, residue in [0, p) over F_p. Equality is
// representational equality.
class Scalar {
  public:
    explicit Scalar(const FieldSpec& f);  // zero element
    static Scalar zero(const FieldSpec& f) { return Scalar(f); }
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(const FieldSpec& f, long long n);
    static Scalar of_rational(const Rational& r);  // field = Q
    static Scalar of_residue(const FieldSpec& f, uint64_t r);
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    const Rational& rational() const;  // requires Q
    uint32_t residue() const;          // requires F_p

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws InvalidParameter on zero
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    void check_same_field(const Scalar& o) const;
    FieldSpec field_;
    std::variant<Rational, uint32_t> v_;
};

}  // namespace syzygy
