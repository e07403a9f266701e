#include "syzygy/field.hpp"

#include <cctype>

namespace syzygy {

namespace {

// Deterministic Miller-Rabin. Bases {2, 7, 61} decide primality for all
// n < 4'759'123'141, which covers the full uint32 range.
bool miller_rabin_witness(uint64_t n, uint64_t a, uint64_t d, int r) {
    a %= n;
    if (a == 0) return false;
    uint64_t x = 1;
    // pow a^d mod n; n < 2^32 so 64-bit products do not overflow
    uint64_t base = a, e = d;
    while (e) {
        if (e & 1) x = x * base % n;
        base = base * base % n;
        e >>= 1;
    }
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (uint64_t a : {2ull, 7ull, 61ull}) {
        if (miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p)) {
        throw InvalidParameter("prime_field: p must be a prime below 2^31, got " +
                               std::to_string(p));
    }
    return FieldSpec(FieldKind::PrimeField, p);
}

uint32_t FieldSpec::p() const {
    if (!is_prime_field()) throw InvalidParameter("p(): field is Q");
    return p_;
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

uint32_t fp_inv(uint32_t a, uint32_t p) {
    if (a == 0) throw InvalidParameter("fp_inv: zero has no inverse");
    // extended Euclid on (a, p)
    int64_t t = 0, new_t = 1;
    int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

uint32_t fp_pow(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t x = 1, base = a % p;
    while (e) {
        if (e & 1) x = x * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(x);
}

Scalar::Scalar(const FieldSpec& f) : field_(f) {
    if (f.is_rationals())
        v_ = Rational(0);
    else
        v_ = uint32_t(0);
}

Scalar Scalar::one(const FieldSpec& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldSpec& f, long long n) {
    Scalar s(f);
    if (f.is_rationals()) {
        s.v_ = Rational(n);
    } else {
        uint32_t p = f.p();
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += p;
        s.v_ = static_cast<uint32_t>(r);
    }
    return s;
}

Scalar Scalar::of_rational(const Rational& r) {
    Scalar s(FieldSpec::rationals());
    s.v_ = r;
    return s;
}

Scalar Scalar::of_residue(const FieldSpec& f, uint64_t r) {
    if (!f.is_prime_field()) throw FieldMismatch("of_residue: field is Q");
    Scalar s(f);
    s.v_ = static_cast<uint32_t>(r % f.p());
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar literal");
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
        neg = text[pos] == '-';
        ++pos;
    }
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) throw ParseError("bad scalar literal: " + text);
    BigInt num(text.substr(digits_start, pos - digits_start));
    BigInt den(1);
    if (pos < text.size()) {
        if (text[pos] != '/') throw ParseError("bad scalar literal: " + text);
        ++pos;
        std::size_t den_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_start || pos != text.size())
            throw ParseError("bad scalar literal: " + text);
        den = BigInt(text.substr(den_start, pos - den_start));
        if (den == 0) throw ParseError("zero denominator: " + text);
    }
    if (neg) num = -num;
    if (f.is_rationals()) {
        Scalar s(f);
        s.v_ = Rational(num, den);  // mpq_rational canonicalizes
        return s;
    }
    uint32_t p = f.p();
    BigInt n = num % p;
    if (n < 0) n += p;
    uint32_t nr = n.convert_to<uint32_t>();
    BigInt d = den % p;
    uint32_t dr = d.convert_to<uint32_t>();
    if (dr == 0) throw ParseError("denominator divisible by p: " + text);
    Scalar s(f);
    s.v_ = fp_mul(nr, fp_inv(dr, p), p);
    return s;
}

bool Scalar::is_zero() const {
    if (field_.is_rationals()) return std::get<Rational>(v_) == 0;
    return std::get<uint32_t>(v_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rationals()) return std::get<Rational>(v_) == 1;
    return std::get<uint32_t>(v_) == 1;
}

const Rational& Scalar::rational() const {
    if (!field_.is_rationals()) throw FieldMismatch("rational(): field is F_p");
    return std::get<Rational>(v_);
}

uint32_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw FieldMismatch("residue(): field is Q");
    return std::get<uint32_t>(v_);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch("scalar arithmetic across different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rationals())
        s.v_ = std::get<Rational>(v_) + std::get<Rational>(o.v_);
    else
        s.v_ = fp_add(std::get<uint32_t>(v_), std::get<uint32_t>(o.v_), field_.p());
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rationals())
        s.v_ = std::get<Rational>(v_) - std::get<Rational>(o.v_);
    else
        s.v_ = fp_sub(std::get<uint32_t>(v_), std::get<uint32_t>(o.v_), field_.p());
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rationals())
        s.v_ = std::get<Rational>(v_) * std::get<Rational>(o.v_);
    else
        s.v_ = fp_mul(std::get<uint32_t>(v_), std::get<uint32_t>(o.v_), field_.p());
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rationals())
        s.v_ = -std::get<Rational>(v_);
    else
        s.v_ = fp_neg(std::get<uint32_t>(v_), field_.p());
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InvalidParameter("inverse of zero");
    Scalar s(field_);
    if (field_.is_rationals())
        s.v_ = Rational(1) / std::get<Rational>(v_);
    else
        s.v_ = fp_inv(std::get<uint32_t>(v_), field_.p());
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    if (field_.is_rationals()) return std::get<Rational>(v_) == std::get<Rational>(o.v_);
    return std::get<uint32_t>(v_) == std::get<uint32_t>(o.v_);
}

std::string Scalar::to_string() const {
    if (field_.is_prime_field()) return std::to_string(std::get<uint32_t>(v_));
    const Rational& r = std::get<Rational>(v_);
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace syzygy
