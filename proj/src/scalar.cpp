#include "toupie/scalar.hpp"

namespace toupie {

namespace {

bool is_prime_i64(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid inverse of a mod p, a != 0 mod p.
std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error("not invertible mod p");
    return mod_pos(t, p);
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (p > (std::int64_t(1) << 31) - 1)
        throw Error("prime modulus too large (max 2^31 - 1)");
    if (!is_prime_i64(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.p_ = p;
    return f;
}

std::string FieldSpec::to_string() const {
    return is_rational() ? "rational" : "prime " + std::to_string(p_);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw Error("scalar field mismatch");
}

Scalar Scalar::make(BigRational v) const {
    Scalar s(field_);
    if (field_.is_prime_field()) {
        // v is an integer combination of residues, so its denominator is 1.
        std::int64_t p = field_.prime();
        BigInt n = boost::multiprecision::numerator(v) % p;
        if (n < 0) n += p;
        s.value_ = BigRational(n);
    } else {
        s.value_ = std::move(v);
    }
    return s;
}

Scalar Scalar::of(const FieldSpec& f, long long v) {
    Scalar s(f);
    return s.make(BigRational(v));
}

Scalar Scalar::rational(BigRational v) {
    Scalar s(FieldSpec::rationals());
    s.value_ = std::move(v);
    return s;
}

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw Error("zero denominator");
    return rational(BigRational(num, den));
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    return make(value_ + o.value_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    return make(value_ - o.value_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    return make(value_ * o.value_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    return s.make(-value_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    Scalar s(field_);
    if (field_.is_prime_field()) {
        std::int64_t r = value_.convert_to<std::int64_t>();
        s.value_ = BigRational(mod_inv(r, field_.prime()));
    } else {
        s.value_ = 1 / value_;
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return value_ == o.value_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_field(o);
    return value_ < o.value_;
}

std::string Scalar::to_string() const {
    BigInt n = boost::multiprecision::numerator(value_);
    BigInt d = boost::multiprecision::denominator(value_);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    std::size_t slash = text.find('/');
    auto parse_int = [](const std::string& s) -> BigInt {
        if (s.empty()) throw Error("empty number");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw Error("bad number '" + s + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw Error("bad number '" + s + "'");
        return BigInt(s);
    };
    BigInt num = parse_int(slash == std::string::npos ? text : text.substr(0, slash));
    BigInt den = 1;
    if (slash != std::string::npos) {
        den = parse_int(text.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in '" + text + "'");
    }
    Scalar s(f);
    if (f.is_prime_field()) {
        std::int64_t p = f.prime();
        BigInt n = num % p;
        if (n < 0) n += p;
        BigInt d = den % p;
        if (d == 0) throw Error("denominator divisible by the field characteristic");
        std::int64_t inv = mod_inv(d.convert_to<std::int64_t>(), p);
        s.value_ = BigRational((n * inv) % p);
    } else {
        s.value_ = BigRational(num, den);
    }
    return s;
}

}  // namespace toupie
