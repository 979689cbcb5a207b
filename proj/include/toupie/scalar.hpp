#ifndef TOUPIE_SCALAR_HPP
#define TOUPIE_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toupie {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Scalar;
using Vec = std::vector<Scalar>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation is asked to run over an unsupported field
// (e.g. the minimal-relation search over a finite field).
struct FieldError : Error {
    using Error::Error;
};

// Raised when an input exceeds a hard size cap (subset scans, path counts).
struct CapacityError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// The scalar field: the rationals, or Z/p for a prime p.
class FieldSpec {
public:
    FieldSpec() : p_(0) {}

    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime(std::int64_t p);

    bool is_rational() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    std::int64_t prime() const { return p_; }

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

    std::string to_string() const;

private:
    std::int64_t p_;  // 0 means rationals
};

// An exact field element. Rationals are kept reduced (cpp_rational
// canonicalizes); prime-field residues are kept in 0..p-1.
class Scalar {
public:
    Scalar() = default;  // zero of Q

    explicit Scalar(const FieldSpec& f) : field_(f) {}

    static Scalar of(const FieldSpec& f, long long v);
    static Scalar rational(BigRational v);
    static Scalar rational(long long num, long long den);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    // Rational value (or the residue as an integer for prime fields).
    const BigRational& value() const { return value_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used only for deterministic tie-breaks and canonical
    // serialization, not for field semantics.
    bool operator<(const Scalar& o) const;

    std::string to_string() const;

    // Parses the CLI scalar syntax: integers and fractions "a/b".
    // Prime-field values are reduced into 0..p-1.
    static Scalar parse(const FieldSpec& f, const std::string& text);

private:
    FieldSpec field_;
    BigRational value_;  // residue with denominator 1 for prime fields

    void check_same_field(const Scalar& o) const;
    Scalar make(BigRational v) const;
};

}  // namespace toupie

#endif
