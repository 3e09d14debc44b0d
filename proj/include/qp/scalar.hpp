#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qp {

/// Coefficient field: the rationals (characteristic 0) or a prime field GF(p).
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec gf(unsigned long p);  // throws FieldError unless p is prime

    unsigned long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    bool operator==(const FieldSpec& o) const = default;
    std::string to_string() const;  // "QQ" or "GF(p)"

private:
    explicit FieldSpec(unsigned long p) : p_(p) {}
    unsigned long p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (mpq canonical form); GF(p) residues are kept in [0, p).
class Scalar {
public:
    Scalar() = default;  // rational zero
    Scalar(const FieldSpec& k, long n);
    Scalar(const FieldSpec& k, const mpz_class& n);
    Scalar(const FieldSpec& k, const mpq_class& q);  // GF(p): num * den^-1

    const FieldSpec& field() const { return k_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws FieldError on 0
    Scalar inverse() const;                   // throws FieldError on 0
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Deterministic order within one field (rational value / residue value).
    bool operator<(const Scalar& o) const;

    const mpq_class& value() const { return v_; }
    std::string to_string() const;  // "3", "-1/2", residues as "4"

    /// Parses "n", "-n", or "n/d". Over GF(p) the value is reduced mod p;
    /// "n/d" requires d invertible. Returns nullopt on malformed input.
    static std::optional<Scalar> parse(const FieldSpec& k, const std::string& text);

private:
    void check_same_field(const Scalar& o) const;
    Scalar make(const mpq_class& raw) const;  // reduces into canonical form

    mpq_class v_ = 0;  // for GF(p): integer residue in [0, p)
    FieldSpec k_ = FieldSpec::rationals();
};

}  // namespace qp
