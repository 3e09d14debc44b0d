#include "qp/scalar.hpp"

#include <cctype>

#include "qp/errors.hpp"

namespace qp {

FieldSpec FieldSpec::gf(unsigned long p) {
    mpz_class z(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw FieldError("GF(" + std::to_string(p) + "): characteristic must be prime");
    return FieldSpec(p);
}

std::string FieldSpec::to_string() const {
    return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

namespace {

mpq_class reduce_mod(const mpq_class& q, unsigned long p) {
    mpz_class mod(static_cast<unsigned long>(p));
    mpz_class num = q.get_num() % mod;
    if (num < 0) num += mod;
    if (q.get_den() == 1) return mpq_class(num);
    mpz_class den = q.get_den() % mod;
    mpz_class inv;
    if (den == 0 || mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw FieldError("denominator not invertible mod " + std::to_string(p));
    mpz_class r = (num * inv) % mod;
    if (r < 0) r += mod;
    return mpq_class(r);
}

}  // namespace

Scalar::Scalar(const FieldSpec& k, long n) : v_(n), k_(k) {
    if (!k.is_rational()) v_ = reduce_mod(v_, k.characteristic());
}

Scalar::Scalar(const FieldSpec& k, const mpz_class& n) : v_(n), k_(k) {
    if (!k.is_rational()) v_ = reduce_mod(v_, k.characteristic());
}

Scalar::Scalar(const FieldSpec& k, const mpq_class& q) : v_(q), k_(k) {
    v_.canonicalize();
    if (!k.is_rational()) v_ = reduce_mod(v_, k.characteristic());
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(k_ == o.k_))
        throw FieldError("mixed-field arithmetic: " + k_.to_string() + " vs " + o.k_.to_string());
}

Scalar Scalar::make(const mpq_class& raw) const {
    Scalar r;
    r.k_ = k_;
    r.v_ = raw;
    r.v_.canonicalize();
    if (!k_.is_rational()) r.v_ = reduce_mod(r.v_, k_.characteristic());
    return r;
}

Scalar Scalar::operator-() const { return make(-v_); }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    return make(v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    return make(v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    return make(v_ * o.v_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    if (k_.is_rational()) return make(1 / v_);
    mpz_class mod(k_.characteristic()), inv;
    mpz_class num = v_.get_num();
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
    return make(mpq_class(inv));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const { return k_ == o.k_ && v_ == o.v_; }

bool Scalar::operator<(const Scalar& o) const {
    check_same_field(o);
    return v_ < o.v_;
}

std::string Scalar::to_string() const { return v_.get_str(); }

std::optional<Scalar> Scalar::parse(const FieldSpec& k, const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-' || text[i] == '+') {
        neg = text[i] == '-';
        ++i;
    }
    std::string num, den;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
    if (num.empty()) return std::nullopt;
    if (i < text.size() && text[i] == '/') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den += text[i++];
        if (den.empty()) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;
    mpq_class q(mpz_class(num), den.empty() ? mpz_class(1) : mpz_class(den));
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    if (neg) q = -q;
    try {
        return Scalar(k, q);
    } catch (const FieldError&) {
        return std::nullopt;
    }
}

}  // namespace qp
