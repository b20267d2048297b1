#ifndef REGAL_FIELD_HPP
#define REGAL_FIELD_HPP

#include <gmpxx.h>

#include <string>
#include <variant>

#include "regal/errors.hpp"

namespace regal {

enum class FieldKind { rationals, prime };

/// Exact field element: a canonical residue in [0, p) for prime fields,
/// or an arbitrary-precision fraction in lowest terms with positive
/// denominator for the rationals. Interpreted only through a Field.
class Scalar {
  public:
    Scalar() : v_(static_cast<long long>(0)) {}
    explicit Scalar(long long r) : v_(r) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}

    bool is_residue() const { return std::holds_alternative<long long>(v_); }
    long long residue() const { return std::get<long long>(v_); }
    const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  private:
    std::variant<long long, mpq_class> v_;
};

/// Field descriptor plus its arithmetic. Prime fields require an odd prime
/// characteristic below 2^31 so products of residues fit in 64 bits.
class Field {
  public:
    /// Rationals.
    Field() : kind_(FieldKind::rationals), p_(0) {}
    /// GF(p); validates that p is an odd prime < 2^31.
    explicit Field(long long p);

    FieldKind kind() const { return kind_; }
    long long characteristic() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(const mpz_class& n) const;
    Scalar from_int(long long n) const { return from_int(mpz_class(static_cast<long>(n))); }
    /// num/den as a field element; den must be invertible.
    Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    std::string to_string(const Scalar& a) const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

  private:
    FieldKind kind_;
    long long p_;
};

/// Deterministic Miller-Rabin, exact for 64-bit inputs.
bool is_prime_u64(unsigned long long n);

}  // namespace regal

#endif
