#pragma once

// Exact coefficient fields: the rationals, or a prime field GF(p).

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "schur/error.hpp"

namespace schur {

class Field {
 public:
  /// The rational field.
  Field() = default;

  static Field rational() { return Field(); }

  static Field prime(std::uint64_t p) {
    if (!is_prime(p)) {
      throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    }
    if (p >= (std::uint64_t{1} << 62)) {
      throw DomainError("field characteristic too large");
    }
    Field f;
    f.p_ = p;
    return f;
  }

  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  /// "rational" or "gf:p".
  std::string name() const {
    return is_rational() ? "rational" : "gf:" + std::to_string(p_);
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }

  std::uint64_t p_ = 0;
};

/// An element of a Field. Rationals are kept in lowest terms; residues in
/// 0..p-1.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const Field& f) { return from_integer(f, mpz_class(0)); }
  static Scalar one(const Field& f) { return from_integer(f, mpz_class(1)); }

  /// The ring homomorphism Z -> field.
  static Scalar from_integer(const Field& f, const mpz_class& v) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
      s.q_ = v;
    } else {
      s.residue_ = reduce(v, f.characteristic());
    }
    return s;
  }

  static Scalar from_integer(const Field& f, long v) {
    return from_integer(f, mpz_class(v));
  }

  /// num/den mapped into the field; den must be invertible.
  static Scalar from_fraction(const Field& f, const mpz_class& num,
                              const mpz_class& den) {
    if (den == 0) throw DomainError("zero denominator");
    if (f.is_rational()) {
      Scalar s;
      s.field_ = f;
      s.q_ = mpq_class(num, den);
      s.q_.canonicalize();
      return s;
    }
    return from_integer(f, num) / from_integer(f, den);
  }

  const Field& field() const noexcept { return field_; }

  bool is_zero() const {
    return field_.is_rational() ? q_ == 0 : residue_ == 0;
  }
  bool is_one() const {
    return field_.is_rational() ? q_ == 1 : residue_ == 1;
  }

  /// Exact rational value; only meaningful over the rationals.
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const noexcept { return residue_; }

  bool is_negative() const { return field_.is_rational() && q_ < 0; }

  /// "a" or "a/b" over the rationals, the canonical residue over GF(p).
  std::string to_string() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(residue_);
  }

  Scalar operator-() const {
    Scalar s = *this;
    if (field_.is_rational()) {
      s.q_ = -q_;
    } else if (residue_ != 0) {
      s.residue_ = field_.characteristic() - residue_;
    }
    return s;
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
      q_ += o.q_;
    } else {
      residue_ = (residue_ + o.residue_) % field_.characteristic();
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
      q_ *= o.q_;
    } else {
      residue_ = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(residue_) * o.residue_ %
          field_.characteristic());
    }
    return *this;
  }

  Scalar& operator/=(const Scalar& o) {
    check(o);
    if (o.is_zero()) throw DomainError("division by zero");
    if (field_.is_rational()) {
      q_ /= o.q_;
    } else {
      *this *= o.inverse();
    }
    return *this;
  }

  Scalar inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    Scalar s = *this;
    if (field_.is_rational()) {
      s.q_ = 1 / q_;
      return s;
    }
    // Fermat: a^(p-2).
    const std::uint64_t p = field_.characteristic();
    std::uint64_t result = 1;
    std::uint64_t base = residue_;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) {
        result = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(result) * base % p);
      }
      base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % p);
    }
    s.residue_ = result;
    return s;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.residue_ == b.residue_;
  }

 private:
  static std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
  }

  void check(const Scalar& o) const {
    if (!(field_ == o.field_)) throw DomainError("scalars from different fields");
  }

  Field field_;
  mpq_class q_;
  std::uint64_t residue_ = 0;
};

}  // namespace schur
