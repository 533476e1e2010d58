#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "nilrad/errors.hpp"

namespace nilrad {

/// Ground field descriptor: the rationals, or a prime field F_p.
class Field {
 public:
  Field() : p_(0) {}

  static Field rationals() { return Field(0); }

  /// Throws InputError when p is not prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  /// "Q" or "Fp:<p>".
  std::string name() const;

  /// Accepts "Q", "Fp:<p>" and the CLI spelling "F<p>".
  static Field parse(const std::string& s);

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Exact field element: an arbitrary-precision rational in lowest terms
/// (denominator > 0), or a reduced residue mod a prime.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long long v);
  static Scalar from_mpq(mpq_class q);  // rationals only

  /// Parses "a", "a/b" over Q; "r mod p", "r" or "a/b" over F_p.
  static Scalar parse(const Field& f, const std::string& s);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;  // throws Error on zero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Serialized form: "a" or "a/b"; "r mod p".
  std::string str() const;

  /// Growth guard: bit length of the largest of |numerator|, denominator
  /// (residues report the bit length of p). Zero reports 1.
  std::size_t bit_size() const;

  const mpq_class& rational() const;  // throws on prime-field values
  std::uint64_t residue() const;      // throws on rationals

 private:
  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;

  void check_same_field(const Scalar& o) const;
};

}  // namespace nilrad
