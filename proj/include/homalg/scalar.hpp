#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace homalg {

/// Field tag: the rationals, or the prime field F_p.
class Field {
 public:
  constexpr Field() = default;

  static Field rational() { return Field(); }
  /// Throws InvariantViolation unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  /// 0 for Q.
  std::uint64_t characteristic() const { return p_; }

  /// "Q" or "Fp:p".
  std::string to_string() const;
  /// Inverse of to_string; throws InvariantViolation on malformed input.
  static Field parse(const std::string& text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit constexpr Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are GMP-canonical (lowest terms, positive
/// denominator); residues live in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long long v);
  static Scalar from_rational(const mpq_class& q);
  /// Accepts "n", "-n", "n/d" for Q, an integer for F_p (reduced mod p).
  static Scalar parse(Field f, const std::string& text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical text: "num/den" with the sign on the numerator, or "num" when den = 1.
  std::string to_string() const;

  /// Only valid for rational scalars.
  const mpq_class& rational() const;
  /// Only valid for prime-field scalars.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// this -= a * b, without temporaries in the common case.
  void sub_mul(const Scalar& a, const Scalar& b);
  void add_mul(const Scalar& a, const Scalar& b);
  Scalar inverse() const;
  void set_zero();

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace homalg
