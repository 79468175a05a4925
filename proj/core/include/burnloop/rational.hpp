#pragma once

#include <gmpxx.h>

#include <string>

namespace burnloop {

/// Exact rational scalar, optionally tagged with a prime p. With a prime tag
/// the value must lie in Z localized at p (denominator coprime to p); this is
/// re-checked after every arithmetic operation. prime == 0 means untagged.
class Scalar {
 public:
  Scalar() : p_(0) {}
  Scalar(long num, long den = 1, int prime = 0);
  explicit Scalar(mpq_class v, int prime = 0);

  static Scalar parse(const std::string& s, int prime = 0);  // "num" or "num/den"

  const mpq_class& value() const { return v_; }
  int prime() const { return p_; }
  Scalar at_prime(int p) const;  // retag (and check) the same value

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const;
  bool is_nonneg_integer() const;
  long to_long() const;  // requires an integer that fits

  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

 private:
  static int combine_primes(int a, int b);
  void check() const;

  mpq_class v_;
  int p_;
};

}  // namespace burnloop
