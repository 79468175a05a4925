#include "burnloop/rational.hpp"

#include <stdexcept>

#include "burnloop/errors.hpp"

namespace burnloop {

Scalar::Scalar(long num, long den, int prime) : v_(num, den), p_(prime) {
  if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
  v_.canonicalize();
  check();
}

Scalar::Scalar(mpq_class v, int prime) : v_(std::move(v)), p_(prime) {
  v_.canonicalize();
  check();
}

Scalar Scalar::parse(const std::string& s, int prime) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ParseError("Scalar: cannot parse '" + s + "'");
  v.canonicalize();
  return Scalar(std::move(v), prime);
}

Scalar Scalar::at_prime(int p) const {
  Scalar r(*this);
  r.p_ = p;
  r.check();
  return r;
}

bool Scalar::is_integer() const { return v_.get_den() == 1; }

bool Scalar::is_nonneg_integer() const { return is_integer() && sgn(v_) >= 0; }

long Scalar::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::invalid_argument("Scalar::to_long on non-integer " + str());
  return v_.get_num().get_si();
}

std::string Scalar::str() const { return v_.get_str(); }

int Scalar::combine_primes(int a, int b) {
  if (a == 0) return b;
  if (b == 0) return a;
  if (a != b) throw std::invalid_argument("Scalar: mixing primes in arithmetic");
  return a;
}

void Scalar::check() const {
  if (p_ > 0 && mpz_divisible_ui_p(v_.get_den().get_mpz_t(), (unsigned long)p_))
    throw InternalError("Scalar: denominator " + v_.get_den().get_str() +
                        " not coprime to p=" + std::to_string(p_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return Scalar(mpq_class(a.v_ + b.v_), Scalar::combine_primes(a.p_, b.p_));
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return Scalar(mpq_class(a.v_ - b.v_), Scalar::combine_primes(a.p_, b.p_));
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return Scalar(mpq_class(a.v_ * b.v_), Scalar::combine_primes(a.p_, b.p_));
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::invalid_argument("Scalar: division by zero");
  return Scalar(mpq_class(a.v_ / b.v_), Scalar::combine_primes(a.p_, b.p_));
}
Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_), p_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  p_ = combine_primes(p_, o.p_);
  v_ += o.v_;
  check();
  return *this;
}

}  // namespace burnloop
