#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace specht {

/*
 * Exact coefficient fields.
 *
 * Two fields are supported: the rationals (GMP-backed, always stored
 * reduced with positive denominator) and prime fields F_p with a runtime
 * modulus.  Every field type provides
 *
 *   - a default constructor giving the additive identity,
 *   - a Context type holding whatever the field needs to build elements
 *     from integers (nothing for Q, the modulus for F_p),
 *   - from_int(x, ctx), arithmetic operators, inv(), is_zero(), str().
 *
 * A default-constructed Fp is an "anonymous" zero that carries no modulus
 * and combines with elements of any F_p; this is what sparse containers
 * hand back for absent entries.
 */

class Rational {
 public:
  struct Context {
    static const char* name() { return "rational"; }
  };

  Rational() : v_(0) {}
  explicit Rational(long x) : v_(x) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  static Rational from_int(long x, const Context&) { return Rational(x); }

  bool is_zero() const { return sgn(v_) == 0; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  std::string str() const { return v_.get_str(); }

  // numerator/denominator as strings, used by reports and fingerprints
  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

class Fp {
 public:
  struct Context {
    std::uint32_t p = 0;
    Context() = default;
    explicit Context(std::uint32_t modulus) : p(modulus) {
      if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
      for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("Fp: modulus must be prime");
    }
    std::string name() const { return "fp:" + std::to_string(p); }
  };

  Fp() = default;

  static Fp from_int(long x, const Context& ctx) {
    long r = x % static_cast<long>(ctx.p);
    if (r < 0) r += ctx.p;
    return Fp(static_cast<std::uint32_t>(r), ctx.p);
  }

  bool is_zero() const { return v_ == 0; }

  Fp operator-() const {
    if (v_ == 0) return *this;
    return Fp(p_ - v_, p_);
  }

  Fp& operator+=(const Fp& o) {
    if (o.p_ == 0) return *this;
    if (p_ == 0) { *this = o; return *this; }
    require_same(o);
    v_ = (v_ + o.v_) % p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) { return *this += (-o); }
  Fp& operator*=(const Fp& o) {
    if (p_ == 0 || o.p_ == 0) { *this = Fp(); return *this; }
    require_same(o);
    v_ = static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.v_ == 0 && b.v_ == 0) return true;
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inv() const {
    if (is_zero()) throw std::domain_error("Fp: inverse of zero");
    // p prime, so v^(p-2) works
    std::uint64_t base = v_, acc = 1, exp = p_ - 2;
    while (exp) {
      if (exp & 1) acc = acc * base % p_;
      base = base * base % p_;
      exp >>= 1;
    }
    return Fp(static_cast<std::uint32_t>(acc), p_);
  }

  std::string str() const { return std::to_string(v_); }
  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

 private:
  Fp(std::uint32_t v, std::uint32_t p) : v_(v), p_(p) {}
  void require_same(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli");
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

template <class F>
inline F field_one(const typename F::Context& ctx) { return F::from_int(1, ctx); }

template <class F>
inline F field_minus_one(const typename F::Context& ctx) { return F::from_int(-1, ctx); }

}  // namespace specht
