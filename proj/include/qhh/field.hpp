#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "qhh/errors.hpp"

namespace qhh {

// Exact rational scalar.  All arithmetic in the library is exact: either over
// the rationals or over a prime field, never floating point.
// Plain-value arithmetic (no expression templates): products and sums are
// themselves Rational, so they feed template code deduced on the scalar type.
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline std::string to_string(const Rational& x) { return x.str(); }

// Element of F_p with a runtime modulus.  A default-constructed element is an
// unbound zero: it adopts the modulus of the other operand, which lets generic
// code use F{} and F{1} as neutral elements.
class Fp {
 public:
  Fp() = default;
  Fp(long long v, long long p) : p_(p) { v_ = norm(v, p); }
  explicit Fp(long long v) : Fp(v, 0) {}

  long long value() const { return v_; }
  long long modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    long long p = join(a, b);
    return p == 0 ? Fp(a.v_ + b.v_) : Fp(a.v_ + b.v_, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    long long p = join(a, b);
    return p == 0 ? Fp(a.v_ - b.v_) : Fp(a.v_ - b.v_, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    long long p = join(a, b);
    return p == 0 ? Fp(a.v_ * b.v_) : Fp(a.v_ * b.v_, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return p_ == 0 ? Fp(-v_) : Fp(-v_, p_); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    join(a, b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const {
    if (v_ == 0) throw ValidationError("division by zero in F_p");
    // extended Euclid on (v, p)
    long long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      long long t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(x0, p_);
  }

 private:
  static long long norm(long long v, long long p) {
    if (p == 0) return v;
    v %= p;
    if (v < 0) v += p;
    return v;
  }
  // Moduli must agree; an unbound element (p == 0, used for literals 0/±1)
  // adopts the other side's modulus.
  static long long join(const Fp& a, const Fp& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
      throw ValidationError("mixed moduli in F_p arithmetic");
    return a.p_ != 0 ? a.p_ : b.p_;
  }

  long long v_ = 0;
  long long p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

// Which field a computation runs over.  Stored on the algebra, chosen on the
// command line; the template parameter of the linear-algebra layer must match.
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  long long p = 0;

  long long characteristic() const { return kind == Kind::rationals ? 0 : p; }

  static bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(long long p) {
    if (!is_prime(p)) throw ValidationError("field modulus must be prime, got " + std::to_string(p));
    return FieldSpec{Kind::prime, p};
  }

  // Accepts "rationals" or "fp:<p>".
  static FieldSpec parse(const std::string& s) {
    if (s == "rationals" || s == "q" || s == "Q") return rationals();
    if (s.rfind("fp:", 0) == 0) {
      long long p = 0;
      try {
        size_t pos = 0;
        p = std::stoll(s.substr(3), &pos);
        if (pos != s.size() - 3) throw std::invalid_argument(s);
      } catch (const std::exception&) {
        throw ValidationError("malformed field spec '" + s + "'");
      }
      return prime(p);
    }
    throw ValidationError("unknown field spec '" + s + "' (expected 'rationals' or 'fp:<p>')");
  }

  std::string str() const {
    return kind == Kind::rationals ? "rationals" : "fp:" + std::to_string(p);
  }
};

// Bridge from an integer literal into the scalar type, honoring the modulus.
template <class F>
F scalar_of(long long n, const FieldSpec& fs);

template <>
inline Rational scalar_of<Rational>(long long n, const FieldSpec&) {
  return Rational(n);
}

template <>
inline Fp scalar_of<Fp>(long long n, const FieldSpec& fs) {
  return Fp(n, fs.p);
}

}  // namespace qhh
