#pragma once

#include <Eigen/Core>
#include <cmath>

#include "finsler/errors.hpp"

namespace finsler {

// Forward-mode dual number. Nesting Dual<Dual<...>> yields higher and mixed
// derivatives; all arithmetic is generic so the same evaluator code runs on
// double and on any nesting depth.
template <class T>
struct Dual {
  T a{};  // value
  T b{};  // derivative

  Dual() = default;
  Dual(double v) : a(v), b(0.0) {}  // NOLINT: implicit by design (literals)
  Dual(const T& value, const T& deriv) : a(value), b(deriv) {}
};

using D1 = Dual<double>;
using D2 = Dual<D1>;
using D3 = Dual<D2>;
using D4 = Dual<D3>;

inline double value_of(double x) { return x; }
template <class T>
double value_of(const Dual<T>& d) {
  return value_of(d.a);
}

// ---- arithmetic ----

template <class T>
Dual<T> operator+(const Dual<T>& u, const Dual<T>& v) {
  return {u.a + v.a, u.b + v.b};
}
template <class T>
Dual<T> operator-(const Dual<T>& u, const Dual<T>& v) {
  return {u.a - v.a, u.b - v.b};
}
template <class T>
Dual<T> operator-(const Dual<T>& u) {
  return {-u.a, -u.b};
}
template <class T>
Dual<T> operator+(const Dual<T>& u) {
  return u;
}
template <class T>
Dual<T> operator*(const Dual<T>& u, const Dual<T>& v) {
  return {u.a * v.a, u.a * v.b + u.b * v.a};
}
template <class T>
Dual<T> operator/(const Dual<T>& u, const Dual<T>& v) {
  if (value_of(v.a) == 0.0) throw DomainError("division by zero");
  T q = u.a / v.a;
  return {q, (u.b - q * v.b) / v.a};
}

template <class T>
Dual<T> operator+(const Dual<T>& u, double c) {
  return {u.a + c, u.b};
}
template <class T>
Dual<T> operator+(double c, const Dual<T>& u) {
  return {c + u.a, u.b};
}
template <class T>
Dual<T> operator-(const Dual<T>& u, double c) {
  return {u.a - c, u.b};
}
template <class T>
Dual<T> operator-(double c, const Dual<T>& u) {
  return {c - u.a, -u.b};
}
template <class T>
Dual<T> operator*(const Dual<T>& u, double c) {
  return {u.a * c, u.b * c};
}
template <class T>
Dual<T> operator*(double c, const Dual<T>& u) {
  return {c * u.a, c * u.b};
}
template <class T>
Dual<T> operator/(const Dual<T>& u, double c) {
  if (c == 0.0) throw DomainError("division by zero");
  return {u.a / c, u.b / c};
}
template <class T>
Dual<T> operator/(double c, const Dual<T>& u) {
  return Dual<T>(c) / u;
}

template <class T>
Dual<T>& operator+=(Dual<T>& u, const Dual<T>& v) {
  u = u + v;
  return u;
}
template <class T>
Dual<T>& operator-=(Dual<T>& u, const Dual<T>& v) {
  u = u - v;
  return u;
}
template <class T>
Dual<T>& operator*=(Dual<T>& u, const Dual<T>& v) {
  u = u * v;
  return u;
}
template <class T>
Dual<T>& operator/=(Dual<T>& u, const Dual<T>& v) {
  u = u / v;
  return u;
}

// Comparisons act on the value part; enough for pivot selection and branches.
template <class T>
bool operator<(const Dual<T>& u, const Dual<T>& v) {
  return value_of(u) < value_of(v);
}
template <class T>
bool operator>(const Dual<T>& u, const Dual<T>& v) {
  return value_of(u) > value_of(v);
}
template <class T>
bool operator==(const Dual<T>& u, const Dual<T>& v) {
  return value_of(u) == value_of(v);
}
template <class T>
bool operator!=(const Dual<T>& u, const Dual<T>& v) {
  return !(u == v);
}

// ---- elementary functions ----

inline double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

template <class T>
Dual<T> exp(const Dual<T>& u) {
  using std::exp;
  T e = exp(u.a);
  return {e, e * u.b};
}

inline double checked_log(double x) {
  if (x <= 0.0) throw DomainError("log of non-positive value");
  return std::log(x);
}
template <class T>
Dual<T> log(const Dual<T>& u) {
  if (value_of(u.a) <= 0.0) throw DomainError("log of non-positive value");
  using std::log;
  return {log(u.a), u.b / u.a};
}

inline double checked_sqrt(double x) {
  if (x < 0.0) throw DomainError("sqrt of negative value");
  return std::sqrt(x);
}
template <class T>
Dual<T> sqrt(const Dual<T>& u) {
  if (value_of(u.a) <= 0.0) throw DomainError("sqrt of non-positive value");
  using std::sqrt;
  T r = sqrt(u.a);
  return {r, u.b / (2.0 * r)};
}

template <class T>
Dual<T> sin(const Dual<T>& u) {
  using std::cos;
  using std::sin;
  return {sin(u.a), cos(u.a) * u.b};
}
template <class T>
Dual<T> cos(const Dual<T>& u) {
  using std::cos;
  using std::sin;
  return {cos(u.a), -(sin(u.a) * u.b)};
}
template <class T>
Dual<T> tanh(const Dual<T>& u) {
  using std::tanh;
  T t = tanh(u.a);
  return {t, (1.0 - t * t) * u.b};
}

// abs / sign are differentiated piecewise away from zero; at exactly zero the
// positive branch is used so evaluation never faults.
template <class T>
Dual<T> abs(const Dual<T>& u) {
  return value_of(u.a) < 0.0 ? -u : u;
}
template <class T>
Dual<T> sign(const Dual<T>& u) {
  return Dual<T>(sgn(value_of(u.a)));
}
inline double sign(double x) { return sgn(x); }

// Fractional powers need a positive base; integer powers go through powi.
inline double checked_pow(double x, double p) {
  if (x <= 0.0) throw DomainError("pow with non-positive base and non-integer exponent");
  return std::pow(x, p);
}
template <class T>
Dual<T> pow(const Dual<T>& u, double p) {
  if (value_of(u.a) <= 0.0) throw DomainError("pow with non-positive base and non-integer exponent");
  using std::pow;
  T v = pow(u.a, p);
  T d = p * pow(u.a, p - 1.0);
  return {v, d * u.b};
}
template <class T>
Dual<T> pow(const Dual<T>& u, const Dual<T>& v) {
  return exp(v * log(u));
}

// x^k for integer k, by repeated squaring; valid for any base sign.
template <class T>
T powi(const T& x, long long k) {
  if (k < 0) {
    if (value_of(x) == 0.0) throw DomainError("0 raised to a negative power");
    return T(1.0) / powi(x, -k);
  }
  T acc(1.0);
  T base = x;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

template <class T>
double abs_value(const T& x) {
  return std::abs(value_of(x));
}

}  // namespace finsler

// Minimal Eigen integration so dense containers of duals work.
namespace Eigen {
template <class T>
struct NumTraits<finsler::Dual<T>> : NumTraits<double> {
  using Real = finsler::Dual<T>;
  using NonInteger = finsler::Dual<T>;
  using Nested = finsler::Dual<T>;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2 * NumTraits<T>::ReadCost,
    AddCost = 2 * NumTraits<T>::AddCost,
    MulCost = 3 * NumTraits<T>::MulCost,
  };
};

template <class T, class BinOp>
struct ScalarBinaryOpTraits<finsler::Dual<T>, double, BinOp> {
  using ReturnType = finsler::Dual<T>;
};
template <class T, class BinOp>
struct ScalarBinaryOpTraits<double, finsler::Dual<T>, BinOp> {
  using ReturnType = finsler::Dual<T>;
};
}  // namespace Eigen
