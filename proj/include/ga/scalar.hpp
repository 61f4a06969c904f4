// Scalar rings usable as multivector coefficients.
#pragma once

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ga {

// Complex numbers as ordered pairs over an arbitrary real ring.
template <class R>
struct Cx {
    R re{0};
    R im{0};

    Cx() = default;
    Cx(R r) : re(std::move(r)), im(0) {}
    Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
    Cx(int r) : re(r), im(0) {}

    friend Cx operator+(const Cx& a, const Cx& b) { return {R(a.re + b.re), R(a.im + b.im)}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {R(a.re - b.re), R(a.im - b.im)}; }
    friend Cx operator-(const Cx& a) { return {R(-a.re), R(-a.im)}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {R(a.re * b.re - a.im * b.im), R(a.re * b.im + a.im * b.re)};
    }
    friend Cx operator/(const Cx& a, const Cx& b) {
        R d = b.re * b.re + b.im * b.im;
        return {R((a.re * b.re + a.im * b.im) / d), R((a.im * b.re - a.re * b.im) / d)};
    }
    Cx& operator+=(const Cx& o) { return *this = *this + o; }
    Cx& operator-=(const Cx& o) { return *this = *this - o; }
    Cx& operator*=(const Cx& o) { return *this = *this * o; }
    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }
    Cx conj() const { return {re, R(-im)}; }
};

template <class T>
struct Ring;

template <>
struct Ring<double> {
    static constexpr bool exact = false;
    static constexpr bool field = true;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long v) { return double(v); }
    static bool is_zero(double x) { return x == 0.0; }
    static double magnitude(double x) { return std::fabs(x); }
    static double inv(double x) { return 1.0 / x; }
    static std::string str(double x) {
        char buf[64];
        auto r = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, r.ptr);
    }
    static int sign(double x) { return (x > 0) - (x < 0); }
};

template <>
struct Ring<mpz_class> {
    static constexpr bool exact = true;
    static constexpr bool field = false;
    static mpz_class zero() { return 0; }
    static mpz_class one() { return 1; }
    static mpz_class from_int(long v) { return v; }
    static bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
    static double magnitude(const mpz_class& x) { return std::fabs(x.get_d()); }
    static mpz_class inv(const mpz_class& x) {
        if (x == 1 || x == -1) return x;
        throw std::domain_error("integer not a unit");
    }
    static std::string str(const mpz_class& x) { return x.get_str(); }
    static int sign(const mpz_class& x) { return sgn(x); }
};

template <>
struct Ring<mpq_class> {
    static constexpr bool exact = true;
    static constexpr bool field = true;
    static mpq_class zero() { return 0; }
    static mpq_class one() { return 1; }
    static mpq_class from_int(long v) { return v; }
    static bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
    static double magnitude(const mpq_class& x) { return std::fabs(x.get_d()); }
    static mpq_class inv(const mpq_class& x) { return mpq_class(1) / x; }
    static std::string str(const mpq_class& x) { return x.get_str(); }
    static int sign(const mpq_class& x) { return sgn(x); }
};

template <class R>
struct Ring<Cx<R>> {
    using B = Ring<R>;
    static constexpr bool exact = B::exact;
    static constexpr bool field = B::field;
    static Cx<R> zero() { return {B::zero(), B::zero()}; }
    static Cx<R> one() { return {B::one(), B::zero()}; }
    static Cx<R> from_int(long v) { return {B::from_int(v), B::zero()}; }
    static bool is_zero(const Cx<R>& x) { return B::is_zero(x.re) && B::is_zero(x.im); }
    static double magnitude(const Cx<R>& x) { return std::hypot(B::magnitude(x.re), B::magnitude(x.im)); }
    static Cx<R> inv(const Cx<R>& x) { return one() / x; }
    static std::string str(const Cx<R>& x) {
        if (B::is_zero(x.im)) return B::str(x.re);
        std::string im = B::str(x.im) + "i";
        if (B::is_zero(x.re)) return im;
        std::string s = "(" + B::str(x.re);
        if (im[0] != '-') s += "+";
        return s + im + ")";
    }
    static int sign(const Cx<R>&) { throw std::domain_error("complex numbers are unordered"); }
};

template <class T>
inline bool is_zero(const T& x) { return Ring<T>::is_zero(x); }
template <class T>
inline std::string to_str(const T& x) { return Ring<T>::str(x); }

// Parses "p", "p/q", or a decimal "a.b" into an exact rational.
mpq_class parse_rational(const std::string& text);

}  // namespace ga
