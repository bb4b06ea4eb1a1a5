#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

#include "nilcohom/errors.hpp"

namespace nilcohom {

// Arbitrary-precision integers and rationals. Elimination over Q(i) blows up
// coefficients quickly; fixed-width arithmetic would silently corrupt ranks.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Q(i): re + im*i with exact rational components. Immutable value
/// type; components are kept reduced (gcd 1, positive denominator) by the
/// underlying rational, so equality is structural.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int v) : re_(v) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im)
        : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |z|^2 = re^2 + im^2, a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inv() const {
        if (is_zero()) throw DivisionByZero();
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        return *this *= o.inv();
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

private:
    Rational re_;
    Rational im_;
};

/// Parses the scalar wire grammar `R | R i | R + R i | R - R i` with
/// R = `[-]p[/q]`, q > 0. This is the exact format used in input files and
/// reports; anything else raises ParseError naming the offending token.
GaussianRational parse_scalar(std::string_view text);

/// Renders a scalar so that parse_scalar(format_scalar(z)) == z.
std::string format_scalar(const GaussianRational& z);

std::string format_rational(const Rational& q);

/// Parses one R token of the grammar ( `[-]p[/q]`, q > 0 ).
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace nilcohom
