#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace fullerene {

using Rational = mpq_class;

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
///
/// Both parts are kept canonical (lowest terms, positive denominator), so
/// operator== is plain structural equality.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussRat(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
    GaussRat(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    GaussRat(Rational re, Rational im);

    static GaussRat i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return {re_, -im_}; }
    /// re^2 + im^2
    Rational norm() const { return re_ * re_ + im_ * im_; }
    /// Multiplicative inverse; throws std::domain_error on zero.
    GaussRat inverse() const;

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    GaussRat operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Coefficient string: "a/b" for real values, "a/b,c/d" otherwise.
    std::string to_coeff_string() const;
    /// Inverse of to_coeff_string; also accepts integers without "/1".
    static GaussRat parse(std::string_view text);

    /// Human-readable form, e.g. "2+11i", "-1/1728", "-125i".
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRat& v);

/// Canonical "a/b" rendering of a rational, always with a denominator.
std::string rational_to_string(const Rational& q);
/// Parses "a/b" or "a"; throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

}  // namespace fullerene
