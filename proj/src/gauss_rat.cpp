#include "fullerene/gauss_rat.hpp"

#include <ostream>
#include <stdexcept>

namespace fullerene {

GaussRat::GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussRat GaussRat::inverse() const {
    if (is_zero()) throw std::domain_error("GaussRat: division by zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        auto b = t.find_first_not_of(" \t");
        auto e = t.find_last_not_of(" \t");
        t = b == std::string::npos ? std::string{} : t.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s.front() == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

std::string GaussRat::to_coeff_string() const {
    if (is_real()) return rational_to_string(re_);
    return rational_to_string(re_) + "," + rational_to_string(im_);
}

GaussRat GaussRat::parse(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos) return GaussRat(parse_rational(text));
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::string GaussRat::str() const {
    if (is_real()) return re_.get_str();
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = im_.get_str() + "i";
    }
    if (sgn(re_) == 0) return imag;
    if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
    return re_.get_str() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& v) { return os << v.str(); }

}  // namespace fullerene
