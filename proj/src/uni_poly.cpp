#include "fullerene/uni_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fullerene {

UniPoly::UniPoly(std::vector<GaussRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<GaussRat> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(GaussRat c) { return UniPoly(std::vector<GaussRat>{std::move(c)}); }

UniPoly UniPoly::monomial(std::size_t n, GaussRat c) {
    std::vector<GaussRat> v(n + 1);
    v[n] = std::move(c);
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const {
    if (is_zero()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::size_t UniPoly::deg() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

GaussRat UniPoly::coeff(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : GaussRat{};
}

const GaussRat& UniPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<GaussRat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * GaussRat(static_cast<long>(i));
    }
    return UniPoly(std::move(d));
}

GaussRat UniPoly::eval(const GaussRat& x) const {
    GaussRat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly result = constant(GaussRat(1));
    UniPoly base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

UniPoly UniPoly::operator-() const { return *this * GaussRat(-1); }

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const GaussRat& c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string cs;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            cs = negative ? Rational(-c.re()).get_str() : c.re().get_str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool unit = cs == "1";
        if (k == 0) {
            os << cs;
            continue;
        }
        if (!unit) os << cs << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::vector<std::string> UniPoly::to_coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_coeff_string());
    return out;
}

UniPoly UniPoly::from_coeff_strings(const std::vector<std::string>& coeffs) {
    std::vector<GaussRat> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.push_back(GaussRat::parse(s));
    return UniPoly(std::move(v));
}

UniPoly poly_add(const UniPoly& p, const UniPoly& q) { return p + q; }
UniPoly poly_mul(const UniPoly& p, const UniPoly& q) { return p * q; }
UniPoly poly_scale(const UniPoly& p, const GaussRat& c) { return p * c; }
UniPoly poly_derivative(const UniPoly& p) { return p.derivative(); }

UniPoly poly_compose(const UniPoly& p, const UniPoly& q) {
    UniPoly acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * q;
        acc += UniPoly::constant(*it);
    }
    return acc;
}

UniPoly poly_substitute_power(const UniPoly& p, unsigned n) {
    if (n == 0) throw std::invalid_argument("substitute_power: n must be positive");
    if (p.is_zero()) return {};
    std::vector<GaussRat> out(p.deg() * n + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i * n] = p.coeffs()[i];
    return UniPoly(std::move(out));
}

DivMod poly_divmod(const UniPoly& p, const UniPoly& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (p.is_zero() || p.deg() < d.deg()) return {UniPoly{}, p};
    std::vector<GaussRat> rem = p.coeffs();
    const std::size_t dd = d.deg();
    const GaussRat inv_lead = d.leading().inverse();
    std::vector<GaussRat> quot(p.deg() - dd + 1);
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (rem[k].is_zero()) continue;
        GaussRat factor = rem[k] * inv_lead;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * d.coeffs()[j];
        quot[k - dd] = std::move(factor);
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly poly_exact_div(const UniPoly& p, const UniPoly& d) {
    auto [q, r] = poly_divmod(p, d);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

bool poly_divides(const UniPoly& d, const UniPoly& p) { return poly_divmod(p, d).remainder.is_zero(); }

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    UniPoly a = p.monic();
    UniPoly b = q.monic();
    while (!b.is_zero()) {
        UniPoly r = poly_divmod(a, b).remainder.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_coprime(const UniPoly& p, const UniPoly& q) { return poly_gcd(p, q).is_constant(); }

bool squarefree_check(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_check of the zero polynomial");
    return poly_gcd(p, p.derivative()).is_constant();
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<UniPoly, unsigned>> out;
    if (p.is_constant()) return out;
    UniPoly f = p.monic();
    UniPoly fp = f.derivative();
    UniPoly a = poly_gcd(f, fp);
    UniPoly b = poly_exact_div(f, a);
    UniPoly c = poly_exact_div(fp, a);
    UniPoly d = c - b.derivative();
    unsigned mult = 1;
    while (!b.is_constant()) {
        UniPoly g = poly_gcd(b, d);
        if (!g.is_constant()) out.emplace_back(g, mult);
        b = poly_exact_div(b, g);
        c = poly_exact_div(d, g);
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

}  // namespace fullerene
