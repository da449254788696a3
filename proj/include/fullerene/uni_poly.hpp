#pragma once

#include "fullerene/gauss_rat.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fullerene {

/// Dense univariate polynomial over Q(i); coefficient index = power of z.
///
/// The zero polynomial has no stored coefficients and no degree: degree()
/// returns std::nullopt for it instead of a sentinel value.
class UniPoly {
public:
    UniPoly() = default;
    /// Coefficients lowest power first; trailing zeros are trimmed.
    explicit UniPoly(std::vector<GaussRat> coeffs);
    UniPoly(std::initializer_list<GaussRat> coeffs);

    static UniPoly constant(GaussRat c);
    /// c * z^n
    static UniPoly monomial(std::size_t n, GaussRat c = GaussRat(1));
    /// The polynomial z.
    static UniPoly z() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    std::optional<std::size_t> degree() const;
    /// Degree of a polynomial known to be nonzero; throws std::domain_error otherwise.
    std::size_t deg() const;

    /// Coefficient at z^n (zero beyond the degree).
    GaussRat coeff(std::size_t n) const;
    const std::vector<GaussRat>& coeffs() const { return coeffs_; }
    const GaussRat& leading() const;

    bool is_monic() const { return !is_zero() && leading().is_one(); }
    UniPoly monic() const;

    UniPoly derivative() const;
    GaussRat eval(const GaussRat& x) const;
    UniPoly pow(unsigned e) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const GaussRat& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const GaussRat& c) { return a *= c; }
    friend UniPoly operator*(const GaussRat& c, UniPoly a) { return a *= c; }
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form, highest power first, e.g. "z^2 + 10*z + 5".
    std::string str(const std::string& var = "z") const;
    /// Serialized coefficient strings, lowest power first.
    std::vector<std::string> to_coeff_strings() const;
    static UniPoly from_coeff_strings(const std::vector<std::string>& coeffs);

private:
    void trim();
    std::vector<GaussRat> coeffs_;
};

UniPoly poly_add(const UniPoly& p, const UniPoly& q);
UniPoly poly_mul(const UniPoly& p, const UniPoly& q);
UniPoly poly_scale(const UniPoly& p, const GaussRat& c);
UniPoly poly_derivative(const UniPoly& p);
/// p(q(z)), by Horner's scheme.
UniPoly poly_compose(const UniPoly& p, const UniPoly& q);
/// p(z^n)
UniPoly poly_substitute_power(const UniPoly& p, unsigned n);

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};
/// Euclidean division; throws std::domain_error when the divisor is zero.
DivMod poly_divmod(const UniPoly& p, const UniPoly& d);
/// Quotient of an exact division; throws std::domain_error on nonzero remainder.
UniPoly poly_exact_div(const UniPoly& p, const UniPoly& d);
bool poly_divides(const UniPoly& d, const UniPoly& p);

/// Monic gcd by the Euclidean algorithm; throws std::invalid_argument when both are zero.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);
bool poly_coprime(const UniPoly& p, const UniPoly& q);
/// True iff gcd(p, p') is constant; p must be nonzero.
bool squarefree_check(const UniPoly& p);

/// Yun's squarefree decomposition: p = lc(p) * prod f_e^e with each f_e monic,
/// squarefree, pairwise coprime. Only nonconstant factors are returned, by
/// increasing multiplicity.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p);

}  // namespace fullerene
