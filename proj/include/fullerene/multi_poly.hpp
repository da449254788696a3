#pragma once

#include "fullerene/gauss_rat.hpp"
#include "fullerene/uni_poly.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fullerene {

/// Ordered, immutable list of indeterminate names shared by every polynomial
/// of one system.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    /// Throws std::out_of_range for an unknown name.
    std::size_t index(std::string_view name) const;
    std::optional<std::size_t> find(std::string_view name) const;

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_var_set(std::vector<std::string> names);

using Exponents = std::vector<unsigned>;

/// Sparse polynomial over Q in the indeterminates of one VarSet.
///
/// Terms are keyed by exponent vector; lexicographic order on the vectors is
/// the monomial order used for division (variable 0 most significant). Zero
/// coefficients are never stored. A default-constructed MultiPoly is the zero
/// polynomial with no variable set yet; it adopts the set of whatever it is
/// combined with.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarSetPtr vars, const Rational& c);
    static MultiPoly variable(VarSetPtr vars, std::size_t index);
    static MultiPoly variable(const VarSetPtr& vars, std::string_view name);

    const VarSetPtr& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial; throws std::domain_error otherwise.
    Rational constant_value() const;

    unsigned degree_in(std::size_t var) const;
    unsigned total_degree() const;
    bool contains(std::size_t var) const { return degree_in(var) > 0; }
    /// Indices of variables that actually occur.
    std::vector<std::size_t> support() const;
    /// Coefficient of var^k, as a polynomial free of var.
    MultiPoly coefficient_in(std::size_t var, unsigned k) const;

    /// Replaces var by value and renormalizes.
    MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
    /// Evaluates with one rational value per variable of the set.
    Rational evaluate(std::span<const Rational> values) const;

    MultiPoly pow(unsigned e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly& operator/=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(MultiPoly a, long c) { return a *= Rational(c); }
    friend MultiPoly operator*(long c, MultiPoly a) { return a *= Rational(c); }
    friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }
    friend MultiPoly operator/(MultiPoly a, long c) { return a /= Rational(c); }
    friend MultiPoly operator+(MultiPoly a, long c);
    friend MultiPoly operator-(MultiPoly a, long c) { return std::move(a) + (-c); }
    friend MultiPoly operator+(long c, MultiPoly a) { return std::move(a) + c; }
    friend MultiPoly operator-(long c, MultiPoly a) { return -std::move(a) + c; }
    MultiPoly operator-() const;

    /// Structural equality; variable sets must agree unless one side is zero.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// e.g. "-15/44*a10^2", graded by total degree, highest first.
    std::string str() const;

private:
    friend std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d);
    void add_term(const Exponents& e, const Rational& c);
    void adopt(const MultiPoly& o);
    Exponents zero_exponents() const;

    VarSetPtr vars_;
    std::map<Exponents, Rational> terms_;
};

/// Exact quotient p / d, or nullopt when d does not divide p.
/// Throws std::domain_error when d is zero.
std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d);

/// Univariate polynomial in z whose coefficients are MultiPolys.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(VarSetPtr vars, std::vector<MultiPoly> coeffs);
    /// Lifts an exact rational polynomial; throws if p has Gaussian parts.
    static ParamPoly from_unipoly(VarSetPtr vars, const UniPoly& p);

    const VarSetPtr& vars() const { return vars_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    /// Coefficient at z^k (zero beyond the degree).
    MultiPoly coeff(std::size_t k) const;
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

    ParamPoly derivative() const;
    ParamPoly substitute(std::size_t var, const MultiPoly& value) const;
    /// Converts once every coefficient is constant; throws std::domain_error otherwise.
    UniPoly to_unipoly() const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& c);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
    friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str(const std::string& var = "z") const;

private:
    void trim();
    VarSetPtr vars_;
    std::vector<MultiPoly> coeffs_;
};

}  // namespace fullerene
