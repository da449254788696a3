#include "fullerene/multi_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fullerene {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
        }
    }
}

std::size_t VarSet::index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw std::out_of_range("unknown variable " + std::string(name));
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

VarSetPtr make_var_set(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

namespace {

void require_same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    if (!a || !b || a == b) return;
    if (!(*a == *b)) throw std::invalid_argument("MultiPoly: mismatched variable sets");
}

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); }

}  // namespace

MultiPoly MultiPoly::constant(VarSetPtr vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(p.zero_exponents(), c);
    return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::size_t index) {
    MultiPoly p(std::move(vars));
    if (!p.vars_ || index >= p.vars_->size()) throw std::out_of_range("MultiPoly::variable index");
    Exponents e = p.zero_exponents();
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::variable(const VarSetPtr& vars, std::string_view name) {
    return variable(vars, vars->index(name));
}

Exponents MultiPoly::zero_exponents() const { return Exponents(vars_ ? vars_->size() : 0, 0U); }

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void MultiPoly::adopt(const MultiPoly& o) {
    require_same_vars(vars_, o.vars_);
    if (vars_ || !o.vars_) return;
    // A set-less polynomial has at most a constant term keyed by the empty vector.
    vars_ = o.vars_;
    if (!terms_.empty()) {
        Rational c = terms_.begin()->second;
        terms_.clear();
        add_term(zero_exponents(), c);
    }
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && degree_of(terms_.begin()->first) == 0;
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("MultiPoly is not constant: " + str());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        if (var < e.size()) d = std::max(d, e[var]);
    }
    return d;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
}

std::vector<std::size_t> MultiPoly::support() const {
    std::vector<std::size_t> out;
    if (!vars_) return out;
    for (std::size_t v = 0; v < vars_->size(); ++v) {
        if (contains(v)) out.push_back(v);
    }
    return out;
}

MultiPoly MultiPoly::coefficient_in(std::size_t var, unsigned k) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (var < e.size() && e[var] == k) {
            Exponents f = e;
            f[var] = 0;
            out.add_term(f, c);
        } else if (var >= e.size() && k == 0) {
            out.add_term(e, c);
        }
    }
    return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
    require_same_vars(vars_, value.vars_);
    const unsigned d = degree_in(var);
    if (d == 0) return *this;
    MultiPoly result = coefficient_in(var, 0);
    MultiPoly power = value;
    for (unsigned k = 1; k <= d; ++k) {
        MultiPoly ck = coefficient_in(var, k);
        if (!ck.is_zero()) result += ck * power;
        if (k < d) power *= value;
    }
    return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> values) const {
    if (vars_ && values.size() != vars_->size()) {
        throw std::invalid_argument("MultiPoly::evaluate: wrong number of values");
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t v = 0; v < e.size(); ++v) {
            for (unsigned k = 0; k < e[v]; ++k) t *= values[v];
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e.empty() ? zero_exponents() : e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e.empty() ? zero_exponents() : e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(a.vars_ ? a.vars_ : b.vars_);
    require_same_vars(a.vars_, b.vars_);
    if (a.is_zero() || b.is_zero()) return out;
    const std::size_t n = out.vars_ ? out.vars_->size() : 0;
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < n; ++v) {
                e[v] = (v < ea.size() ? ea[v] : 0U) + (v < eb.size() ? eb[v] : 0U);
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) {
    if (sgn(c) == 0) throw std::domain_error("MultiPoly: division by zero");
    for (auto& [e, x] : terms_) x /= c;
    return *this;
}

MultiPoly operator+(MultiPoly a, long c) {
    a.add_term(a.zero_exponents(), Rational(c));
    return a;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, x] : out.terms_) x = -x;
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    require_same_vars(a.vars_, b.vars_);
    if (a.vars_ && b.vars_) return a.terms_ == b.terms_;
    // One side has no variable set, so it is a nonzero constant.
    return a.is_constant() && b.is_constant() && a.constant_value() == b.constant_value();
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exponents, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
        unsigned dx = degree_of(x->first);
        unsigned dy = degree_of(y->first);
        if (dx != dy) return dx > dy;
        return x->first > y->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        const bool negative = sgn(c) < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            std::string f = vars_->name(v);
            if (e[v] > 1) f += "^" + std::to_string(e[v]);
            factors.push_back(std::move(f));
        }
        if (factors.empty() || mag != 1) factors.insert(factors.begin(), mag.get_str());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i != 0) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw std::domain_error("exact_divide by the zero polynomial");
    MultiPoly quotient(p.vars() ? p.vars() : d.vars());
    MultiPoly rem = p.vars() ? p : MultiPoly(quotient.vars()) + p;
    const auto& [lead_e, lead_c] = *d.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().rbegin();
        Exponents q(re.size());
        for (std::size_t v = 0; v < re.size(); ++v) {
            unsigned dv = v < lead_e.size() ? lead_e[v] : 0U;
            if (re[v] < dv) return std::nullopt;
            q[v] = re[v] - dv;
        }
        for (std::size_t v = re.size(); v < lead_e.size(); ++v) {
            if (lead_e[v] != 0) return std::nullopt;
        }
        MultiPoly t(quotient.vars());
        t.add_term(q, rc / lead_c);
        quotient += t;
        rem -= t * d;
    }
    return quotient;
}

// ---------------------------------------------------------------------------

ParamPoly::ParamPoly(VarSetPtr vars, std::vector<MultiPoly> coeffs)
    : vars_(std::move(vars)), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) {
        if (!c.vars()) c = MultiPoly(vars_) + c;
    }
    trim();
}

ParamPoly ParamPoly::from_unipoly(VarSetPtr vars, const UniPoly& p) {
    std::vector<MultiPoly> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        if (!x.is_real()) throw std::invalid_argument("ParamPoly: Gaussian coefficient " + x.str());
        c.push_back(MultiPoly::constant(vars, x.re()));
    }
    return {std::move(vars), std::move(c)};
}

void ParamPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> ParamPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

MultiPoly ParamPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : MultiPoly(vars_);
}

ParamPoly ParamPoly::derivative() const {
    std::vector<MultiPoly> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    }
    return {vars_, std::move(d)};
}

ParamPoly ParamPoly::substitute(std::size_t var, const MultiPoly& value) const {
    std::vector<MultiPoly> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x.substitute(var, value));
    return {vars_, std::move(c)};
}

UniPoly ParamPoly::to_unipoly() const {
    std::vector<GaussRat> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.emplace_back(x.constant_value());
    return UniPoly(std::move(c));
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (!vars_) vars_ = o.vars_;
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), MultiPoly(vars_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    if (!vars_) vars_ = o.vars_;
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), MultiPoly(vars_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    VarSetPtr vars = a.vars_ ? a.vars_ : b.vars_;
    if (a.is_zero() || b.is_zero()) return ParamPoly(vars, {});
    std::vector<MultiPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1, MultiPoly(vars));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return {vars, std::move(out)};
}

std::string ParamPoly::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k].str() << ")";
        if (k >= 1) os << "*" << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

}  // namespace fullerene
