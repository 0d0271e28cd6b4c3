#include "gsp4kit/exact.hpp"

#include <algorithm>
#include <sstream>

namespace gsp4kit {

Rational make_rational(long num, long den) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw PreconditionError("malformed rational: " + text);
    if (sgn(r.get_den()) == 0) throw PreconditionError("zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_rational_square(const Rational& r) {
    if (sgn(r) < 0) return false;
    if (sgn(r) == 0) return true;
    return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 && mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    Rational n = o.norm();
    if (sgn(n) == 0) throw PreconditionError("division by zero in Q(i)");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }

std::string to_string(const GaussRational& z) {
    if (sgn(z.im) == 0) return to_string(z.re);
    std::string s;
    if (sgn(z.re) != 0) s = to_string(z.re) + (sgn(z.im) > 0 ? "+" : "");
    return s + to_string(z.im) + "i";
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(const Rational& c, std::size_t arity) {
    LaurentPoly p(arity);
    p.add_term(Exponent(arity, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rational& c) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t var, int power, std::size_t arity) {
    if (var >= arity) throw PreconditionError("variable index out of range");
    Exponent e(arity, 0);
    e[var] = power;
    return monomial(e);
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentPoly::constant_term() const {
    auto it = terms_.find(Exponent(arity_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != arity_) throw PreconditionError("arity mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.arity_ != arity_) throw PreconditionError("arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.arity_ != arity_) throw PreconditionError("arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity() != b.arity()) throw PreconditionError("arity mismatch");
    LaurentPoly r(a.arity());
    Exponent e(a.arity());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
LaurentPoly operator-(const LaurentPoly& a) { return a * Rational(-1); }

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result = constant(Rational(1), arity_);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
    if (s.size() != arity_) throw PreconditionError("arity mismatch");
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < arity_; ++i) f[i] += s[i];
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

int LaurentPoly::min_degree(std::size_t var) const {
    if (terms_.empty()) throw PreconditionError("degree of zero polynomial");
    int m = terms_.begin()->first.at(var);
    for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
    return m;
}

int LaurentPoly::max_degree(std::size_t var) const {
    if (terms_.empty()) throw PreconditionError("degree of zero polynomial");
    int m = terms_.begin()->first.at(var);
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
}

LaurentPoly LaurentPoly::coefficient(std::size_t var, int power) const {
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) != power) continue;
        Exponent f = e;
        f[var] = 0;
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

bool LaurentPoly::depends_on(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first.at(var) != 0; });
}

std::string variable_name(std::size_t var, std::size_t arity) {
    static const char* const satake[] = {"xi1", "xi2", "xi3", "xi4", "b1", "b2", "u", "X"};
    if (arity == SATAKE_ARITY && var < SATAKE_ARITY) return satake[var];
    return "x" + std::to_string(var + 1);
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.get_str();
        for (std::size_t i = 0; i < arity_; ++i) {
            if (e[i] != 0) out << " * " << variable_name(i, arity_) << '^' << e[i];
        }
    }
    return out.str();
}

LaurentPoly poly_arith(PolyOp op, const LaurentPoly& a, const LaurentPoly* b, unsigned power) {
    switch (op) {
        case PolyOp::Add:
            if (b == nullptr) throw PreconditionError("add needs two operands");
            return a + *b;
        case PolyOp::Mul:
            if (b == nullptr) throw PreconditionError("mul needs two operands");
            return a * *b;
        case PolyOp::Neg:
            return -a;
        case PolyOp::Pow:
            return a.pow(power);
    }
    throw PreconditionError("unknown polynomial operation");
}

InexactDivision::InexactDivision(LaurentPoly r)
    : Error("inexact division, residual " + r.to_string()), residual(std::move(r)) {}

LaurentPoly poly_div_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (num.arity() != den.arity()) throw PreconditionError("arity mismatch");
    if (den.is_zero()) throw PreconditionError("division by zero polynomial");
    const std::size_t n = num.arity();
    LaurentPoly quotient(n);
    if (num.is_zero()) return quotient;

    // Per-variable degree box that every quotient exponent must lie in.
    Exponent lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = num.min_degree(i) - den.min_degree(i);
        hi[i] = num.max_degree(i) - den.max_degree(i);
        if (lo[i] > hi[i]) throw InexactDivision(num);
    }

    const auto& [den_lead_e, den_lead_c] = *den.terms().rbegin();
    LaurentPoly rem = num;
    Exponent q(n);
    while (!rem.is_zero()) {
        const auto& [lead_e, lead_c] = *rem.terms().rbegin();
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = lead_e[i] - den_lead_e[i];
            if (q[i] < lo[i] || q[i] > hi[i]) throw InexactDivision(rem);
        }
        Rational c = lead_c / den_lead_c;
        quotient.add_term(q, c);
        rem -= den.shifted(q) * c;
    }
    return quotient;
}

namespace {

Rational rational_power(const Rational& base, int e) {
    if (e == 0) return Rational(1);
    if (sgn(base) == 0) {
        if (e < 0) throw PreconditionError("negative power of a variable specialized to zero");
        return Rational(0);
    }
    Rational r;
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

}  // namespace

Rational specialize(const LaurentPoly& p, const Assignment& values) {
    Rational total(0);
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = values.find(i);
            if (it == values.end()) {
                throw PreconditionError("variable " + variable_name(i, p.arity()) + " is not assigned");
            }
            term *= rational_power(it->second, e[i]);
        }
        total += term;
    }
    return total;
}

LaurentPoly specialize_partial(const LaurentPoly& p, const Assignment& values) {
    LaurentPoly r(p.arity());
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        Exponent f = e;
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto it = values.find(i);
            if (e[i] == 0 || it == values.end()) continue;
            term *= rational_power(it->second, e[i]);
            f[i] = 0;
        }
        r.add_term(f, term);
    }
    return r;
}

// ------------------------------------------------------------ TruncatedSeries

TruncatedSeries::TruncatedSeries(unsigned order, std::size_t arity, std::size_t series_var)
    : order_(order), arity_(arity), series_var_(series_var), coeffs_(order + 1, LaurentPoly(arity)) {
    if (series_var >= arity) throw PreconditionError("series variable out of range");
}

TruncatedSeries TruncatedSeries::one(unsigned order, std::size_t arity, std::size_t series_var) {
    TruncatedSeries s(order, arity, series_var);
    s.coeffs_[0] = LaurentPoly::constant(Rational(1), arity);
    return s;
}

TruncatedSeries TruncatedSeries::from_poly(const LaurentPoly& p, unsigned order, std::size_t series_var) {
    TruncatedSeries s(order, p.arity(), series_var);
    for (const auto& [e, c] : p.terms()) {
        int d = e.at(series_var);
        if (d < 0) throw PreconditionError("negative power of the series variable");
        if (d > static_cast<int>(order)) continue;
        Exponent f = e;
        f[series_var] = 0;
        s.coeffs_[static_cast<unsigned>(d)].add_term(f, c);
    }
    return s;
}

void TruncatedSeries::set_coeff(unsigned n, LaurentPoly c) {
    if (c.arity() != arity_) throw PreconditionError("arity mismatch");
    if (c.depends_on(series_var_)) throw PreconditionError("series variable inside a coefficient");
    coeffs_.at(n) = std::move(c);
}

LaurentPoly TruncatedSeries::to_poly() const {
    LaurentPoly r(arity_);
    for (unsigned n = 0; n <= order_; ++n) {
        r += coeffs_[n] * LaurentPoly::variable(series_var_, static_cast<int>(n), arity_);
    }
    return r;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (o.order_ != order_ || o.arity_ != arity_ || o.series_var_ != series_var_) {
        throw PreconditionError("incompatible truncated series");
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_compatible(o);
    for (unsigned n = 0; n <= order_; ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    check_compatible(o);
    std::vector<LaurentPoly> out(order_ + 1, LaurentPoly(arity_));
    for (unsigned i = 0; i <= order_; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= order_; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const LaurentPoly& c) {
    if (c.depends_on(series_var_)) throw PreconditionError("series variable inside a scalar");
    for (auto& k : coeffs_) k *= c;
    return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }

TruncatedSeries series_inverse_one_minus(const LaurentPoly& f, unsigned order, std::size_t series_var) {
    if (f.depends_on(series_var)) throw PreconditionError("f must be free of the series variable");
    TruncatedSeries s = TruncatedSeries::one(order, f.arity(), series_var);
    LaurentPoly power = LaurentPoly::constant(Rational(1), f.arity());
    for (unsigned m = 1; m <= order; ++m) {
        power *= f;
        s.set_coeff(m, power);
    }
    return s;
}

}  // namespace gsp4kit
