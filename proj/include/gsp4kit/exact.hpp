#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsp4kit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a precondition of a documented operation is violated.
struct PreconditionError : Error {
    using Error::Error;
};

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
bool is_rational_square(const Rational& r);

struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);
};

GaussRational operator+(GaussRational a, const GaussRational& b);
GaussRational operator-(GaussRational a, const GaussRational& b);
GaussRational operator*(GaussRational a, const GaussRational& b);
GaussRational operator/(GaussRational a, const GaussRational& b);
GaussRational operator-(const GaussRational& a);
bool operator==(const GaussRational& a, const GaussRational& b);
std::string to_string(const GaussRational& z);

// Variable slots of the Satake ring Q[xi1^±..xi4^±, b1^±, b2^±, u^±, X].
enum Var : std::size_t { XI1 = 0, XI2, XI3, XI4, B1, B2, U, X, SATAKE_ARITY };

using Exponent = std::vector<int>;

class LaurentPoly {
public:
    using TermMap = std::map<Exponent, Rational>;

    explicit LaurentPoly(std::size_t arity = SATAKE_ARITY) : arity_(arity) {}

    static LaurentPoly constant(const Rational& c, std::size_t arity = SATAKE_ARITY);
    static LaurentPoly monomial(const Exponent& e, const Rational& c = Rational(1));
    static LaurentPoly variable(std::size_t var, int power = 1, std::size_t arity = SATAKE_ARITY);

    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;

    void add_term(const Exponent& e, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    LaurentPoly pow(unsigned n) const;
    // Multiplies every exponent vector by the monomial e (shift).
    LaurentPoly shifted(const Exponent& e) const;

    int min_degree(std::size_t var) const;
    int max_degree(std::size_t var) const;
    // Terms whose exponent in `var` equals `power`, with that exponent cleared.
    LaurentPoly coefficient(std::size_t var, int power) const;
    bool depends_on(std::size_t var) const;

    // Canonical text form: ascending lexicographic terms joined by " + ".
    std::string to_string() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    std::size_t arity_;
    TermMap terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const Rational& c);
LaurentPoly operator*(const Rational& c, LaurentPoly a);
LaurentPoly operator-(const LaurentPoly& a);

std::string variable_name(std::size_t var, std::size_t arity);

enum class PolyOp { Add, Mul, Neg, Pow };
LaurentPoly poly_arith(PolyOp op, const LaurentPoly& a, const LaurentPoly* b = nullptr, unsigned power = 0);

struct InexactDivision : Error {
    LaurentPoly residual;
    explicit InexactDivision(LaurentPoly r);
};

LaurentPoly poly_div_exact(const LaurentPoly& num, const LaurentPoly& den);

using Assignment = std::map<std::size_t, Rational>;

// Full evaluation; every variable occurring in p must be assigned.
Rational specialize(const LaurentPoly& p, const Assignment& values);
// Partial evaluation; unassigned variables survive.
LaurentPoly specialize_partial(const LaurentPoly& p, const Assignment& values);

class TruncatedSeries {
public:
    TruncatedSeries(unsigned order, std::size_t arity = SATAKE_ARITY, std::size_t series_var = X);

    static TruncatedSeries one(unsigned order, std::size_t arity = SATAKE_ARITY, std::size_t series_var = X);
    // Splits p by powers of the series variable and drops powers above `order`.
    static TruncatedSeries from_poly(const LaurentPoly& p, unsigned order, std::size_t series_var = X);

    unsigned order() const { return order_; }
    std::size_t arity() const { return arity_; }
    std::size_t series_var() const { return series_var_; }
    const LaurentPoly& coeff(unsigned n) const { return coeffs_.at(n); }
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
    void set_coeff(unsigned n, LaurentPoly c);

    LaurentPoly to_poly() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const LaurentPoly& c);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.series_var_ == b.series_var_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check_compatible(const TruncatedSeries& o) const;

    unsigned order_;
    std::size_t arity_;
    std::size_t series_var_;
    std::vector<LaurentPoly> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b);

// Sum_{m<=N} f^m X^m, the expansion of 1/(1 - f X).
TruncatedSeries series_inverse_one_minus(const LaurentPoly& f, unsigned order, std::size_t series_var = X);

}  // namespace gsp4kit
