#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsp4kit/exact.hpp"
#include "gsp4kit/satake.hpp"

namespace gsp4kit {

// [[a, b], [b, c]]
struct BesselMatrix {
    Rational a;
    Rational b;
    Rational c;

    Rational det() const { return a * c - b * b; }
    // tA * beta * A for A = [[p, q], [r, s]].
    BesselMatrix congruent(const Rational& p, const Rational& q, const Rational& r, const Rational& s) const;
};

struct BesselClass {
    bool isotropic = false;
    std::string descriptor;  // "QxQ" or "Q(sqrt(d))"
    Rational minus_det;
    mpz_class d;  // squarefree part of -det, sign kept; 1 when split
};

BesselClass classify_bessel_matrix(const BesselMatrix& beta);
// Squarefree part of the integer num*den of r, sign kept.
mpz_class squarefree_part(const Rational& r);

enum class ZetaConvention { Published, Rescaled };
std::string to_string(ZetaConvention c);
ZetaConvention parse_convention(const std::string& s);

// W(m) = num / den with den = 1 - u^-2 unless the division went through.
struct BesselValue {
    LaurentPoly num;
    LaurentPoly den;
    bool reduced = false;
};

BesselValue bessel_value(int m, const std::vector<XiAction>& table = xi_action_table());

// Z(X) * den as a series, den being the common denominator of the Bessel values.
struct ZetaSeries {
    TruncatedSeries numerator;
    LaurentPoly denominator;
};

ZetaSeries zeta_series(unsigned order, ZetaConvention conv = ZetaConvention::Published,
                       const std::vector<XiAction>& table = xi_action_table());

struct CoefficientComparison {
    unsigned n = 0;
    std::string lhs;  // Z_n / W(0) at the drawn point
    std::string rhs;  // L_n at the drawn point
    bool equal = false;
};

struct TrialResult {
    int index = 0;
    std::vector<std::pair<std::string, std::string>> point;  // variable name, value
    std::vector<CoefficientComparison> coefficients;
    bool pass = false;
};

struct ZetaReport {
    unsigned order = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    bool constraint_enforced = true;
    ZetaConvention convention = ZetaConvention::Published;
    std::string normalization;  // W(0) as num / den
    int skipped_draws = 0;
    std::vector<TrialResult> results;
    std::optional<std::pair<int, unsigned>> first_failure;  // (trial, n)
    bool verdict = false;
};

ZetaReport verify_unramified_identity(unsigned order, int trials, std::uint64_t seed, bool constraint = true,
                                      ZetaConvention conv = ZetaConvention::Published,
                                      const std::vector<XiAction>& table = xi_action_table());

}  // namespace gsp4kit
