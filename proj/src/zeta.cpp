#include "gsp4kit/zeta.hpp"

#include <random>

namespace gsp4kit {

BesselMatrix BesselMatrix::congruent(const Rational& p, const Rational& q, const Rational& r, const Rational& s) const {
    // A = [[p, q], [r, s]]; (tA beta A)_{ij}
    const Rational a00 = p * (a * p + b * r) + r * (b * p + c * r);
    const Rational a01 = p * (a * q + b * s) + r * (b * q + c * s);
    const Rational a11 = q * (a * q + b * s) + s * (b * q + c * s);
    return {a00, a01, a11};
}

mpz_class squarefree_part(const Rational& r) {
    if (sgn(r) == 0) throw PreconditionError("squarefree part of zero");
    mpz_class n = r.get_num() * r.get_den();
    const int sign = sgn(n);
    n = abs(n);
    mpz_class out = 1;
    constexpr unsigned long limit = 100000;
    for (unsigned long p = 2; p <= limit && p * p <= n; ++p) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            n /= p;
            ++e;
        }
        if (e % 2 == 1) out *= p;
    }
    if (n > 1) {
        // Every prime factor left exceeds the trial bound; below limit^3 the rest is p, pq or p^2.
        const mpz_class bound = mpz_class(limit) * limit * limit;
        if (n >= bound) throw PreconditionError("integer too large to factor for the squarefree part");
        if (mpz_perfect_square_p(n.get_mpz_t()) == 0) out *= n;
    }
    return sign < 0 ? mpz_class(-out) : out;
}

BesselClass classify_bessel_matrix(const BesselMatrix& beta) {
    const Rational det = beta.det();
    if (sgn(det) == 0) throw PreconditionError("Bessel matrix is singular");
    BesselClass c;
    c.minus_det = -det;
    c.isotropic = is_rational_square(c.minus_det);
    if (c.isotropic) {
        c.d = 1;
        c.descriptor = "QxQ";
    } else {
        c.d = squarefree_part(c.minus_det);
        c.descriptor = "Q(sqrt(" + c.d.get_str() + "))";
    }
    return c;
}

std::string to_string(ZetaConvention c) { return c == ZetaConvention::Published ? "published" : "rescaled"; }

ZetaConvention parse_convention(const std::string& s) {
    if (s == "published") return ZetaConvention::Published;
    if (s == "rescaled") return ZetaConvention::Rescaled;
    throw PreconditionError("unknown convention '" + s + "'");
}

namespace {

LaurentPoly var(std::size_t v, int p = 1) { return LaurentPoly::variable(v, p); }

LaurentPoly one() { return LaurentPoly::constant(Rational(1)); }

LaurentPoly nu() { return var(XI1) * var(XI2) * var(XI3) * var(XI4); }

}  // namespace

BesselValue bessel_value(int m, const std::vector<XiAction>& table) {
    if (m < 0) throw PreconditionError("bessel_value is supported for m >= 0 only (it vanishes for m < 0)");
    LaurentPoly inner = var(XI1, m + 3) * var(XI2, m + 2) * var(XI3);
    for (std::size_t b : {B1, B2}) {
        inner *= one() - var(XI2) * var(XI4) * var(b) * var(U, -1);
        inner *= one() - var(XI3) * var(XI4) * var(b) * var(U, -1);
    }
    const LaurentPoly brho = antisymmetrize_B(var(XI1, 3) * var(XI2, 2) * var(XI3), table);
    BesselValue w;
    w.num = var(U, -3 * m) * poly_div_exact(antisymmetrize_B(inner, table), brho);
    const LaurentPoly den = one() - var(U, -2);
    try {
        w.num = poly_div_exact(w.num, den);
        w.den = one();
        w.reduced = true;
    } catch (const InexactDivision&) {
        w.den = den;
        w.reduced = false;
    }
    return w;
}

ZetaSeries zeta_series(unsigned order, ZetaConvention conv, const std::vector<XiAction>& table) {
    const LaurentPoly den = one() - var(U, -2);
    TruncatedSeries sum(order);
    for (unsigned m = 0; m <= order; ++m) {
        BesselValue w = bessel_value(static_cast<int>(m), table);
        LaurentPoly num = w.reduced ? w.num * den : w.num;
        const int weight = conv == ZetaConvention::Published ? -static_cast<int>(m) : 3 * static_cast<int>(m);
        num *= var(U, weight);
        sum.set_coeff(m, num);
    }
    TruncatedSeries hecke = TruncatedSeries::one(order);
    for (std::size_t b : {B1, B2}) {
        LaurentPoly param = var(b) * var(U, -1);
        if (conv == ZetaConvention::Rescaled) param *= nu();
        hecke *= series_inverse_one_minus(param, order);
    }
    return {hecke * sum, den};
}

namespace {

// Nonzero rational with numerator in +-1..7 and denominator 1..7.
Rational draw(std::minstd_rand& rng) {
    const long a = static_cast<long>(rng() % 14);
    const long num = a < 7 ? a - 7 : a - 6;
    const long den = static_cast<long>(rng() % 7) + 1;
    return make_rational(num, den);
}

}  // namespace

ZetaReport verify_unramified_identity(unsigned order, int trials, std::uint64_t seed, bool constraint, ZetaConvention conv,
                                      const std::vector<XiAction>& table) {
    if (trials < 1) throw PreconditionError("trials must be at least 1");
    ZetaReport rep;
    rep.order = order;
    rep.trials = trials;
    rep.seed = seed;
    rep.constraint_enforced = constraint;
    rep.convention = conv;

    const ZetaSeries z = zeta_series(order, conv, table);
    const TruncatedSeries l = spin_lfactor_series(order);
    rep.normalization = "(" + z.numerator.coeff(0).to_string() + ") / (" + z.denominator.to_string() + ")";

    std::minstd_rand rng(static_cast<std::minstd_rand::result_type>(seed % 2147483647ULL));
    const int max_attempts = 100 * trials;
    int attempts = 0;
    rep.verdict = true;
    while (static_cast<int>(rep.results.size()) < trials) {
        if (++attempts > max_attempts) throw Error("every random draw was degenerate (seed exhaustion)");
        Assignment pt;
        for (std::size_t v : {XI1, XI2, XI3, XI4, B1, U}) pt[v] = draw(rng);
        if (constraint) {
            pt[B2] = pt[XI1] * pt[XI2] * pt[XI3] * pt[XI4] / pt[B1];
        } else {
            pt[B2] = draw(rng);
        }
        if (sgn(specialize(z.denominator, pt)) == 0) {
            ++rep.skipped_draws;
            continue;
        }
        const Rational w0 = specialize(z.numerator.coeff(0), pt);
        if (sgn(w0) == 0) {
            ++rep.skipped_draws;
            continue;
        }
        TrialResult tr;
        tr.index = static_cast<int>(rep.results.size());
        for (const auto& [v, val] : pt) tr.point.emplace_back(variable_name(v, SATAKE_ARITY), to_string(val));
        tr.pass = true;
        for (unsigned n = 0; n <= order; ++n) {
            CoefficientComparison c;
            c.n = n;
            const Rational lhs = specialize(z.numerator.coeff(n), pt) / w0;
            const Rational rhs = specialize(l.coeff(n), pt);
            c.lhs = to_string(lhs);
            c.rhs = to_string(rhs);
            c.equal = lhs == rhs;
            if (!c.equal) {
                tr.pass = false;
                if (!rep.first_failure) rep.first_failure = std::make_pair(tr.index, n);
            }
            tr.coefficients.push_back(c);
        }
        rep.verdict = rep.verdict && tr.pass;
        rep.results.push_back(std::move(tr));
    }
    return rep;
}

}  // namespace gsp4kit
