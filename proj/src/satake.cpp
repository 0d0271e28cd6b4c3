#include "gsp4kit/satake.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gsp4kit {

std::vector<XiAction> xi_action_table() {
    std::vector<XiAction> t;
    for (const auto& w : weyl_enumerate()) t.push_back({w.xi_perm, w.sign()});
    return t;
}

LaurentPoly antisymmetrize_B(const LaurentPoly& p, const std::vector<XiAction>& table) {
    LaurentPoly out(p.arity());
    for (const auto& [e, c] : p.terms()) {
        for (const auto& a : table) out.add_term(permute_xi(a.perm, e), a.sign > 0 ? c : Rational(-c));
    }
    return out;
}

LaurentPoly weyl_character(const GSpWeight& lambda, const std::vector<XiAction>& table) {
    if (!lambda.dominant()) throw PreconditionError("weyl_character needs a dominant weight");
    const GSpWeight r = rho();
    const LaurentPoly num = antisymmetrize_B(LaurentPoly::monomial(mono_exponent(lambda + r)), table);
    const LaurentPoly den = antisymmetrize_B(LaurentPoly::monomial(mono_exponent(r)), table);
    return poly_div_exact(num, den);
}

std::array<LaurentPoly, 4> spin_diagonal() {
    auto m = [](std::size_t a, std::size_t b) { return LaurentPoly::variable(a) * LaurentPoly::variable(b); };
    return {m(XI1, XI2), m(XI1, XI3), m(XI2, XI4), m(XI3, XI4)};
}

TruncatedSeries spin_lfactor_series(unsigned order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (const auto& d : spin_diagonal()) s *= series_inverse_one_minus(d, order);
    return s;
}

TruncatedSeries symmetric_power_series(unsigned order) {
    const auto d = spin_diagonal();
    TruncatedSeries s(order);
    for (unsigned n = 0; n <= order; ++n) {
        LaurentPoly h(SATAKE_ARITY);
        // Complete homogeneous polynomial: all a+b+c+e = n.
        for (unsigned a = 0; a <= n; ++a) {
            for (unsigned b = 0; a + b <= n; ++b) {
                for (unsigned c = 0; a + b + c <= n; ++c) {
                    const unsigned e = n - a - b - c;
                    h += d[0].pow(a) * d[1].pow(b) * d[2].pow(c) * d[3].pow(e);
                }
            }
        }
        s.set_coeff(n, h);
    }
    return s;
}

TruncatedSeries hecke_lfactor_series(int i, int shift_half, unsigned order) {
    if (i != 1 && i != 2) throw PreconditionError("Hecke index must be 1 or 2");
    const LaurentPoly param = LaurentPoly::variable(i == 1 ? B1 : B2) * LaurentPoly::variable(U, -shift_half);
    return series_inverse_one_minus(param, order);
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
    for (long p = 2; p <= bound; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (long q = p * p; q <= bound; q += p) composite[static_cast<std::size_t>(q)] = true;
    }
    return out;
}

double partial_euler_product(std::vector<EulerFactor> factors, double s) {
    std::sort(factors.begin(), factors.end(), [](const EulerFactor& a, const EulerFactor& b) { return a.prime < b.prime; });
    std::set<long> seen;
    double sum = 0;
    double carry = 0;
    int sign = 1;
    auto accumulate = [&](double x) {
        // Kahan summation of log|factor|.
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    };
    for (const auto& f : factors) {
        if (f.prime < 2) throw PreconditionError("invalid prime " + std::to_string(f.prime));
        if (!seen.insert(f.prime).second) throw PreconditionError("duplicate prime " + std::to_string(f.prime));
        for (double x : f.xi) {
            if (x == 0) throw PreconditionError("Satake parameters must be nonzero");
        }
        const double ps = std::pow(static_cast<double>(f.prime), -s);
        const double diag[4] = {f.xi[0] * f.xi[1], f.xi[0] * f.xi[2], f.xi[1] * f.xi[3], f.xi[2] * f.xi[3]};
        for (double d : diag) {
            const double one_minus = 1 - d * ps;
            if (one_minus == 0) throw PreconditionError("pole of the local factor at p = " + std::to_string(f.prime));
            if (one_minus < 0) sign = -sign;
            accumulate(-std::log(std::fabs(one_minus)));
        }
    }
    return sign * std::exp(sum);
}

}  // namespace gsp4kit
