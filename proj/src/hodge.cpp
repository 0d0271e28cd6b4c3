#include "gsp4kit/hodge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gsp4kit {

namespace {

void require_dominant(int k, int kp) {
    if (!(k >= kp && kp >= 0)) throw PreconditionError("needs k >= k' >= 0");
}

}  // namespace

bool HodgeDecomp::conjugation_stable() const {
    for (const auto& h : types) {
        if (h.p + h.q != weight) return false;
        int mirrored = 0, same = 0;
        for (const auto& g : types) {
            if (g.p == h.q && g.q == h.p) mirrored += g.multiplicity;
            if (g.p == h.p && g.q == h.q) same += g.multiplicity;
        }
        if (mirrored != same) return false;
    }
    return true;
}

HodgeDecomp hodge_types(int k, int kp, int t, int mH, int mW) {
    require_dominant(k, kp);
    if (mH < 0 || mW < 0) throw PreconditionError("multiplicities must be nonnegative");
    HodgeDecomp h;
    h.weight = 3 - k - kp - 2 * t;
    h.types = {
        {3 - t, -k - kp - t, mH},
        {2 - kp - t, 1 - k - t, mW},
        {1 - k - t, 2 - kp - t, mW},
        {-k - kp - t, 3 - t, mH},
    };
    return h;
}

std::vector<KType> lpacket_ktypes(int k, int kp, int t) {
    require_dominant(k, kp);
    const int c4 = k + kp + 2 * t;
    return {
        {"H", {k + 3, kp + 3, -c4, false}},
        {"W", {k + 3, -kp - 1, -c4, false}},
        {"Wbar", {kp + 1, -k - 3, -c4, false}},
        {"Hbar", {-kp - 3, -k - 3, -c4, false}},
    };
}

RankTable rank_table(int mH, int mW) {
    if (mH < 0 || mW < 0) throw PreconditionError("multiplicities must be nonnegative");
    return {mH, mH + mW, mW};
}

double gamma_c(double s) {
    if (s <= 0 && std::floor(s) == s) throw PreconditionError("Gamma has a pole at " + std::to_string(s));
    return std::pow(2 * std::numbers::pi, -s) * std::tgamma(s);
}

double GammaFactor::evaluate(double s) const {
    double r = 1;
    for (int a : shifts) r *= gamma_c(s + a);
    return r;
}

GammaFactor gamma_factor(int k, int kp) {
    require_dominant(k, kp);
    return {{k + kp + 3, k + 2}};
}

GammaFactor gamma_from_hodge(const HodgeDecomp& h) {
    GammaFactor g;
    for (const auto& ty : h.types) {
        if (ty.p < ty.q) {
            for (int i = 0; i < ty.multiplicity; ++i) g.shifts.push_back(-ty.p);
        }
    }
    std::sort(g.shifts.begin(), g.shifts.end(), std::greater<>());
    return g;
}

std::string AffineMap::to_string() const {
    return gsp4kit::to_string(slope) + "*s + " + gsp4kit::to_string(constant) + (twist.empty() ? "" : " [" + twist + "]");
}

FEReport fe_compatibility(int k, int kp) {
    require_dominant(k, kp);
    FEReport r;
    r.w = -(k + kp + 3);
    r.c = k + kp + 6;
    const Rational half = make_rational(3, 2);
    // L(s - 3/2, pi-check) = eps(s) L(1 - s + 3/2 - c, pi) after the central twist,
    // against the motivic reflection s -> w + 1 - s, both read on the motivic variable.
    r.automorphic = {Rational(-1), Rational(-r.c + 1) + half, "central character |.|^-c"};
    r.motivic = {Rational(-1), Rational(r.w + 1) - half, "motive weight w"};
    r.compatible = r.automorphic == r.motivic;
    r.determinant_exponent = -k - kp - 3;
    r.determinant_matches = r.determinant_exponent == r.w;
    r.expectation = "Z_inf equals L_inf(0) up to integral powers of 2*pi (not asserted)";
    return r;
}

DeltaTag delta_exponent() { return {"gauss_sum_squared", 2, -2}; }

CharacterSplit character_type_split(int k, int kp) {
    require_dominant(k, kp);
    CharacterSplit out;
    out.first = {-k - 2, 1};
    out.second = {-kp - 2, 1};

    // Variables a1, d1, a2, d2 for the absolute values.
    constexpr std::size_t A1 = 0, D1 = 1, A2 = 2, D2 = 3;
    auto mono = [](std::initializer_list<std::pair<std::size_t, int>> powers) {
        Exponent e(4, 0);
        for (auto [v, p] : powers) e[v] += p;
        return LaurentPoly::monomial(e);
    };
    const LaurentPoly lhs = mono({{A1, k + 2}, {A1, -1}, {D1, -1}, {A2, kp + 2}, {A2, -1}, {D2, -1}});
    const LaurentPoly rhs = mono({{A1, k + kp + 2}, {D2, -(k + kp + 2)}, {D1, kp}, {D2, k}});
    // d2 = a1 d1 / a2 on the fiber product.
    auto eliminate = [](const LaurentPoly& p) {
        LaurentPoly r(4);
        for (const auto& [e, c] : p.terms()) {
            Exponent f = e;
            f[A1] += e[D2];
            f[D1] += e[D2];
            f[A2] -= e[D2];
            f[D2] = 0;
            r.add_term(f, c);
        }
        return r;
    };
    const LaurentPoly l = eliminate(lhs);
    const LaurentPoly r = eliminate(rhs);
    out.lhs = l.to_string();
    out.rhs = r.to_string();
    if (!(l == r)) throw Error("character exponent identity fails: " + out.lhs + " vs " + out.rhs);
    return out;
}

}  // namespace gsp4kit
