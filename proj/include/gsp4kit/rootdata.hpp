#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "gsp4kit/exact.hpp"

namespace gsp4kit {

// lambda(k, k', t): diag(a1, a2, a1^-1 nu, a2^-1 nu) -> a1^k a2^k' nu^t.
struct GSpWeight {
    int k = 0;
    int kp = 0;
    int t = 0;

    bool dominant() const { return k >= kp && kp >= 0; }
    bool regular() const { return k > kp && kp > 0; }
    std::string to_string() const;

    friend GSpWeight operator+(GSpWeight a, GSpWeight b) { return {a.k + b.k, a.kp + b.kp, a.t + b.t}; }
    friend GSpWeight operator-(GSpWeight a, GSpWeight b) { return {a.k - b.k, a.kp - b.kp, a.t - b.t}; }
    friend auto operator<=>(const GSpWeight&, const GSpWeight&) = default;
};

// lambda(k, t): diag(a, a^-1 nu) -> a^k nu^t.
struct GL2Weight {
    int k = 0;
    int t = 0;

    bool dominant() const { return k >= 0; }
    std::string to_string() const;
    friend auto operator<=>(const GL2Weight&, const GL2Weight&) = default;
};

// lambda'(n, n', c) on the compact torus; n' is unused for the rank-one case.
struct CompactWeight {
    int n = 0;
    int np = 0;
    int c = 0;
    bool rank_one = false;

    bool parity_ok() const;
    std::string to_string() const;
    friend auto operator<=>(const CompactWeight&, const CompactWeight&) = default;
};

using IntMatrix2 = std::array<std::array<int, 2>, 2>;
using IntMatrix3 = std::array<std::array<int, 3>, 3>;
using XiPerm = std::array<int, 4>;  // 0-based images of the xi indices

struct WeylElement {
    // Action on (k, k') with t fixed.
    IntMatrix2 matrix{};
    // Action on (k, k', t) as a character of the full torus.
    IntMatrix3 full{};
    int length = 0;
    XiPerm xi_perm{0, 1, 2, 3};
    // Reduced word over {1, 2}; applied right to left.
    std::vector<int> word;

    std::string word_string() const;
    GSpWeight apply(const GSpWeight& w) const;       // t kept
    GSpWeight apply_full(const GSpWeight& w) const;  // t shifted by the true action
    int sign() const { return length % 2 == 0 ? 1 : -1; }
};

WeylElement weyl_identity();
WeylElement weyl_generator(int which);  // 1: k <-> k', 2: k' -> -k'
WeylElement compose(const WeylElement& a, const WeylElement& b);  // a after b
WeylElement inverse(const WeylElement& w);

enum class ParabolicKind { SiegelQ0, KlingenQ1, Borel4, Borel2, ProductBorel };

std::string to_string(ParabolicKind p);
int nilradical_dimension(ParabolicKind p);

std::vector<GSpWeight> positive_roots();
GSpWeight rho();
bool is_positive_root(int k, int kp);
std::vector<WeylElement> weyl_enumerate();

GSpWeight dot_action(const WeylElement& w, const GSpWeight& lambda);

// Roots of the nilradical, in the (k, k') plane.
std::vector<GSpWeight> nilradical_roots(ParabolicKind p);

// Minimal length representatives for W_L \ W, from Delta+(w) contained in the nilradical roots.
// For Borel2 the elements belong to the GL2 Weyl group and `matrix` acts on (k, t).
std::vector<WeylElement> kostant_set(ParabolicKind p);

// Exponents of (xi1..xi4) of lambda evaluated on u(xi).
std::array<int, 4> mono(const GSpWeight& lambda);
Exponent mono_exponent(const GSpWeight& lambda);  // arity 8, xi slots only

// Action of a xi-permutation on an exponent vector: result[p[i]] = e[i] for the xi slots.
Exponent permute_xi(const XiPerm& p, const Exponent& e);

// GL2 Weyl group data.
GL2Weight gl2_reflect(const GL2Weight& w);
GL2Weight gl2_dot_action(const WeylElement& w, const GL2Weight& lambda);
int gl2_dimension(const GL2Weight& w);

struct LeviLabel {
    enum class Kind { GL2, G0xGL2, G0 };
    Kind kind = Kind::GL2;
    GL2Weight gl2;
    int g0_exponent = 0;

    std::string to_string() const;
    int dimension() const;
    // Weight = -(exponent of the real scalars); 1(n) has weight -2n, Sym^a V2(b) has weight -a-2b.
    int hodge_weight() const;
};

LeviLabel restrict_to_levi(ParabolicKind p, const GSpWeight& lambda);
LeviLabel restrict_to_levi_gl2(const GL2Weight& lambda);  // Borel2: G0 = diag(x, 1)

int weyl_dimension(const GSpWeight& lambda);

}  // namespace gsp4kit
