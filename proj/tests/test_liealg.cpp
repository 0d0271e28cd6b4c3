#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "gsp4kit/kostant.hpp"
#include "gsp4kit/liealg.hpp"

using namespace gsp4kit;

namespace {

// Torus element diag(x1, x2, n - x1, n - x2) of gsp4.
LieMatrix torus(long x1, long x2, long n) {
    LieMatrix h(4, 4);
    h(0, 0) = x1;
    h(1, 1) = x2;
    h(2, 2) = n - x1;
    h(3, 3) = n - x2;
    return h;
}

LieMatrix symplectic_form() {
    LieMatrix j(4, 4);
    j(0, 2) = 1;
    j(1, 3) = 1;
    j(2, 0) = -1;
    j(3, 1) = -1;
    return j;
}

LieMatrix transpose(const LieMatrix& m) {
    LieMatrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    }
    return t;
}

bool in_span(const std::vector<LieMatrix>& basis, const LieMatrix& x) {
    bool ok = false;
    solve_in_span(basis, x, &ok);
    return ok;
}

std::vector<LieMatrix> matrices(const std::vector<NamedElement>& named) {
    std::vector<LieMatrix> out;
    for (const auto& [n, m] : named) out.push_back(m);
    return out;
}

int binomial(int n, int k) {
    int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("gsp4 basis preserves the symplectic form up to a scalar") {
    const LieMatrix j = symplectic_form();
    for (const auto& [name, x] : gsp4_basis()) {
        // tX J + J X = c J
        const LieMatrix s = transpose(x) * j + j * x;
        bool ok = false;
        solve_in_span({j}, s, &ok);
        CHECK_MESSAGE(ok, name);
    }
    CHECK(rank_of([] {
              LieMatrix stacked(11, 16);
              int r = 0;
              for (const auto& [n, m] : gsp4_basis()) {
                  for (int i = 0; i < 16; ++i) stacked(r, i) = m(i / 4, i % 4);
                  ++r;
              }
              return stacked;
          }()) == 11);
}

TEST_CASE("Jacobi identity and closure") {
    const auto basis = gsp4_basis();
    const auto mats = matrices(basis);
    for (const auto& x : mats) {
        for (const auto& y : mats) {
            CHECK(in_span(mats, bracket(x, y)));
            for (const auto& z : mats) {
                CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
            }
        }
    }
}

TEST_CASE("root vectors carry the advertised torus weights") {
    for (const auto& [name, x] : gsp4_basis()) {
        const GSpWeight w = gsp4_root_weight(name);
        for (const auto& [x1, x2, n] : {std::tuple{1L, 0L, 0L}, std::tuple{0L, 1L, 0L}, std::tuple{0L, 0L, 1L}, std::tuple{2L, -3L, 5L}}) {
            const long value = w.k * x1 + w.kp * x2 + w.t * n;
            CHECK_MESSAGE(bracket(torus(x1, x2, n), x) == x * GaussRational(value), name);
        }
    }
    CHECK_THROWS(gsp4_root_weight("nope"));
}

TEST_CASE("nilradicals are subalgebras with the expected shape") {
    const auto siegel = matrices(nilradical_basis(ParabolicKind::SiegelQ0));
    const auto klingen = matrices(nilradical_basis(ParabolicKind::KlingenQ1));
    REQUIRE(siegel.size() == 3);
    REQUIRE(klingen.size() == 3);
    for (const auto& a : siegel) {
        for (const auto& b : siegel) CHECK(bracket(a, b).is_zero());
    }
    bool heisenberg = false;
    for (const auto& a : klingen) {
        for (const auto& b : klingen) {
            const LieMatrix c = bracket(a, b);
            CHECK(in_span(klingen, c));
            heisenberg = heisenberg || !c.is_zero();
        }
    }
    CHECK(heisenberg);
}

TEST_CASE("compact Cartan weights") {
    CHECK(weight_under_torus(v_plus(), CompactTorus::Compact2).to_string() == "lambda'(2,0)");
    CHECK(weight_under_torus(v_minus(), CompactTorus::Compact2).to_string() == "lambda'(-2,0)");
    // Holomorphic tangent directions under the conjugation used throughout.
    CHECK(weight_under_torus(del(), CompactTorus::Compact4).to_string() == "lambda'(-1,1,0)");
    CHECK(weight_under_torus(del_bar(), CompactTorus::Compact4).to_string() == "lambda'(1,-1,0)");
    CHECK_THROWS_AS(weight_under_torus(LieMatrix::identity(4) + elementary(4, 0, 1), CompactTorus::Compact4), WeightMixing);
}

TEST_CASE("p4 root spaces") {
    std::multiset<std::tuple<int, int, int>> plus, minus;
    for (const auto& m : p4_basis(1)) {
        auto w = weight_under_torus(m, CompactTorus::Compact4);
        plus.insert({w.n, w.np, w.c});
    }
    for (const auto& m : p4_basis(-1)) {
        auto w = weight_under_torus(m, CompactTorus::Compact4);
        minus.insert({w.n, w.np, w.c});
    }
    CHECK(plus == std::multiset<std::tuple<int, int, int>>{{2, 0, 0}, {0, 2, 0}, {1, 1, 0}});
    CHECK(minus == std::multiset<std::tuple<int, int, int>>{{-2, 0, 0}, {0, -2, 0}, {-1, -1, 0}});
}

TEST_CASE("Cartan decomposition brackets") {
    const auto k = k4_basis();
    const auto pp = p4_basis(1);
    const auto pm = p4_basis(-1);
    for (const auto& a : k) {
        for (const auto& b : k) CHECK(in_span(k, bracket(a, b)));
        for (const auto& b : pp) CHECK(in_span(pp, bracket(a, b)));
        for (const auto& b : pm) CHECK(in_span(pm, bracket(a, b)));
    }
    for (const auto& a : pp) {
        for (const auto& b : pp) CHECK(bracket(a, b).is_zero());
        for (const auto& b : pm) CHECK(in_span(k, bracket(a, b)));
    }
    std::vector<LieMatrix> all = k;
    all.insert(all.end(), pp.begin(), pp.end());
    all.insert(all.end(), pm.begin(), pm.end());
    LieMatrix stacked(static_cast<int>(all.size()), 16);
    for (std::size_t r = 0; r < all.size(); ++r) {
        for (int i = 0; i < 16; ++i) stacked(static_cast<int>(r), i) = all[r](i / 4, i % 4);
    }
    CHECK(rank_of(stacked) == static_cast<int>(all.size()));
    CHECK(all.size() == 11);
}

TEST_CASE("explicit irreducible modules") {
    for (const GSpWeight l : {GSpWeight{0, 0, 0}, GSpWeight{1, 0, 2}, GSpWeight{1, 1, 0}, GSpWeight{2, 1, 1}, GSpWeight{2, 2, 0},
                              GSpWeight{3, 1, 0}, GSpWeight{4, 0, 0}}) {
        const ModuleRealization m = irrep_construct(l);
        CHECK(m.dimension == weyl_dimension(l));
        std::string failure;
        CHECK_MESSAGE(check_module_brackets(m, gsp4_basis(), &failure), failure);
        // Weight multiset is Weyl invariant and contains lambda once.
        std::map<GSpWeight, int> mult;
        for (const auto& w : m.weights) ++mult[w];
        CHECK(mult[l] == 1);
        for (const auto& w : weyl_enumerate()) {
            std::map<GSpWeight, int> moved;
            for (const auto& [mu, c] : mult) moved[w.apply_full(mu)] += c;
            CHECK(moved == mult);
        }
    }
    CHECK_THROWS(irrep_construct({1, 2, 0}));
}

TEST_CASE("symmetric power modules") {
    const std::vector<NamedElement> gens = {{"v+", v_plus()}, {"v-", v_minus()}, {"hK", compact_cartan2()}, {"z", LieMatrix::identity(2)}};
    for (int m = 0; m <= 4; ++m) {
        const ModuleRealization s = sym_module(m);
        CHECK(s.dimension == m + 1);
        std::string failure;
        CHECK_MESSAGE(check_module_brackets(s, gens, &failure), failure);
    }
    const ModuleRealization g = gl2_sym_module(3, 1);
    CHECK(g.dimension == 4);
}

TEST_CASE("Chevalley-Eilenberg complex of trivial coefficients") {
    const ModuleRealization triv = irrep_construct({0, 0, 0});
    const auto siegel = chevalley_eilenberg_dims(nilradical_basis(ParabolicKind::SiegelQ0), triv, true);
    // Abelian nilradical: the cohomology is the full exterior algebra.
    for (int i = 0; i <= 3; ++i) CHECK(siegel[static_cast<std::size_t>(i)] == binomial(3, i));
    CHECK(chevalley_eilenberg_dims(nilradical_basis(ParabolicKind::KlingenQ1), triv, true) == std::vector<int>{1, 2, 2, 1});
    CHECK(chevalley_eilenberg_dims(ParabolicKind::Borel2, gl2_sym_module(3, 1)) == std::vector<int>{1, 1});
}

TEST_CASE("Chevalley-Eilenberg against Kostant on small weights") {
    for (int k = 0; k <= 5; ++k) {
        for (int kp = 0; kp <= k && k + kp <= 5; ++kp) {
            const GSpWeight l{k, kp, 1};
            const ModuleRealization m = irrep_construct(l);
            for (auto p : {ParabolicKind::SiegelQ0, ParabolicKind::KlingenQ1}) {
                CHECK(chevalley_eilenberg_dims(p, m) == kostant_profile(p, l));
            }
        }
    }
}
