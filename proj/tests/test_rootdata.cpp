#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gsp4kit/rootdata.hpp"

using namespace gsp4kit;

namespace {

// Weyl dimension formula for Sp4 written out directly.
int dim_oracle(int k, int kp) { return (k - kp + 1) * (kp + 1) * (k + 2) * (k + kp + 3) / 6; }


}  // namespace

TEST_CASE("Weyl group has eight elements with the dihedral length profile") {
    const auto w = weyl_enumerate();
    REQUIRE(w.size() == 8);
    std::multiset<int> lengths;
    for (const auto& e : w) lengths.insert(e.length);
    CHECK(lengths == std::multiset<int>{0, 1, 1, 2, 2, 3, 3, 4});
    for (const auto& a : w) {
        for (const auto& b : w) {
            const WeylElement ab = compose(a, b);
            CHECK(std::any_of(w.begin(), w.end(), [&](const WeylElement& x) { return x.matrix == ab.matrix; }));
        }
        CHECK(compose(a, inverse(a)).matrix == weyl_identity().matrix);
    }
}

TEST_CASE("generators are involutions acting as documented") {
    const WeylElement s1 = weyl_generator(1);
    const WeylElement s2 = weyl_generator(2);
    CHECK(s1.apply({3, 1, 2}) == GSpWeight{1, 3, 2});
    CHECK(s2.apply({3, 1, 2}) == GSpWeight{3, -1, 2});
    CHECK(compose(s1, s1).matrix == weyl_identity().matrix);
    CHECK(compose(s2, s2).matrix == weyl_identity().matrix);
    WeylElement c = weyl_identity();
    for (int i = 0; i < 4; ++i) c = compose(s1, compose(s2, c));
    CHECK(c.matrix == weyl_identity().matrix);
}

TEST_CASE("standard weights land on the spin diagonal and mono is additive") {
    CHECK(mono({1, 0, 0}) == std::array<int, 4>{1, 1, 0, 0});
    CHECK(mono({0, 1, 0}) == std::array<int, 4>{1, 0, 1, 0});
    CHECK(mono({0, -1, 1}) == std::array<int, 4>{0, 1, 0, 1});
    CHECK(mono({-1, 0, 1}) == std::array<int, 4>{0, 0, 1, 1});
    const GSpWeight a{3, 1, 2}, b{-2, 5, -3};
    const auto ma = mono(a), mb = mono(b), mab = mono(a + b);
    for (int i = 0; i < 4; ++i) CHECK(mab[i] == ma[i] + mb[i]);
}

TEST_CASE("xi permutations agree with the full Weyl action on random weights") {
    std::mt19937 g(11);
    std::uniform_int_distribution<int> d(-10, 10);
    for (int trial = 0; trial < 100; ++trial) {
        const GSpWeight l{d(g), d(g), d(g)};
        for (const auto& w : weyl_enumerate()) {
            CHECK(permute_xi(w.xi_perm, mono_exponent(l)) == mono_exponent(w.apply_full(l)));
        }
    }
}

TEST_CASE("rho and positive roots") {
    CHECK(rho() == GSpWeight{2, 1, 0});
    CHECK(positive_roots().size() == 4);
    CHECK(is_positive_root(2, 0));
    CHECK(is_positive_root(1, -1));
    CHECK_FALSE(is_positive_root(-1, 1));
}

TEST_CASE("dot action is w(lambda + rho) - rho") {
    const GSpWeight l{4, 2, 1};
    for (const auto& w : weyl_enumerate()) CHECK(dot_action(w, l) == w.apply(l + rho()) - rho());
}

TEST_CASE("Kostant representatives") {
    for (auto p : {ParabolicKind::SiegelQ0, ParabolicKind::KlingenQ1}) {
        const auto ks = kostant_set(p);
        REQUIRE(ks.size() == 4);
        std::multiset<int> lengths;
        for (const auto& w : ks) lengths.insert(w.length);
        CHECK(lengths == std::multiset<int>{0, 1, 2, 3});
        CHECK(nilradical_dimension(p) == 3);
    }
    CHECK(kostant_set(ParabolicKind::Borel2).size() == 2);
}

TEST_CASE("GL2 reflection") {
    CHECK(gl2_reflect({3, 2}) == GL2Weight{-3, 5});
    const auto ks = kostant_set(ParabolicKind::Borel2);
    for (const auto& w : ks) {
        if (w.length == 1) CHECK(gl2_dot_action(w, {3, 2}) == GL2Weight{-5, 6});
    }
}

TEST_CASE("Weyl dimension formula") {
    for (int k = 0; k <= 10; ++k) {
        for (int kp = 0; kp <= k; ++kp) CHECK(weyl_dimension({k, kp, 0}) == dim_oracle(k, kp));
    }
}

TEST_CASE("Levi labels and their weights") {
    const LeviLabel kl = restrict_to_levi(ParabolicKind::KlingenQ1, {3, 1, 3});
    CHECK(kl.to_string() == "Sym^1 V2(3)");
    CHECK(kl.hodge_weight() == -7);
    const LeviLabel sg = restrict_to_levi(ParabolicKind::SiegelQ0, {0, -6, 3});
    CHECK(sg.kind == LeviLabel::Kind::G0xGL2);
    CHECK(sg.g0_exponent == -3);
    CHECK(sg.hodge_weight() == 6);
    CHECK(restrict_to_levi_gl2({3, 2}).to_string() == "1(5)");
}
