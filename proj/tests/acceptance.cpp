// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "gsp4kit/cli.hpp"
#include "gsp4kit/hodge.hpp"
#include "gsp4kit/kostant.hpp"
#include "gsp4kit/liealg.hpp"
#include "gsp4kit/satake.hpp"
#include "gsp4kit/zeta.hpp"

using namespace gsp4kit;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_s) o.require(false, "over time budget");
    if (!o.pass) ++failures;
    std::printf("criterion %d: %s  %s (%.3f s)%s%s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

std::set<GSpWeight> in_degree(const std::vector<KostantStratum>& s, int d) {
    std::set<GSpWeight> out;
    for (const auto& x : s) {
        if (x.degree == d) out.insert(x.weight);
    }
    return out;
}

std::string capture(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

}  // namespace

int main() {
    criterion(1, "Weyl group enumeration and xi-permutation consistency", 1, [] {
        Outcome o;
        const auto w = weyl_enumerate();
        std::multiset<int> lengths;
        for (const auto& e : w) lengths.insert(e.length);
        o.require(w.size() == 8, "group order");
        o.require(lengths == std::multiset<int>{0, 1, 1, 2, 2, 3, 3, 4}, "length multiset");
        std::mt19937 g(1);
        std::uniform_int_distribution<int> d(-10, 10);
        for (int i = 0; i < 100; ++i) {
            const GSpWeight l{d(g), d(g), d(g)};
            for (const auto& e : w) {
                o.require(permute_xi(e.xi_perm, mono_exponent(l)) == mono_exponent(e.apply_full(l)),
                          "xi permutation of " + e.word_string() + " at " + l.to_string());
            }
        }
        return o;
    });

    criterion(2, "Kostant stratum weights, Siegel and Klingen, k <= 10, t <= 3", 1, [] {
        Outcome o;
        for (int k = 0; k <= 10; ++k) {
            for (int kp = 0; kp <= k; ++kp) {
                for (int t = 0; t <= 3; ++t) {
                    const auto s = nilpotent_cohomology(ParabolicKind::SiegelQ0, {k, kp, t});
                    o.require(in_degree(s, 2) == std::set<GSpWeight>{{kp - 1, -k - 3, t}}, "siegel degree 2");
                    o.require(in_degree(s, 3) == std::set<GSpWeight>{{-kp - 3, -k - 3, t}}, "siegel degree 3");
                    const auto q = nilpotent_cohomology(ParabolicKind::KlingenQ1, {k, kp, t});
                    o.require(in_degree(q, 1) == std::set<GSpWeight>{{kp - 1, k + 1, t}}, "klingen degree 1");
                    o.require(in_degree(q, 2) == std::set<GSpWeight>{{-kp - 3, k + 1, t}}, "klingen degree 2");
                    o.require(in_degree(q, 3) == std::set<GSpWeight>{{-k - 4, kp, t}}, "klingen degree 3");
                }
            }
        }
        return o;
    });

    criterion(3, "Chevalley-Eilenberg dimensions equal the Kostant profile, k + k' <= 4", 60, [] {
        Outcome o;
        for (int k = 0; k <= 4; ++k) {
            for (int kp = 0; kp <= k && k + kp <= 4; ++kp) {
                const GSpWeight l{k, kp, 0};
                const ModuleRealization m = irrep_construct(l);
                for (auto p : {ParabolicKind::SiegelQ0, ParabolicKind::KlingenQ1}) {
                    o.require(chevalley_eilenberg_dims(p, m) == kostant_profile(p, l), l.to_string() + " " + to_string(p));
                }
            }
        }
        return o;
    });

    criterion(4, "landing verdict at t = 3 iff k > k' > 0 and k != k' + 3, k <= 20", 1, [] {
        Outcome o;
        for (int k = 0; k <= 20; ++k) {
            for (int kp = 0; kp <= k; ++kp) {
                const bool expected = k > kp && kp > 0 && k != kp + 3;
                o.require(regulator_landing(k, kp, 3).verdict == expected, "mismatch at " + std::to_string(k) + "," + std::to_string(kp));
            }
        }
        return o;
    });

    criterion(5, "spin L-factor, symmetric powers and Weyl characters agree to order 12", 30, [] {
        Outcome o;
        const TruncatedSeries spin = spin_lfactor_series(12);
        o.require(spin == symmetric_power_series(12), "symmetric power series");
        for (unsigned n = 0; n <= 12; ++n) {
            o.require(spin.coeff(n) == weyl_character({static_cast<int>(n), 0, 0}), "X^" + std::to_string(n));
        }
        return o;
    });

    criterion(6, "Hodge types, Serre's rule, functional equation and rank exactness", 1, [] {
        Outcome o;
        std::set<std::pair<int, int>> types;
        for (const auto& t : hodge_types(3, 1, 3).types) types.insert({t.p, t.q});
        o.require(types == std::set<std::pair<int, int>>{{0, -7}, {-2, -5}, {-5, -2}, {-7, 0}}, "types at (3,1,3)");
        for (int k = 0; k <= 10; ++k) {
            for (int kp = 0; kp <= k; ++kp) {
                const GammaFactor g = gamma_factor(k, kp);
                o.require(g.shifts == std::vector<int>{k + kp + 3, k + 2}, "gamma shifts");
                o.require(gamma_from_hodge(hodge_types(k, kp, 3)).shifts == g.shifts, "Serre's rule");
                o.require(fe_compatibility(k, kp).compatible, "functional equation");
            }
        }
        for (int a = 0; a <= 4; ++a) {
            for (int b = 0; b <= 4; ++b) {
                const RankTable r = rank_table(a, b);
                o.require(r.f0 + r.ext1 == r.mb_minus1_plus, "rank exactness");
            }
        }
        return o;
    });

    criterion(7, "zeta identity N = 6, 20 trials, seed 42, published reading", 120, [] {
        Outcome o;
        const ZetaReport with = verify_unramified_identity(6, 20, 42, true);
        const ZetaReport without = verify_unramified_identity(6, 20, 42, false);
        o.require(without.first_failure.has_value(), "unconstrained run shows no failing coefficient");
        if (!with.verdict) {
            const ZetaReport rescaled = verify_unramified_identity(6, 20, 42, true, ZetaConvention::Rescaled);
            std::string where = with.first_failure ? "trial " + std::to_string(with.first_failure->first) + ", X^" +
                                                         std::to_string(with.first_failure->second)
                                                   : "unlocalized";
            o.require(false, "first failing coefficient at " + where + "; rescaled convention verdict " +
                                 (rescaled.verdict ? "true" : "false") + "; W(0) = " + with.normalization);
        }
        return o;
    });

    criterion(8, "Bessel matrix classification and congruence invariance", 1, [] {
        Outcome o;
        const BesselClass split = classify_bessel_matrix({Rational(0), make_rational(1, 2), Rational(0)});
        o.require(split.isotropic && split.descriptor == "QxQ", "antidiagonal");
        const BesselClass gauss = classify_bessel_matrix({Rational(1), Rational(0), Rational(1)});
        o.require(!gauss.isotropic && gauss.descriptor == "Q(sqrt(-1))", "identity");
        std::mt19937 g(8);
        std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
        const BesselMatrix samples[] = {{Rational(0), make_rational(1, 2), Rational(0)},
                                        {Rational(1), Rational(0), Rational(1)},
                                        {Rational(2), Rational(-1), make_rational(5, 3)}};
        int done = 0;
        while (done < 100) {
            const Rational p = make_rational(num(g), den(g)), q = make_rational(num(g), den(g));
            const Rational r = make_rational(num(g), den(g)), s = make_rational(num(g), den(g));
            if (p * s - q * r == 0) continue;
            const BesselMatrix& beta = samples[done % 3];
            const BesselClass a = classify_bessel_matrix(beta);
            const BesselClass b = classify_bessel_matrix(beta.congruent(p, q, r, s));
            o.require(a.isotropic == b.isotropic && a.d == b.d, "congruence invariance");
            ++done;
        }
        return o;
    });

    criterion(9, "two selftest --json runs are byte-identical", 30, [] {
        Outcome o;
        const std::string cmd = std::string("'") + GSP4KIT_BINARY + "' selftest --json --seed 42";
        const std::string a = capture(cmd);
        const std::string b = capture(cmd);
        o.require(!a.empty(), "no output");
        o.require(a == b, "outputs differ");
        return o;
    });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
