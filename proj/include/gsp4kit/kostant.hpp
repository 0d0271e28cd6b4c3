#pragma once

#include <string>
#include <vector>

#include "gsp4kit/rootdata.hpp"

namespace gsp4kit {

struct KostantStratum {
    WeylElement w;
    int degree = 0;
    GSpWeight weight;      // w(lambda + rho) - rho, Siegel and Klingen
    GL2Weight gl2_weight;  // Borel2 only
    LeviLabel levi;
    int levi_dim = 0;
    int hodge_weight = 0;
};

std::vector<KostantStratum> nilpotent_cohomology(ParabolicKind p, const GSpWeight& lambda);
std::vector<KostantStratum> nilpotent_cohomology_gl2(const GL2Weight& lambda);

// Total Levi dimension in each degree 0..dim u.
std::vector<int> kostant_profile(ParabolicKind p, const GSpWeight& lambda);

enum class Variety { ModularCurve, Product, Siegel };
std::string to_string(Variety v);
Variety parse_variety(const std::string& s);

struct BoundaryEntry {
    int degree = 0;
    int hc_degree = 0;  // p, degree of H_C-cohomology
    int u_degree = 0;   // q, degree of nilradical cohomology
    LeviLabel label;
    int hodge_weight = 0;
};

struct BoundaryProfile {
    std::string stratum;  // dim0, dim1, cusp-of-curve, product-strata
    std::string anchor;
    int codimension_shift = 0;
    std::vector<BoundaryEntry> entries;

    std::vector<BoundaryEntry> in_degree(int n) const;
};

// For ModularCurve the input is lambda(k, *, t) read as Sym^k V2(t);
// for Product it is (Sym^k x Sym^k')(t).
std::vector<BoundaryProfile> boundary_degeneration(Variety v, const GSpWeight& lambda);

struct LandingCheck {
    std::string id;         // a..f
    std::string lemma;      // anchor label
    std::string condition;
    std::string violation;  // the failing relation, shown when pass is false
    bool pass = false;
    std::vector<int> source_weights;
    std::vector<int> target_weights;
};

struct VanishingReport {
    GSpWeight input;
    std::vector<LandingCheck> checks;
    bool verdict = false;
};

VanishingReport regulator_landing(int k, int kp, int t);

}  // namespace gsp4kit
