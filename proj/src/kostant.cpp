#include "gsp4kit/kostant.hpp"

#include <algorithm>

namespace gsp4kit {

std::vector<KostantStratum> nilpotent_cohomology(ParabolicKind p, const GSpWeight& lambda) {
    if (!lambda.dominant()) throw PreconditionError("nilpotent_cohomology needs a dominant weight, got " + lambda.to_string());
    if (p != ParabolicKind::SiegelQ0 && p != ParabolicKind::KlingenQ1) {
        throw PreconditionError("nilpotent_cohomology supports siegel and klingen; use nilpotent_cohomology_gl2 for borel2");
    }
    std::vector<KostantStratum> out;
    for (const auto& w : kostant_set(p)) {
        KostantStratum s;
        s.w = w;
        s.degree = w.length;
        s.weight = dot_action(w, lambda);
        s.levi = restrict_to_levi(p, s.weight);
        s.levi_dim = s.levi.dimension();
        s.hodge_weight = s.levi.hodge_weight();
        out.push_back(s);
    }
    return out;
}

std::vector<KostantStratum> nilpotent_cohomology_gl2(const GL2Weight& lambda) {
    if (!lambda.dominant()) throw PreconditionError("nilpotent_cohomology_gl2 needs k >= 0");
    std::vector<KostantStratum> out;
    for (const auto& w : kostant_set(ParabolicKind::Borel2)) {
        KostantStratum s;
        s.w = w;
        s.degree = w.length;
        s.gl2_weight = gl2_dot_action(w, lambda);
        s.levi = restrict_to_levi_gl2(s.gl2_weight);
        s.levi_dim = s.levi.dimension();
        s.hodge_weight = s.levi.hodge_weight();
        out.push_back(s);
    }
    return out;
}

std::vector<int> kostant_profile(ParabolicKind p, const GSpWeight& lambda) {
    std::vector<int> dims(static_cast<std::size_t>(nilradical_dimension(p) + 1), 0);
    if (p == ParabolicKind::Borel2) {
        for (const auto& s : nilpotent_cohomology_gl2({lambda.k, lambda.t})) dims[static_cast<std::size_t>(s.degree)] += s.levi_dim;
    } else {
        for (const auto& s : nilpotent_cohomology(p, lambda)) dims[static_cast<std::size_t>(s.degree)] += s.levi_dim;
    }
    return dims;
}

std::string to_string(Variety v) {
    switch (v) {
        case Variety::ModularCurve: return "modular-curve";
        case Variety::Product: return "product";
        case Variety::Siegel: return "siegel";
    }
    return "?";
}

Variety parse_variety(const std::string& s) {
    if (s == "modular-curve") return Variety::ModularCurve;
    if (s == "product") return Variety::Product;
    if (s == "siegel") return Variety::Siegel;
    throw PreconditionError("unsupported variety tag '" + s + "'");
}

std::vector<BoundaryEntry> BoundaryProfile::in_degree(int n) const {
    std::vector<BoundaryEntry> out;
    std::copy_if(entries.begin(), entries.end(), std::back_inserter(out), [n](const BoundaryEntry& e) { return e.degree == n; });
    return out;
}

namespace {

// H^n = sum over p + q = n + c of H^p(H_C, H^q(u)); H_C has cohomological dimension hc_dim.
BoundaryProfile assemble(const std::string& stratum, const std::string& anchor, int c, int hc_dim,
                         const std::vector<KostantStratum>& strata) {
    BoundaryProfile prof;
    prof.stratum = stratum;
    prof.anchor = anchor;
    prof.codimension_shift = c;
    for (int p = 0; p <= hc_dim; ++p) {
        for (const auto& s : strata) {
            BoundaryEntry e;
            e.hc_degree = p;
            e.u_degree = s.degree;
            e.degree = p + s.degree - c;
            e.label = s.levi;
            e.hodge_weight = s.hodge_weight;
            prof.entries.push_back(e);
        }
    }
    std::stable_sort(prof.entries.begin(), prof.entries.end(),
                     [](const BoundaryEntry& a, const BoundaryEntry& b) { return a.degree < b.degree; });
    return prof;
}

// 1(n) tensor Sym^a V2(b) on a product stratum is Sym^a V2(n + b).
LeviLabel tensor_with_g0(const LeviLabel& g0, const GL2Weight& other) {
    LeviLabel l;
    l.kind = LeviLabel::Kind::GL2;
    l.gl2 = {other.k, g0.g0_exponent + other.t};
    return l;
}

}  // namespace

std::vector<BoundaryProfile> boundary_degeneration(Variety v, const GSpWeight& lambda) {
    std::vector<BoundaryProfile> out;
    switch (v) {
        case Variety::ModularCurve: {
            if (lambda.k < 0) throw PreconditionError("Sym^k needs k >= 0");
            out.push_back(assemble("cusp-of-curve", "lemma:degcm", 1, 0, nilpotent_cohomology_gl2({lambda.k, lambda.t})));
            break;
        }
        case Variety::Product: {
            if (lambda.k < 0 || lambda.kp < 0) throw PreconditionError("Sym^k x Sym^k' needs k, k' >= 0");
            BoundaryProfile prof;
            prof.stratum = "product-strata";
            prof.anchor = "lemma:str'1";
            prof.codimension_shift = 1;
            // Cusp of one factor times the other curve, in both orders.
            const std::pair<int, int> orders[2] = {{lambda.k, lambda.kp}, {lambda.kp, lambda.k}};
            for (const auto& [cusp_k, curve_k] : orders) {
                for (const auto& s : nilpotent_cohomology_gl2({cusp_k, lambda.t})) {
                    BoundaryEntry e;
                    e.u_degree = s.degree;
                    e.degree = s.degree - 1;
                    e.label = tensor_with_g0(s.levi, {curve_k, lambda.t});
                    e.hodge_weight = e.label.hodge_weight();
                    prof.entries.push_back(e);
                }
            }
            std::stable_sort(prof.entries.begin(), prof.entries.end(),
                             [](const BoundaryEntry& a, const BoundaryEntry& b) { return a.degree < b.degree; });
            out.push_back(prof);
            break;
        }
        case Variety::Siegel: {
            if (!lambda.dominant()) throw PreconditionError("siegel boundary needs a dominant weight");
            out.push_back(assemble("dim1", "lemma:str1", 2, 0, nilpotent_cohomology(ParabolicKind::KlingenQ1, lambda)));
            out.push_back(assemble("dim0", "lemma:str0", 3, 1, nilpotent_cohomology(ParabolicKind::SiegelQ0, lambda)));
            break;
        }
    }
    return out;
}

namespace {

const BoundaryProfile& find_stratum(const std::vector<BoundaryProfile>& profs, const std::string& name) {
    for (const auto& p : profs) {
        if (p.stratum == name) return p;
    }
    throw Error("stratum " + name + " missing");
}

std::vector<int> weights_of(const std::vector<BoundaryEntry>& entries) {
    std::vector<int> w;
    for (const auto& e : entries) w.push_back(e.hodge_weight);
    return w;
}

}  // namespace

VanishingReport regulator_landing(int k, int kp, int t) {
    VanishingReport rep;
    rep.input = {k, kp, t};

    LandingCheck a{"a", "thm:th1", "k > k' > 0", "k > k' > 0 fails", k > kp && kp > 0, {}, {}};
    LandingCheck b{"b", "prop:intext", "t <= 3", "t > 3", t <= 3, {}, {}};
    LandingCheck c{"c", "prop:annullation", "t in {2, 3}", "t not in {2, 3}", t == 2 || t == 3, {}, {}};
    rep.checks.push_back(a);
    rep.checks.push_back(b);
    rep.checks.push_back(c);

    const bool dominant = k >= kp && kp >= 0;
    LandingCheck d{"d", "lemma:aux'", "source H^0 weights on the product boundary differ from the target H^0 weight on the 1-dim stratum",
                   "k-k' = 2t-3", false, {}, {}};
    LandingCheck e{"e", "lemma:poidscmod", "H^1 of Sym^{k+1} V2(t) on the boundary curve has no weight zero",
                   "t = 1 or 2t = -k", false, {}, {}};
    LandingCheck f{"f", "lemma:str0", "H^0 and H^1 on the 0-dim stratum have positive weights",
                   "a weight <= 0 on the 0-dim stratum", false, {}, {}};
    if (!dominant) {
        d.violation = e.violation = f.violation = "weight not dominant";
    } else {
        const auto product = boundary_degeneration(Variety::Product, {k, kp, t});
        const auto siegel = boundary_degeneration(Variety::Siegel, {k, kp, t});
        d.source_weights = weights_of(find_stratum(product, "product-strata").in_degree(0));
        d.target_weights = weights_of(find_stratum(siegel, "dim1").in_degree(0));
        d.pass = std::none_of(d.source_weights.begin(), d.source_weights.end(), [&](int w) {
            return std::find(d.target_weights.begin(), d.target_weights.end(), w) != d.target_weights.end();
        });

        // The target variation lives on a modular curve; check its H^1 for weight zero.
        const auto targets = find_stratum(siegel, "dim1").in_degree(0);
        bool ok = true;
        for (const auto& tgt : targets) {
            const GL2Weight sym = tgt.label.gl2;
            const auto cusp = boundary_degeneration(Variety::ModularCurve, {sym.k, 0, sym.t});
            const int boundary_weight = find_stratum(cusp, "cusp-of-curve").in_degree(0).front().hodge_weight;
            const int interior_weight = 1 + tgt.hodge_weight;  // H^1_! is pure of weight 1 + variation weight
            e.source_weights.push_back(interior_weight);
            e.target_weights.push_back(boundary_weight);
            ok = ok && boundary_weight != 0 && interior_weight != 0;
        }
        e.pass = ok;

        const auto& dim0 = find_stratum(siegel, "dim0");
        for (int n : {0, 1}) {
            for (int w : weights_of(dim0.in_degree(n))) f.source_weights.push_back(w);
        }
        f.pass = !f.source_weights.empty() &&
                 std::all_of(f.source_weights.begin(), f.source_weights.end(), [](int w) { return w > 0; });
    }
    rep.checks.push_back(d);
    rep.checks.push_back(e);
    rep.checks.push_back(f);
    rep.verdict = std::all_of(rep.checks.begin(), rep.checks.end(), [](const LandingCheck& x) { return x.pass; });
    return rep;
}

}  // namespace gsp4kit
