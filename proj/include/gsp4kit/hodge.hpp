#pragma once

#include <string>
#include <vector>

#include "gsp4kit/exact.hpp"
#include "gsp4kit/rootdata.hpp"

namespace gsp4kit {

struct HodgeType {
    int p = 0;
    int q = 0;
    int multiplicity = 1;
};

struct HodgeDecomp {
    int weight = 0;
    std::vector<HodgeType> types;

    bool conjugation_stable() const;
};

// Multiplicities of the holomorphic (mH) and generic (mW) members default to one.
HodgeDecomp hodge_types(int k, int kp, int t, int mH = 1, int mW = 1);

struct KType {
    std::string tag;  // H, W, Wbar, Hbar
    CompactWeight weight;
};

std::vector<KType> lpacket_ktypes(int k, int kp, int t);

struct RankTable {
    int f0 = 0;
    int mb_minus1_plus = 0;
    int ext1 = 0;
};

RankTable rank_table(int mH, int mW);

struct GammaFactor {
    std::vector<int> shifts;  // product of Gamma_C(s + a), sorted descending

    double evaluate(double s) const;
};

double gamma_c(double s);
GammaFactor gamma_factor(int k, int kp);
// Serre's rule: one Gamma_C(s - p) per type (p, q) with p < q, repeated by multiplicity.
GammaFactor gamma_from_hodge(const HodgeDecomp& h);

struct AffineMap {
    Rational slope;
    Rational constant;
    std::string twist;

    std::string to_string() const;
    friend bool operator==(const AffineMap& a, const AffineMap& b) {
        return a.slope == b.slope && a.constant == b.constant;
    }
};

struct FEReport {
    int w = 0;
    int c = 0;
    AffineMap automorphic;
    AffineMap motivic;
    bool compatible = false;
    int determinant_exponent = 0;
    bool determinant_matches = false;
    std::string expectation;  // recorded, never asserted
};

FEReport fe_compatibility(int k, int kp);

struct DeltaTag {
    std::string tag;
    int epsilon_exponent = 0;
    int tate_twist_coefficient = 0;  // multiple of w

    friend bool operator==(const DeltaTag&, const DeltaTag&) = default;
};

DeltaTag delta_exponent();

struct CharacterSplit {
    GL2Weight first;
    GL2Weight second;
    std::string lhs;  // both sides after eliminating d2; x1..x4 stand for a1, d1, a2, d2
    std::string rhs;
};

CharacterSplit character_type_split(int k, int kp);

}  // namespace gsp4kit
