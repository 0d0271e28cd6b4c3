#pragma once

#include <array>
#include <vector>

#include "gsp4kit/exact.hpp"
#include "gsp4kit/rootdata.hpp"

namespace gsp4kit {

struct XiAction {
    XiPerm perm;
    int sign = 1;
};

// (permutation, (-1)^l(w)) for the eight elements of W4.
std::vector<XiAction> xi_action_table();

// Sum over w of (-1)^l(w) w(p); only the xi slots are permuted.
LaurentPoly antisymmetrize_B(const LaurentPoly& p, const std::vector<XiAction>& table = xi_action_table());

LaurentPoly weyl_character(const GSpWeight& lambda, const std::vector<XiAction>& table = xi_action_table());

// The four diagonal entries xi1 xi2, xi1 xi3, xi2 xi4, xi3 xi4.
std::array<LaurentPoly, 4> spin_diagonal();

TruncatedSeries spin_lfactor_series(unsigned order);
TruncatedSeries symmetric_power_series(unsigned order);
// Sum over m of (b_i u^-shift_half)^m X^m.
TruncatedSeries hecke_lfactor_series(int i, int shift_half, unsigned order);

struct EulerFactor {
    long prime = 0;
    std::array<double, 4> xi{1, 1, 1, 1};
};

std::vector<long> primes_up_to(long bound);
double partial_euler_product(std::vector<EulerFactor> factors, double s);

}  // namespace gsp4kit
