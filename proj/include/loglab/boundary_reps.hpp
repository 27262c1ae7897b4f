#pragma once

// The representation operators pi^(p)_{s+it}(g) f = D_{g^-1}^{D/p - s - it} (f o g^-1)
// on boundary functions, the radial integrals Xi_T(g) = int D_g^T dnu, the
// oscillation multipliers Theta_{g,t}, matrix coefficients, duality, and
// operator-norm estimates on W^{log,p}.

#include <complex>
#include <utility>
#include <vector>

#include "loglab/energy_forms.hpp"
#include "loglab/functions_orlicz.hpp"
#include "loglab/partition.hpp"
#include "loglab/word_tree.hpp"

namespace loglab {

struct RepParams {
    double p = 2;
    double s = 0;
    double t = 0;
};

void validate(const TreeBoundarySpace& sp, const RepParams& params);

// Output depth is |g| + max(depth(f), 1): deep enough that both the weight
// and the pulled-back values are constant per output cylinder.
CylinderFunction apply_rep(const TreeBoundarySpace& sp, const RepParams& params,
                           const ReducedWord& g, const CylinderFunction& f);

// Same operator on a partition function; the result keeps the pushforward
// partition, which stays small for radial inputs.
PartitionFunction apply_rep(const TreeBoundarySpace& sp, const RepParams& params,
                            const ReducedWord& g, const PartitionFunction& f);

// Xi_T(g) = sum_m nu(A_m) e^(eps T (2m - |g|)); depends on g through |g|.
double xi_integral(const TreeBoundarySpace& sp, const ReducedWord& g, double T);
double xi_integral(const TreeBoundarySpace& sp, int glen, double T);
// Exact value for T = (tau_num/tau_den) * D with tau_den in {1, 2}.
SqrtExt xi_integral_exact(const TreeBoundarySpace& sp, int glen, long tau_num, long tau_den);

// Exact pushforward route for <pi^(p)_0(g) 1, phi>, p in {1, 2}, through the
// image partition rather than the annulus formula.
SqrtExt rep_one_coefficient_exact(const TreeBoundarySpace& sp, int p, const ReducedWord& g,
                                  const Cylinder& target);
SqrtExt rep_one_coefficient_exact(const TreeBoundarySpace& sp, int p, const ReducedWord& g);

struct MultiplierFunction {
    ReducedWord g;
    // Theta value per annulus level m = 0..|g| of the reference word.
    std::vector<double> by_level;
    CylinderFunction as_cylinder_function(const TreeBoundarySpace& sp) const;
    double sup() const;
};

MultiplierFunction theta_multiplier(const TreeBoundarySpace& sp, const ReducedWord& g, double p,
                                    double t);
// Exact sup at t = 0, p in {1,2}.
SqrtExt theta_sup_exact(const TreeBoundarySpace& sp, const ReducedWord& g, int p);

std::complex<double> matrix_coefficient(const TreeBoundarySpace& sp, const RepParams& params,
                                        const ReducedWord& g, const PartitionFunction& f,
                                        const PartitionFunction& h);

// (<pi^(p)_z(g) f, h>, <f, pi^(q)_{-conj z}(g^-1) h>) with q conjugate to p.
std::pair<std::complex<double>, std::complex<double>> duality_check(const TreeBoundarySpace& sp,
                                                                    const RepParams& params,
                                                                    const ReducedWord& g,
                                                                    const PartitionFunction& f,
                                                                    const PartitionFunction& h);

// Lower bound for ||pi(g)|| on W^{log,p} over depth-limited functions.  At
// p = 2 this is the exact maximum over the depth-n space (generalized
// symmetric eigenproblem, solved by B-orthogonal power iteration); otherwise
// the maximum over a fixed candidate family.
double op_norm_lower(const TreeBoundarySpace& sp, const RepParams& params, const ReducedWord& g,
                     int depth);

struct BasicCalcBound {
    double c1 = 0;         // 3^(p-1)
    double c2 = 0;         // 2 * 3^(p-1)
    double theta_sup = 0;  // ||Theta_{g,t}||_inf, an upper bound for the L_exp norm
    double composite = 0;  // bound on ||pi(g)||^p on W^{log,p}
};

// Assembles the energy inequality with the given empirical constant for
// ||f : L^p log L|| <= C ||f : W^{log,p}||.  Requires s = 0.
BasicCalcBound basic_calc_upper(const TreeBoundarySpace& sp, const RepParams& params,
                                const ReducedWord& g, double logsob_luxemburg_constant);

struct LrGrowthBounds {
    double lower = 0;  // ||pi^(p)_it(g) 1||_{L^r}, certified lower bound
    double upper = 0;  // sup bound ||D_{g^-1}^{D(1/p - 1/r)}||_inf
};

// For p > r the pair is reduced through duality to its conjugate exponents.
LrGrowthBounds lr_growth(const TreeBoundarySpace& sp, double p, double r, int glen);

}  // namespace loglab
