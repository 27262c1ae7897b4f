#pragma once

// The logarithmic energy form, W^{log,p} norms, off-diagonal cutoff kernel
// operators and the compact-embedding spectrum at p = 2.
//
// For a depth-n function the form is the exact double sum
//   sum_{c != c'} |f_c - f_c'|^p q^{m(c,c')} nu(c) nu(c'),
// m the divergence depth.  Pairs are grouped by their divergence node with a
// fixed reduction order; a naive pairwise route is kept as an oracle and an
// O(N) route covers p = 2.

#include <optional>
#include <vector>

#include "loglab/ahlfors_sampled.hpp"
#include "loglab/functions_orlicz.hpp"
#include "loglab/word_tree.hpp"

namespace loglab {

struct EnergyBreakdown {
    double total = 0;
    std::vector<std::pair<int, double>> by_divergence_depth;
};

struct EnergyBreakdownExact {
    Rational total;
    std::vector<std::pair<int, Rational>> by_divergence_depth;
};

// Divergence-node aggregation.
EnergyBreakdown log_energy(const TreeBoundarySpace& s, const CylinderFunction& f, double p);
// Pairwise sum with per-pair divergence computation.
double log_energy_naive(const TreeBoundarySpace& s, const CylinderFunction& f, double p);
// O(N) subtree-sums route, p = 2 only.
double log_energy_fast_p2(const TreeBoundarySpace& s, const CylinderFunction& f);

// Exact rational routes; p must be a positive integer, and for odd p the
// values must be real.
EnergyBreakdownExact log_energy_exact(const TreeBoundarySpace& s, const CylinderFunction& f, int p);
Rational log_energy_naive_exact(const TreeBoundarySpace& s, const CylinderFunction& f, int p);

// (||f||_p^p + E_log_p(f))^(1/p).
double wlogp_norm(const TreeBoundarySpace& s, const CylinderFunction& f, double p);

double log_energy_sampled(const SampledAhlforsSpace& s, const SampledFunction& f, double p);

struct CutoffKernelOperator {
    double epsilon_cut = 0;
    int n = 0;
    std::vector<double> kernel;    // dense symmetric, zero where d <= eps_cut
    std::vector<double> masses;    // quadrature weights per cell/point
    std::vector<double> N_values;  // row integrals int K(xi, .) dnu

    double min_N() const;
    // (T_K f)(i) = sum_j K(i,j) f(j) nu(j)
    std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& f) const;
};

CutoffKernelOperator cutoff_operator(const TreeBoundarySpace& s, int depth, double epsilon_cut);
CutoffKernelOperator cutoff_operator(const SampledAhlforsSpace& s, double epsilon_cut);

// Exact tree value of the row integral for eps_cut = e^(-eps j), j <= depth.
Rational tree_cutoff_N_exact(const TreeBoundarySpace& s, int j);

// The `count` largest values of ||f||_L2^2 / ||f||_W^2 over depth-n cylinder
// functions, descending; the constant function gives 1.
std::vector<double> embedding_spectrum(const TreeBoundarySpace& s, int depth, int count);

}  // namespace loglab
