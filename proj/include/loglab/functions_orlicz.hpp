#pragma once

// Locally constant functions on the tree boundary, weighted-sample norm
// kernels shared with the sampled backends, Luxemburg norms for the Zygmund
// and exponential classes, and the entropy functional.

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "loglab/word_tree.hpp"

namespace loglab {

struct CylinderFunction {
    int k = 2;
    int depth = 0;
    std::vector<std::complex<double>> values;  // per depth-n cylinder, lex order

    static CylinderFunction constant(int k, std::complex<double> v);
    static CylinderFunction indicator(int k, const Cylinder& c);
    static CylinderFunction zeros(int k, int depth);

    std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
    bool is_real() const;
};

CylinderFunction refine(const CylinderFunction& f, int depth);
// Largest pointwise modulus of the difference after refining to common depth.
double max_abs_difference(const CylinderFunction& f, const CylinderFunction& g);

// Young functions Phi_p(x) = |x|^p log+ |x|^p and Psi(x) = |x| (|x|<1),
// exp(|x|-1) otherwise.
struct YoungFunction {
    enum class Kind { power_log, exponential };
    Kind kind = Kind::power_log;
    double p = 1;

    static YoungFunction phi(double p) { return {Kind::power_log, p}; }
    static YoungFunction psi() { return {Kind::exponential, 1}; }
    double operator()(double x) const;
};

// (|value|, mass) pairs; the kernels below are shared by cylinder functions,
// partition functions and sampled backends.
using WeightedValues = std::vector<std::pair<double, double>>;

double lp_norm_weighted(std::span<const std::pair<double, double>> items, double p);
double luxemburg_norm_weighted(std::span<const std::pair<double, double>> items,
                               const YoungFunction& y, double tol = 1e-10);
double entropy_weighted(std::span<const std::pair<double, double>> items, double p);

WeightedValues weighted_values(const TreeBoundarySpace& s, const CylinderFunction& f);

double lp_norm(const TreeBoundarySpace& s, const CylinderFunction& f, double p);
double luxemburg_norm(const TreeBoundarySpace& s, const CylinderFunction& f, const YoungFunction& y);
// Integral of |f|^p log+(|f|^p / ||f||_p^p); throws ZeroFunction on f = 0.
double entropy_functional(const TreeBoundarySpace& s, const CylinderFunction& f, double p);
// (integral |fg|, ||f : LlogL|| * ||g : L_exp||).
std::pair<double, double> holder_pair(const TreeBoundarySpace& s, const CylinderFunction& f,
                                      const CylinderFunction& g);

}  // namespace loglab
