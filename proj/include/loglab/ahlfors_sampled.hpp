#pragma once

// Weighted point clouds with distance oracles standing in for bounded
// Ahlfors-David regular spaces: the unit-circumference circle, the middle
// thirds Cantor set, and the tree boundary itself sampled at a fixed depth.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "loglab/word_tree.hpp"

namespace loglab {

struct SampledAhlforsSpace {
    enum class Kind { circle, cantor, tree };
    Kind kind = Kind::circle;
    std::string name;

    int n = 0;                    // number of points
    std::vector<double> weights;  // quadrature masses, summing to nu(Z) = 1
    double D = 1, diam = 1, r_min = 0;
    double c_low = 1, c_high = 1;  // declared regularity constants, all scales

    // backend data
    std::vector<double> position;          // circle arc position / cantor coordinate
    std::vector<Letter> tree_letters;      // flattened depth-m words
    int tree_depth = 0;
    double tree_epsilon = 0;

    double dist(int i, int j) const;
    // Mass of the ball of radius r about point i; points at distance exactly
    // r are counted with half weight (trapezoidal shell rule).
    double ball_mass(int i, double r) const;
};

SampledAhlforsSpace make_circle(int n);
SampledAhlforsSpace make_cantor(int level);
SampledAhlforsSpace make_tree_sample(const TreeBoundarySpace& s, int depth);

struct SampledFunction {
    std::vector<std::complex<double>> values;
};

enum class ShellRule { exclude, half };

// Quadrature of the tail integral over { d(xi, .) > r } of d^-D, diagonal
// point excluded.  ShellRule::half adds half the mass of the sphere
// { d = r }, the trapezoidal treatment of the cut.
double tail_integral(const SampledAhlforsSpace& s, int xi, double r,
                     ShellRule rule = ShellRule::exclude);

// Quadrature over the complement of an explicit point subset E.
double complement_tail_integral(const SampledAhlforsSpace& s, int xi,
                                const std::vector<char>& in_set);

double lp_norm(const SampledAhlforsSpace& s, const SampledFunction& f, double p);
double entropy_functional(const SampledAhlforsSpace& s, const SampledFunction& f, double p);

}  // namespace loglab
