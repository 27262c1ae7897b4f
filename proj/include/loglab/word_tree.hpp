#pragma once

// Exact combinatorics of the free group F_k, its Cayley tree, and the visual
// boundary: reduced words, cylinders, Gromov products, the Hausdorff measure,
// metric derivatives of the boundary action, and annulus decompositions.
//
// Letters are encoded 0..2k-1 with letter^1 the inverse, so the global
// lexicographic order is a < a^-1 < b < b^-1 < ...  All measures are exact
// rationals and all distances/derivatives are integer exponents of e^-eps;
// floating point enters only when a caller materializes a value.

#include <climits>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loglab/errors.hpp"
#include "loglab/exact.hpp"

namespace loglab {

using Letter = std::uint8_t;

inline Letter inverse_letter(Letter a) { return a ^ 1u; }

// Gromov product of two identical rays.
inline constexpr int kInfiniteProduct = INT_MAX;

struct TreeBoundarySpace {
    int k = 2;           // free generators
    int q = 3;           // 2k-1, branching of the tree
    double epsilon = 0;  // visual parameter; ln(q) by default so that D = 1
    double D = 1;        // Hausdorff dimension ln(q)/epsilon

    static TreeBoundarySpace make(int k, double epsilon = 0.0);

    // Non-root vertices of depth n, n >= 1; 1 for n = 0.
    std::int64_t cylinder_count(int depth) const;
    // nu of a single depth-n cylinder.
    Rational cylinder_measure_at(int depth) const;
    // nu(B(xi, e^-eps n)) / r^D, the exact Ahlfors ratio on the scale grid.
    Rational ahlfors_constant() const { return Rational(q, 2 * k); }
};

class ReducedWord {
  public:
    ReducedWord() = default;
    explicit ReducedWord(std::vector<Letter> letters);  // must already be reduced

    // Parses "abA" style text: 'a'..'z' generators, 'A'..'Z' inverses.
    static ReducedWord parse(std::string_view text);
    // Reduces an arbitrary letter sequence.
    static ReducedWord reduce(std::span<const Letter> letters);

    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    Letter at(int i) const { return letters_[static_cast<std::size_t>(i)]; }
    std::span<const Letter> letters() const { return letters_; }

    ReducedWord inverse() const;
    ReducedWord concat(const ReducedWord& rhs) const;  // reduce(this * rhs)
    ReducedWord prefix(int n) const;
    ReducedWord append(Letter a) const;  // must not cancel

    std::string str() const;
    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

  private:
    std::vector<Letter> letters_;
};

// Common prefix length of two letter sequences.
int common_prefix(std::span<const Letter> a, std::span<const Letter> b);

struct Cylinder {
    ReducedWord word;
    int depth() const { return word.length(); }
    friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

// Eventually periodic infinite reduced word pre * per^infinity.
class BoundaryPoint {
  public:
    BoundaryPoint(ReducedWord preperiod, ReducedWord period);
    const ReducedWord& preperiod() const { return pre_; }
    const ReducedWord& period() const { return per_; }
    Letter letter_at(int i) const;
    ReducedWord prefix(int n) const;

  private:
    ReducedWord pre_, per_;
};

// Value e^(-epsilon * exponent); exponent may be negative (derivatives) and
// the zero flag marks distance zero between identical rays.
struct ScaleExponent {
    long exponent = 0;
    bool zero = false;

    static ScaleExponent of(long e) { return {e, false}; }
    static ScaleExponent zero_value() { return {0, true}; }

    double value(const TreeBoundarySpace& s) const {
        return zero ? 0.0 : std::exp(-s.epsilon * static_cast<double>(exponent));
    }
    friend ScaleExponent operator*(ScaleExponent a, ScaleExponent b) {
        if (a.zero || b.zero) return zero_value();
        return of(a.exponent + b.exponent);
    }
    // Comparison of the represented values (larger exponent = smaller value).
    friend bool value_less(ScaleExponent a, ScaleExponent b) {
        if (a.zero) return !b.zero;
        if (b.zero) return false;
        return a.exponent > b.exponent;
    }
    friend bool operator==(const ScaleExponent&, const ScaleExponent&) = default;
};

// ---------------------------------------------------------------------------
// Gromov products.  On the tree these are common prefix lengths; between two
// identical rays the product is infinite.

int gromov_product(const ReducedWord& x, const ReducedWord& y);
int gromov_product(const ReducedWord& x, const BoundaryPoint& xi);
int gromov_product(const BoundaryPoint& xi, const ReducedWord& x);
int gromov_product(const BoundaryPoint& xi, const BoundaryPoint& eta);

// ---------------------------------------------------------------------------
// Visual distances d = exp(-eps < , >).  Cylinder arguments are treated as
// sets, so the distance exists only for disjoint cylinders.

ScaleExponent visual_distance(const Cylinder& x, const Cylinder& y);
ScaleExponent visual_distance(const Cylinder& x, const BoundaryPoint& xi);
ScaleExponent visual_distance(const BoundaryPoint& xi, const Cylinder& x);
ScaleExponent visual_distance(const BoundaryPoint& xi, const BoundaryPoint& eta);

// Extended metric between a tree vertex and a boundary point (or vertex).
ScaleExponent extended_distance(const ReducedWord& x, const BoundaryPoint& xi);
ScaleExponent extended_distance(const ReducedWord& x, const ReducedWord& y);

Rational cylinder_measure(const TreeBoundarySpace& s, const Cylinder& c);

// Metric derivative of the boundary action of g, constant on the cylinder.
// Returns exponent |g| - 2m with m = min(cpl(c, word(g^-1)), |g|), i.e. the
// value e^(eps (2m-|g|)).  Orientation is pinned by the geometric mean value
// identity d(gx, gy)^2 = D_g(x) D_g(y) d(x, y)^2; see the identity suites.
ScaleExponent metric_derivative(const TreeBoundarySpace& s, const ReducedWord& g, const Cylinder& c);

// Same, with the reference word flipped to word(g); used as a negative
// control by the verification suite.
ScaleExponent metric_derivative_oriented(const TreeBoundarySpace& s, const ReducedWord& g,
                                         const Cylinder& c, bool use_inverse_orientation);

// Boundary action xi -> g xi restricted to a cylinder deep enough that the
// image is a single cylinder.
Cylinder act(const TreeBoundarySpace& s, const ReducedWord& g, const Cylinder& c);

// Masses of the level sets A_m = { <xi, go> = m }, m = 0..|g|.
std::vector<std::pair<int, Rational>> annuli(const TreeBoundarySpace& s, const ReducedWord& g);
// Same data when only the length of g matters.
std::vector<Rational> annulus_masses(const TreeBoundarySpace& s, int glen);

// A ray achieving <xi, go> = |g|: extend g by the least non-cancelling
// generator, repeated.
BoundaryPoint closest_boundary_ray(const ReducedWord& g);

// ---------------------------------------------------------------------------
// Lexicographic indexing of the depth-n cylinders (index order = DFS order,
// so the descendants of a prefix form a contiguous range).

std::int64_t cylinder_index(int k, const ReducedWord& w);
ReducedWord cylinder_word(int k, int depth, std::int64_t index);

// Iterates all depth-n words in lexicographic order without re-deriving the
// word from its index each time.
class CylinderIterator {
  public:
    CylinderIterator(int k, int depth);
    bool done() const { return done_; }
    std::span<const Letter> word() const { return word_; }
    std::int64_t index() const { return index_; }
    void next();

  private:
    int k_, depth_;
    bool done_ = false;
    std::int64_t index_ = 0;
    std::vector<Letter> word_;
};

}  // namespace loglab
