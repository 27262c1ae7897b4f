#pragma once

// Functions that are constant on a finite partition of the boundary into
// disjoint cylinders of mixed depths.  This is the natural carrier for
// pushforwards under the group action: the image of a cylinder partition is
// again a cylinder partition, so representation operators act exactly here
// without refining to a uniform depth.

#include <complex>
#include <vector>

#include "loglab/functions_orlicz.hpp"
#include "loglab/word_tree.hpp"

namespace loglab {

template <class V>
struct PartitionPiece {
    ReducedWord word;
    V value;
};

// Splits every piece that is a (possibly improper) prefix of ref into its
// children until all pieces diverge from ref or extend it fully.  After the
// split, min(cpl(piece, ref), |ref|) is constant on each piece.
template <class V>
void split_for_reference(int k, std::vector<PartitionPiece<V>>& pieces, const ReducedWord& ref) {
    std::vector<PartitionPiece<V>> out;
    std::vector<PartitionPiece<V>> stack(pieces.rbegin(), pieces.rend());
    const int q = 2 * k - 1;
    while (!stack.empty()) {
        PartitionPiece<V> piece = std::move(stack.back());
        stack.pop_back();
        const int len = piece.word.length();
        const int cpl = common_prefix(piece.word.letters(), ref.letters());
        if (cpl == len && len < ref.length()) {
            // split into children, pushed in reverse so output stays in lex order
            const int children = (len == 0) ? 2 * k : q;
            std::vector<Letter> next;
            for (Letter l = 0; l < 2 * k; ++l) {
                if (len > 0 && l == inverse_letter(piece.word.at(len - 1))) continue;
                next.push_back(l);
            }
            (void)children;
            for (auto it = next.rbegin(); it != next.rend(); ++it)
                stack.push_back(PartitionPiece<V>{piece.word.append(*it), piece.value});
        } else {
            out.push_back(std::move(piece));
        }
    }
    pieces = std::move(out);
}

class PartitionFunction {
  public:
    PartitionFunction(int k, std::vector<PartitionPiece<std::complex<double>>> pieces)
        : k_(k), pieces_(std::move(pieces)) {}

    static PartitionFunction constant(int k, std::complex<double> v) {
        return PartitionFunction(k, {PartitionPiece<std::complex<double>>{ReducedWord{}, v}});
    }
    static PartitionFunction from(const CylinderFunction& f) {
        std::vector<PartitionPiece<std::complex<double>>> pieces;
        pieces.reserve(f.values.size());
        for (std::int64_t i = 0; i < f.size(); ++i)
            pieces.push_back({cylinder_word(f.k, f.depth, i), f.values[static_cast<std::size_t>(i)]});
        return PartitionFunction(f.k, std::move(pieces));
    }

    int k() const { return k_; }
    const std::vector<PartitionPiece<std::complex<double>>>& pieces() const { return pieces_; }
    std::vector<PartitionPiece<std::complex<double>>>& pieces() { return pieces_; }

    CylinderFunction to_cylinder_function(int depth) const;

    friend double lp_norm(const TreeBoundarySpace& s, const PartitionFunction& f, double p);
    friend double luxemburg_norm(const TreeBoundarySpace& s, const PartitionFunction& f,
                                 const YoungFunction& y);
    // Exact pairwise double sum over disjoint pieces.
    friend double log_energy(const TreeBoundarySpace& s, const PartitionFunction& f, double p);
    friend double wlogp_norm(const TreeBoundarySpace& s, const PartitionFunction& f, double p);
    friend std::complex<double> inner_product(const TreeBoundarySpace& s, const PartitionFunction& f,
                                              const PartitionFunction& g);

  private:
    int k_;
    std::vector<PartitionPiece<std::complex<double>>> pieces_;
};

}  // namespace loglab
