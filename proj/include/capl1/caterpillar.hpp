#pragma once

#include <utility>
#include <vector>

#include "capl1/metric.hpp"
#include "capl1/rng.hpp"
#include "capl1/snake.hpp"
#include "capl1/tree.hpp"

namespace capl1 {

/// Heavy-light decomposition of the tree edges into vertical paths
/// ("caterpillars"). Any root-to-leaf walk touches at most log2_scale(n)
/// of them.
struct CaterpillarDecomposition {
    struct Chain {
        int top;                      // vertex at the top of the chain (parent of head)
        std::vector<int> verts;       // head..bottom; vert k owns edge (parent, vert k)
        std::vector<double> offsets;  // distance of each vert from the top
        double length;                // offsets.back(), 0 for empty paths
    };

    std::vector<Chain> chains;
    std::vector<int> chain_of;        // chain in which v appears as a non-top vertex; -1 for root
    std::vector<double> offset_of;    // distance of v from its chain's top vertex

    int size() const { return static_cast<int>(chains.size()); }
    /// Number of distinct chains whose edges appear on the root-to-v walk.
    int chains_touched(const WeightedTree& tree, int v) const;
};

/// Heavy child = child with the largest subtree vertex count, ties broken
/// towards the lowest vertex id.
CaterpillarDecomposition decompose(const WeightedTree& tree);

/// Isometric sparse embedding: chains are cut into snippets of size exactly
/// M/log2_scale(n) plus one leftover piece at the top of each chain; the
/// coordinate for a snippet records the length of it traversed on the
/// vertex-to-root walk.
struct SnippedEmbedding {
    int snippet_count = 0;
    double snippet_size = 0.0;
    /// Sparse per-vertex vectors, coordinate indices sorted ascending.
    std::vector<std::vector<std::pair<int, double>>> coords;

    double l1(int i, int j) const;
    std::vector<double> dense(int i) const;
};

SnippedEmbedding snip_embed(const WeightedTree& tree, const CaterpillarDecomposition& decomp,
                            double M);

/// One copy of the fixed-cap tree embedding: hash the snippets into
/// k = 6*log2_scale(n) buckets, then lazily snake each bucket line with cap
/// M/log2_scale(n). Per pair, ||emb_i-emb_j||_1 <= 6*min(d(i,j), M) always.
Embedding fixed_cap_tree_embed(const WeightedTree& tree, double M, RngSeed rng);

/// Boosted variant: `copies` independent copies averaged via boost_average.
Embedding fixed_cap_tree_embed_boosted(const WeightedTree& tree, double M, int copies,
                                       RngSeed rng);

}  // namespace capl1
