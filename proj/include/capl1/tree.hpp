#pragma once

#include <vector>

namespace capl1 {

struct TreeEdge {
    int u = 0;
    int v = 0;
    double length = 0.0;
};

/// Rooted tree with nonnegative edge lengths. Immutable after construction;
/// construction validates connectivity, acyclicity and length signs.
/// Zero-length edges are allowed (the induced distance is a pseudo-metric).
class WeightedTree {
  public:
    WeightedTree(int vertex_count, std::vector<TreeEdge> edges, int root = 0);

    int size() const { return n_; }
    int root() const { return root_; }
    const std::vector<TreeEdge>& edges() const { return edges_; }

    int parent(int v) const { return parent_[v]; }
    double parent_edge_length(int v) const { return parent_len_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    /// Number of vertices in the subtree rooted at v (including v).
    int subtree_size(int v) const { return subtree_size_[v]; }
    /// Distance from the root.
    double depth(int v) const { return depth_[v]; }
    /// Number of edges to the root.
    int hop_depth(int v) const { return hops_[v]; }

    int lca(int i, int j) const;
    double distance(int i, int j) const;

    /// Vertices ordered so parents precede children.
    const std::vector<int>& top_down_order() const { return order_; }

  private:
    void check_vertex(int v) const;

    int n_;
    int root_;
    std::vector<TreeEdge> edges_;
    std::vector<int> parent_;
    std::vector<double> parent_len_;
    std::vector<std::vector<int>> children_;
    std::vector<int> subtree_size_;
    std::vector<double> depth_;
    std::vector<int> hops_;
    std::vector<int> order_;
};

/// Sum of edge lengths on the unique i-j path.
double tree_distance(const WeightedTree& tree, int i, int j);

/// All-pairs tree distances, row-major n*n.
std::vector<double> all_pairs_distances(const WeightedTree& tree);

/// Vertices on the real line: locs[i] is the distance of vertex i from
/// vertex 0. Sorted ascending, locs[0] == 0.
struct LineMetric {
    std::vector<double> locs;

    explicit LineMetric(std::vector<double> locations);
    int size() const { return static_cast<int>(locs.size()); }
    double distance(int i, int j) const;
};

/// max(1, ceil(log2(n))); the stage/width scale used throughout.
int log2_scale(int n);

}  // namespace capl1
