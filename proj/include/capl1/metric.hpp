#pragma once

#include <functional>
#include <vector>

#include "capl1/tree.hpp"

namespace capl1 {

enum class CapMode { fixed, lipschitz };

/// min(d, M) for a fixed cap, min(d, max(M_i, M_j)) for Lipschitz caps.
/// Fixed mode requires cap_i == cap_j.
double capped_distance(double d, double cap_i, double cap_j, CapMode mode);

/// Per-vertex nonnegative caps. `checked` verifies the Lipschitz property
/// |M(x_i)-M(x_j)| <= d(x_i, x_j) against a tree (all pairs) or a line
/// (adjacent pairs suffice) and throws on violation.
struct CapAssignment {
    std::vector<double> caps;
    bool lipschitz_checked = false;

    explicit CapAssignment(std::vector<double> c);
    static CapAssignment checked(const WeightedTree& tree, std::vector<double> caps,
                                 double tol = 1e-9);
    static CapAssignment checked(const LineMetric& line, std::vector<double> caps,
                                 double tol = 1e-9);
    int size() const { return static_cast<int>(caps.size()); }
};

/// n points in R^d under l1.
struct PointSet {
    std::vector<std::vector<double>> points;

    explicit PointSet(std::vector<std::vector<double>> pts);
    int size() const { return static_cast<int>(points.size()); }
    int dim() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }
    double distance(int i, int j) const;
};

double l1_distance(const std::vector<double>& a, const std::vector<double>& b);

/// n rows in R^D; l1 distances between rows approximate a target metric.
struct Embedding {
    std::vector<std::vector<double>> rows;
    int dim = 0;

    Embedding() = default;
    explicit Embedding(std::vector<std::vector<double>> r);
    int size() const { return static_cast<int>(rows.size()); }
    double distance(int i, int j) const { return l1_distance(rows[i], rows[j]); }
};

struct DistortionReport {
    double contraction = 1.0;  // min over pairs of embedded/truth
    double expansion = 1.0;    // max over pairs of embedded/truth
    double distortion = 1.0;   // expansion / contraction
    bool degenerate = false;   // no pair with positive truth
    int zero_violations = 0;   // pairs with truth 0 but embedded distance > tol
};

/// Ratio statistics of an embedding against a ground-truth pairwise metric.
/// Pairs with truth 0 are excluded from the ratios and counted as violations
/// when their embedded distance exceeds tol.
DistortionReport eval_distortion(const std::function<double(int, int)>& truth,
                                 const Embedding& emb, double tol = 1e-9);

}  // namespace capl1
