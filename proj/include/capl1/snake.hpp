#pragma once

#include <functional>
#include <vector>

#include "capl1/metric.hpp"
#include "capl1/rng.hpp"
#include "capl1/tree.hpp"

namespace capl1 {

/// One segment of a snake trace. A rest segment holds value 0 for a duration
/// of `width`; a snake segment is the tent t' -> min(t'-start, 2*width-(t'-start))
/// over a duration of 2*width.
struct SnakeSegment {
    double start_t = 0.0;
    bool is_snake = false;
    double width = 0.0;

    double end_t() const { return start_t + (is_snake ? 2.0 * width : width); }
    double value_at(double t) const;
};

struct SnakeTrace {
    std::vector<SnakeSegment> segments;
    double end_t = 0.0;

    /// Value at t; t must lie in [segments.front().start_t, end_t].
    double value_at(double t) const;
};

/// Shared engine behind both snaking procedures. One fair coin per decision:
/// rest for rest_fraction*M(t) or snake with width width_fraction*M(t),
/// where M(t) is evaluated at the decision point. Generates segments until
/// t_end is covered.
struct SnakeParams {
    double rest_fraction = 0.25;
    double width_fraction = 1.0;
    double start_t = 0.0;
    std::function<double(double)> cap_at;  // must be strictly positive
};

/// Aborts if the trace would exceed this many segments (guards near-zero caps).
inline constexpr std::size_t kMaxSnakeSegments = 1'000'000'000;

SnakeTrace run_snake(const SnakeParams& params, double t_end, RngStream& coins);

/// Fixed-cap snaking: rest duration M/4 or tent of width M, starting at 0.
/// Returns the snake value at every vertex location; outputs lie in [0, M].
std::vector<double> lazy_snake_fixed(const LineMetric& line, double M, RngSeed rng);

/// Same, for arbitrary nonnegative positions (used on hashed bucket lines).
std::vector<double> lazy_snake_fixed_at(const std::vector<double>& positions, double M,
                                        RngSeed rng);

/// Lipschitz-cap snaking: starts at -2*M(0); rest M(t)/300 or tent of width
/// M(t)/100. Caps must be strictly positive and Lipschitz along the line;
/// M(t) is interpolated linearly between vertices and held at M(0) left of 0.
std::vector<double> lazy_snake_lipschitz(const LineMetric& line, const CapAssignment& caps,
                                         RngSeed rng);

/// One randomized embedding copy: returns n rows.
using CopyEmbedder = std::function<std::vector<std::vector<double>>(RngSeed)>;

/// Concatenates `copies` independent copies (streams derived from rng by copy
/// index), each divided by `copies`, so the l1 distance of the result is the
/// average of the per-copy l1 distances.
Embedding boost_average(const CopyEmbedder& embedder, int copies, RngSeed rng);

}  // namespace capl1
