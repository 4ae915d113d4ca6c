#pragma once

#include <cstdint>
#include <span>

#include "nitk/distribution.hpp"

namespace nitk {

// All information measures are in bits (logs base 2). An absolute-continuity
// failure is reported as IEEE +infinity, the dedicated sentinel for "the
// divergence diverges"; finite results never round up to it.
inline constexpr double kLog2E = 1.4426950408889634074;  // log2(e)

// x * log2(x/y) with the 0*log(0/y) = 0 convention; +inf when x > 0, y = 0.
double xlog_ratio(double x, double y);

double entropy(const Distribution& p);
double binary_entropy(double p);

double kl_divergence(const Distribution& p, const Distribution& q);

// Sum_x r(x) * D(p_rows[x] || q_rows[x]).
double conditional_kl(const Channel& p_cond, const Channel& q_cond, const Distribution& r_x);

double tv_distance(const Distribution& p, const Distribution& q);

// I(X;Y) = D(J || J_X x J_Y). Always finite and >= 0 for a valid joint.
double mutual_information(const JointDistribution& j);

std::size_t hamming_distance(std::span<const int> x, std::span<const int> y);

// Reverse Markov inequality: for X <= x_max a.s. and tau <= E[X] < x_max,
// P(X > tau) >= (E[X] - tau) / (x_max - tau), clipped to [0, 1].
double reverse_markov_bound(double mean, double x_max, double tau);

}  // namespace nitk
