#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "splab/holomap.hpp"
#include "splab/inequalities.hpp"
#include "splab/rng.hpp"

namespace splab {

/// Recipe for one random certified map. Same config, same map.
struct GenConfig {
  int n = 2;
  int m = 2;
  int maxdeg = 2;
  std::uint64_t seed = 0;
  double margin = 0.05;  // in (0,1)
};

/// Coefficients drawn per multi-index (all |alpha| <= maxdeg, ascending
/// exponent-tuple order; real then imaginary part per component), then
/// globally rescaled so that sum_alpha |a_alpha| = 1 - margin. The
/// triangle inequality then certifies the image lies in the ball with the
/// requested margin.
PolyMap random_polymap(const GenConfig& cfg);

/// f(z) = sum_j v_j (p_j - z_j)/(1 - conj(p_j) z_j) for pairwise
/// orthogonal v_j with sum |v_j|^2 = 1. Lands in the ball, vanishes at p,
/// and attains equality in the zero-branch squared-sum bound there.
/// Non-orthogonal directions or a square-sum away from 1 are rejected:
/// they can push the image outside the ball.
MapHandle eq28_equality_map(const std::vector<Complex>& p,
                            const std::vector<CVector>& v);

/// The catalog pair ("remark3-g", "remark3-gtilde"): same value and first
/// derivatives at 0, different second-order behavior.
std::pair<MapHandle, MapHandle> first_order_twin_pair();

enum class SamplerKind { kGrid, kRandom };

struct SamplerSpec {
  SamplerKind kind = SamplerKind::kGrid;
  int count = 1000;     // random sampler only
  std::uint64_t seed = 0;
};

struct ScanResult {
  double worst_ratio = 0.0;
  PolydiskPoint argmax;
  int samples = 0;
};

/// Max over sampled interior points of lhs/rhs from the dimension-routed
/// check (m = 1 scalar-polydisk, m >= 2 polydisk-ball). A worst_ratio
/// above 1 + tol on a certified map indicates an implementation bug.
ScanResult scan_sharpness(const MapHandle& map, const SamplerSpec& sampler,
                          double tol = kDefaultCheckTol);

/// One point with every coordinate modulus <= 1 - margin, radius-uniform
/// per coordinate disk.
PolydiskPoint random_interior_point(int n, SplitMix64& rng,
                                    double margin = 0.05);

/// Tensor grid: per coordinate, radius 0 plus radii {0.3, 0.6, 0.9} at 8
/// equispaced phases (25 values), product over coordinates.
std::vector<PolydiskPoint> grid_points(int n);

}  // namespace splab
