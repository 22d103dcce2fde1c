#pragma once

#include "frc/types.hpp"

namespace frc {

/// Enumerate the Vietoris-Rips filtration of a distance matrix: every clique
/// with 1..d_max+2 nodes and diameter <= max_dist, sorted by (weight,
/// dimension, lexicographic node order). Faces one dimension above d_max are
/// included so that d_max-dimensional curvature sees its transverse
/// neighbours through (d_max+1)-faces.
///
/// threads = 0 resolves to the FRC_THREADS environment variable, falling back
/// to the hardware thread count. The output order is identical for any thread
/// count.
Filtration enumerate_vr_filtration(const DistanceMatrix& dist, int d_max, double max_dist,
                                   int threads = 0);

/// Number of enumeration workers that enumerate_vr_filtration(..., threads)
/// would actually use.
int resolve_enumeration_threads(int requested);

}  // namespace frc
