#pragma once

#include "heckelab/projective.hpp"

namespace heckelab {

/// Fills the KL memo for every element, one length level at a time, with
/// up to `jobs` worker threads per level.
void compute_all_kl(const KLBasis& kl, unsigned jobs = 1);

/// Fills the projective memo in decreasing length waves.
void compute_all_projective(const ProjectiveBasis& proj, unsigned jobs = 1);

}  // namespace heckelab
