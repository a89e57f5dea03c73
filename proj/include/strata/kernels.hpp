#pragma once

// Batch kernels with two interchangeable implementations. The _serial forms
// are the reference; the _parallel forms split independent items across
// OpenMP threads and must return bit-identical results.

#include <vector>

#include "strata/braid_word.hpp"
#include "strata/config_loop.hpp"
#include "strata/garside.hpp"

namespace strata::kernels {

std::vector<GarsideForm> normal_forms_serial(const std::vector<BraidWord>& words);
std::vector<GarsideForm> normal_forms_parallel(const std::vector<BraidWord>& words);

/// det[x_1 - x_0, ..., x_n - x_0] per frame; requires k = n + 1.
std::vector<Complex> frame_determinants_serial(const std::vector<Frame>& frames, int n);
std::vector<Complex> frame_determinants_parallel(const std::vector<Frame>& frames, int n);

/// Singular values (descending) of the (k-1)×n matrix of differences
/// p_j - p_0, one vector per frame.
std::vector<std::vector<double>> frame_singular_values_serial(const std::vector<Frame>& frames);
std::vector<std::vector<double>> frame_singular_values_parallel(const std::vector<Frame>& frames);

/// Threads the parallel kernels will use.
int max_threads();

}  // namespace strata::kernels
