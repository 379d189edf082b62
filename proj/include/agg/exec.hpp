#pragma once

namespace agg {

/// Selects between the OpenMP kernel and the serial reference loop.
/// Both produce identical results; the serial path is kept for testing
/// and benchmarking.
enum class Exec { serial, parallel };

/// Caps the OpenMP team size used by parallel kernels. Non-positive
/// values leave the runtime default in place.
void set_jobs(int jobs);

/// Current OpenMP team size (1 when built without OpenMP).
int jobs();

}  // namespace agg
