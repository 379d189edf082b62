#include "agg/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace agg {

void set_jobs(int jobs) {
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
}

int jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace agg
