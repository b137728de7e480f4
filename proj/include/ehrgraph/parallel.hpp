// Worker-count policy for the parallel kernels.
//
// EHRGRAPH_THREADS caps parallelism globally; 0 means strictly sequential.
// Every parallel kernel has a serial counterpart and must produce an
// identical result regardless of schedule.
#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ehrgraph {

inline int worker_count() {
#ifdef _OPENMP
    if (const char* env = std::getenv("EHRGRAPH_THREADS")) {
        int n = std::atoi(env);
        if (n <= 0) return 1;
        return n;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace ehrgraph
