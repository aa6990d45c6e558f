#include "entrokit/threads.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace entrokit {

int effective_threads() {
  if (const char* env = std::getenv("ENTROKIT_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (...) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace entrokit
