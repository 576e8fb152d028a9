#include "spectra/parallel.hpp"

namespace spectra {

namespace {
std::atomic<unsigned> configured{1};
}

void set_thread_count(unsigned n) { configured = n; }

unsigned thread_count() {
  unsigned n = configured;
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

}  // namespace spectra
