#include "crank/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace crank {

namespace {
std::atomic<unsigned> g_override{0};

unsigned from_env() {
  const char* s = std::getenv("CRANK_THREADS");
  if (!s || !*s) return 0;
  try {
    long v = std::stol(s);
    return v > 0 ? static_cast<unsigned>(v) : 0;
  } catch (...) {
    return 0;
  }
}
}  // namespace

unsigned worker_count() {
  if (unsigned o = g_override.load()) return o;
  if (unsigned e = from_env()) return e;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void set_worker_count(unsigned n) { g_override.store(n); }

}  // namespace crank
