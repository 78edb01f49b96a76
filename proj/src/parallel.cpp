#include "cubic/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cubic {

namespace {

int resolve_worker_count() {
  const char* env = std::getenv("CUBIC_ORDERS_THREADS");
  long requested = 0;  // 0 = auto
  if (env && *env) {
    char* end = nullptr;
    requested = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || requested < 0) requested = 0;
  }
  if (requested == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    requested = hw == 0 ? 1 : static_cast<long>(hw);
  }
  if (requested > 64) requested = 64;
  return static_cast<int>(requested);
}

}  // namespace

int worker_count() {
  static const int count = resolve_worker_count();
  return count;
}

}  // namespace cubic
