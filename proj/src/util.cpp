#include "gwop/util.hpp"

#include <cstdlib>

namespace gwop {

int thread_budget() {
  const char* env = std::getenv("GW_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || v < 1) return 1;
  return static_cast<int>(v);
}

}  // namespace gwop
