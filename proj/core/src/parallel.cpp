#include "resiclose/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace resiclose {

std::size_t resolve_thread_count(const ExecutionOptions& options) {
  if (options.threads > 0) return options.threads;
  if (const char* env = std::getenv("RESICLOSE_THREADS")) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc{} && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace resiclose
