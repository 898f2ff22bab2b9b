#include "trid/config.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace trid {

Index checked_pow(Index n, Index m) {
  Index r = 1;
  for (Index i = 0; i < m; ++i) {
    if (n != 0 && r > std::numeric_limits<Index>::max() / n) return -1;
    r *= n;
  }
  return r;
}

Caps Caps::defaults() { return Caps{}; }

namespace {

void read_env(const char* name, Index& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0)
    throw PreconditionError(std::string(name) + " must be a positive integer");
  slot = v;
}

}  // namespace

Caps Caps::from_environment() {
  Caps c;
  read_env("TRID_VERTEX_CAP", c.vertex_cap);
  read_env("TRID_EIGEN_CAP", c.eigen_cap);
  read_env("TRID_CLIQUE_CAP", c.clique_cap);
  read_env("TRID_ASSOC_CAP", c.assoc_cap);
  read_env("TRID_EXACT_CAP", c.exact_cap);
  return c;
}

void require_within(Index value, Index cap, const std::string& what) {
  if (value < 0 || value > cap)
    throw CapExceeded(what + " (" +
                      (value < 0 ? std::string("overflow")
                                 : std::to_string(value)) +
                      ") exceeds cap " + std::to_string(cap));
}

}  // namespace trid
