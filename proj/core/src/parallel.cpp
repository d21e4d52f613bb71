#include "trisec/parallel.hpp"

namespace trisec {

unsigned default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  return n > 64 ? 64 : n;
}

}
