// The gate: one line per criterion, nonzero exit on any failure.

#include <cstdlib>
#include <iostream>

#include "trisec/parallel.hpp"
#include "trisec/verify.hpp"

int main(int argc, char** argv) {
  trisec::VerifyOptions opts;
  opts.workers = trisec::default_workers();
  if (argc > 1) opts.workers = unsigned(std::strtoul(argv[1], nullptr, 10));

  bool ok = true;
  int index = 0;
  for (const auto& r : trisec::run_all_checks(opts)) {
    ++index;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << index << " ("
              << r.name << ")";
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n" << std::flush;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
