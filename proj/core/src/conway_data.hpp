#pragma once

#include <cstdint>
#include <vector>

namespace trisec::detail {

// Conway polynomial c0..cm for (p, m), or an empty vector when the pair is
// outside the embedded table.
std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t m);

}
