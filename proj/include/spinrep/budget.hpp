#pragma once

#include <cstddef>
#include <cstdint>

namespace spinrep {

struct Budget {
  std::uint64_t weyl_order = 1'000'000;   // largest Weyl group to enumerate
  std::size_t terms = 5'000'000;          // largest character support
  std::size_t hyperplanes = 64;           // largest positive half for chamber search
};

}  // namespace spinrep
