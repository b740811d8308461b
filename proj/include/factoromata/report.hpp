#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace factoromata {

// Outcome of an exhaustive property sweep: how many cases ran and a
// human-readable line per violation (empty means the property held).
struct PropertyReport {
    std::uint64_t cases = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

}  // namespace factoromata
