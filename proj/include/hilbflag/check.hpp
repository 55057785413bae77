#pragma once

// Always-on internal invariant checks. These guard combinatorial identities
// the construction relies on (cardinalities, uniqueness of obstruction
// elements, reachability of slide results); they must not compile out in
// Release builds, so plain assert() is not used.

#include <stdexcept>
#include <string>

namespace hilbflag {

[[noreturn]] inline void check_failure(const char* file, int line, const std::string& what) {
    throw std::logic_error(std::string(file) + ":" + std::to_string(line) +
                           ": invariant violated: " + what);
}

}  // namespace hilbflag

#define HF_CHECK(cond, what)                                      \
    do {                                                          \
        if (!(cond)) ::hilbflag::check_failure(__FILE__, __LINE__, (what)); \
    } while (0)
