#pragma once

#include <stdexcept>
#include <string>

namespace shiftforge {

// Raised on malformed or inconsistent user input (bad words, unknown
// generators, dangling references in spec documents).  Maps to exit code 2
// at the tool boundary.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an internal invariant is violated.  Maps to exit code 3.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Shared tri-state answer.  "Unknown" doubles as "incomparable" for
// descriptor-level predicates; callers choose the rendering.
enum class Tri { Yes, No, Unknown };

inline std::string tri_str(Tri t, const char* unknown_word = "unknown") {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return unknown_word;
  }
}

}  // namespace shiftforge
