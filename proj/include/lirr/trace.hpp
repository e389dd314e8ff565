#pragma once

#include <ostream>
#include <string>

namespace lirr::trace {

// Optional diagnostic log. Null by default; the CLI points it at stderr
// under --trace. Single-threaded by contract (each solve owns its state).
inline std::ostream*& sink() {
  static std::ostream* s = nullptr;
  return s;
}

inline void log(const std::string& msg) {
  if (sink()) *sink() << msg << "\n";
}

struct Scoped {
  explicit Scoped(std::ostream* os) : prev(sink()) { sink() = os; }
  ~Scoped() { sink() = prev; }
  std::ostream* prev;
};

}  // namespace lirr::trace
