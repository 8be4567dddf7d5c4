#pragma once

#include <cstdint>

namespace fomc {

// Instrumented cost model for the uniformity checks. Oracle implementations
// charge their index arithmetic here: a quotient/remainder or shift over an
// integer of b bits costs b, a table lookup costs 1. A WorkScope activates
// the meter for the current thread; nested scopes restore the outer one.
class WorkMeter {
public:
  static WorkMeter*& active() {
    thread_local WorkMeter* current = nullptr;
    return current;
  }

  static void charge(uint64_t units) {
    if (WorkMeter* m = active()) m->total_ += units;
  }

  uint64_t total() const { return total_; }
  void reset() { total_ = 0; }

private:
  uint64_t total_ = 0;
};

class WorkScope {
public:
  explicit WorkScope(WorkMeter& m) : prev_(WorkMeter::active()) { WorkMeter::active() = &m; }
  ~WorkScope() { WorkMeter::active() = prev_; }
  WorkScope(const WorkScope&) = delete;
  WorkScope& operator=(const WorkScope&) = delete;

private:
  WorkMeter* prev_;
};

namespace idx {

inline int bit_length(int64_t v) {
  uint64_t u = v < 0 ? static_cast<uint64_t>(-v) : static_cast<uint64_t>(v);
  int n = 0;
  while (u) {
    ++n;
    u >>= 1;
  }
  return n;
}

// Quotient and remainder of nonnegative index arithmetic, charged at the
// dividend's bit length.
inline void divmod(int64_t a, int64_t b, int64_t& q, int64_t& r) {
  WorkMeter::charge(static_cast<uint64_t>(bit_length(a)) + 1);
  q = a / b;
  r = a % b;
}

inline int64_t shr(int64_t a, int sh) {
  WorkMeter::charge(static_cast<uint64_t>(bit_length(a)) + 1);
  return a >> sh;
}

inline int64_t shl(int64_t a, int sh) {
  WorkMeter::charge(static_cast<uint64_t>(bit_length(a)) + static_cast<uint64_t>(sh) + 1);
  return a << sh;
}

// Constant-time finite table lookup.
inline void lookup() { WorkMeter::charge(1); }

}  // namespace idx

}  // namespace fomc
