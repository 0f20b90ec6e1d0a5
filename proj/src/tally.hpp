#pragma once

#include <cstdint>

namespace fracspec {

// Operation counts collected while a TallyScope is active on the current
// thread. Kernels add whole loop trip counts at once, so the hot loops carry
// no per-iteration bookkeeping.
struct OpTally {
  std::uint64_t trig = 0;  // sin/cos evaluations
  std::uint64_t madd = 0;  // real multiply-adds
};

namespace tally {

inline thread_local OpTally* current = nullptr;

inline void add_trig(std::uint64_t n) noexcept {
  if (current != nullptr) current->trig += n;
}

inline void add_madd(std::uint64_t n) noexcept {
  if (current != nullptr) current->madd += n;
}

}  // namespace tally

class TallyScope {
 public:
  explicit TallyScope(OpTally& sink) noexcept : previous_(tally::current) { tally::current = &sink; }
  ~TallyScope() { tally::current = previous_; }

  TallyScope(const TallyScope&) = delete;
  TallyScope& operator=(const TallyScope&) = delete;

 private:
  OpTally* previous_;
};

}  // namespace fracspec
