#pragma once

#include <cstdint>

namespace hoboss::succinct {

// Per-thread tally of primitive invocations (rank, select, access and the
// parenthesis searches). Used to check that composite navigation performs a
// constant number of primitive calls, independently of wall-clock timing.
struct PrimitiveCounter {
    std::uint64_t calls = 0;
};

inline thread_local PrimitiveCounter primitive_counter;

inline void count_primitive() noexcept { ++primitive_counter.calls; }

class ScopedPrimitiveCount {
  public:
    ScopedPrimitiveCount() noexcept : start_(primitive_counter.calls) {}
    std::uint64_t elapsed() const noexcept { return primitive_counter.calls - start_; }

  private:
    std::uint64_t start_;
};

}  // namespace hoboss::succinct
