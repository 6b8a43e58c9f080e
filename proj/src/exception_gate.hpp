#pragma once

#include <exception>
#include <mutex>

namespace ctsurf::detail {

// Exceptions must not unwind out of an OpenMP region; wrap loop bodies and
// rethrow the first captured one after the region.
class ExceptionGate {
  public:
    template <typename F>
    void run(F&& f) noexcept {
        try {
            f();
        } catch (...) {
            const std::lock_guard<std::mutex> lock(mu_);
            if (!first_) first_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (first_) std::rethrow_exception(first_);
    }

  private:
    std::mutex mu_;
    std::exception_ptr first_;
};

}  // namespace ctsurf::detail
