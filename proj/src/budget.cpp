#include "closurelab/budget.hpp"

#include <string>

#include "closurelab/error.hpp"

namespace closurelab {

  namespace {
    std::atomic<std::size_t> max_degree_{5000};
  }

  Budget::Budget(std::uint64_t max_nodes, double max_seconds)
      : _max_nodes(max_nodes),
        _max_seconds(max_seconds),
        _start(std::chrono::steady_clock::now()) {}

  void Budget::charge(std::uint64_t n) {
    auto before = _nodes.fetch_add(n, std::memory_order_relaxed);
    auto after  = before + n;
    if (after > _max_nodes) {
      throw BudgetExceeded("node budget of " + std::to_string(_max_nodes)
                           + " exceeded");
    }
    // the clock is consulted every 1024 nodes
    if (_max_seconds > 0 && (before >> 10) != (after >> 10)
        && static_cast<double>(elapsed_ms()) > _max_seconds * 1000.0) {
      throw BudgetExceeded("time budget of " + std::to_string(_max_seconds)
                           + " s exceeded");
    }
  }

  std::uint64_t Budget::elapsed_ms() const {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - _start)
            .count());
  }

  std::size_t max_degree() noexcept {
    return max_degree_.load();
  }

  void set_max_degree(std::size_t n) noexcept {
    max_degree_.store(n);
  }

}  // namespace closurelab
