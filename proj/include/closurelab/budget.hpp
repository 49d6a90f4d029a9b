#ifndef CLOSURELAB_BUDGET_HPP_
#define CLOSURELAB_BUDGET_HPP_

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>

namespace closurelab {

  // Node and wall-clock limits shared by the search routines. Exceeding
  // either raises BudgetExceeded; results are never silently truncated.
  class Budget {
   public:
    static constexpr std::uint64_t default_max_nodes = 500'000'000;

    explicit Budget(std::uint64_t max_nodes = default_max_nodes,
                    double        max_seconds = 0.0);

    Budget(Budget const&)            = delete;
    Budget& operator=(Budget const&) = delete;

    // Records `n` search nodes and checks both limits.
    void charge(std::uint64_t n = 1);

    std::uint64_t nodes_used() const noexcept {
      return _nodes.load(std::memory_order_relaxed);
    }
    std::uint64_t max_nodes() const noexcept {
      return _max_nodes;
    }
    double max_seconds() const noexcept {
      return _max_seconds;
    }
    std::uint64_t elapsed_ms() const;

   private:
    std::uint64_t                         _max_nodes;
    double                                _max_seconds;
    std::atomic<std::uint64_t>            _nodes{0};
    std::chrono::steady_clock::time_point _start;
  };

  struct SearchOptions {
    Budget*  budget  = nullptr;  // nullptr: default limits, private counter
    unsigned workers = 1;
  };

  // Largest degree accepted by stabilizer chain construction (default 5000).
  std::size_t max_degree() noexcept;
  void        set_max_degree(std::size_t n) noexcept;

  namespace detail {
    // Resolves opts.budget, falling back to `local`.
    inline Budget& budget_of(SearchOptions const& opts, Budget& local) {
      return opts.budget != nullptr ? *opts.budget : local;
    }
  }  // namespace detail

}  // namespace closurelab

#endif  // CLOSURELAB_BUDGET_HPP_
