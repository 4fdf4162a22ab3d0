#ifndef FREEFIELD_PARALLEL_HPP
#define FREEFIELD_PARALLEL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "freefield/automaton.hpp"
#include "freefield/magnus.hpp"
#include "freefield/word.hpp"

namespace freefield {
namespace kernels {

/// One nonzero coefficient of a representation on a reduced word.
struct BallEntry {
    GroupElement element;
    Rational value;
};

/// All nonzero coefficients of r on reduced words of length <= radius, in
/// DFS prefix order from ε.  Subtrees whose forward vector lambda mu(w)
/// vanishes are pruned (every extension is zero).  `evaluations`, when
/// given, accumulates the number of coefficient evaluations performed and
/// the scan throws BudgetError("bound exceeded — supply --bound") once it
/// passes work_limit (0 = unlimited).
///
/// The serial and parallel kernels return identical vectors; the parallel
/// kernel distributes the depth-one subtrees across OpenMP threads.
std::vector<BallEntry> ball_coefficients_serial(const LinearRepresentation& r, std::size_t radius,
                                                std::size_t work_limit = 0,
                                                std::size_t* evaluations = nullptr);
std::vector<BallEntry> ball_coefficients_parallel(const LinearRepresentation& r, std::size_t radius,
                                                  std::size_t work_limit = 0,
                                                  std::size_t* evaluations = nullptr);

/// Dispatches to the parallel kernel when OpenMP is enabled.
std::vector<BallEntry> ball_coefficients(const LinearRepresentation& r, std::size_t radius,
                                         std::size_t work_limit = 0,
                                         std::size_t* evaluations = nullptr);

/// Magnus-minimum of a candidate list (index of the least element).  The
/// order is total, so the fold is order-independent; the parallel kernel
/// reduces chunk-local minima.  Errors on an empty list.
std::size_t magnus_min_index_serial(const std::vector<BallEntry>& candidates);
std::size_t magnus_min_index_parallel(const std::vector<BallEntry>& candidates);
std::size_t magnus_min_index(const std::vector<BallEntry>& candidates);

} // namespace kernels
} // namespace freefield

#endif
