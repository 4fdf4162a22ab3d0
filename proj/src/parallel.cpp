#include "freefield/parallel.hpp"

#include <atomic>

#include "freefield/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace freefield {
namespace kernels {

namespace {

constexpr const char* kWorkLimitMessage = "bound exceeded — supply --bound";

/// DFS over reduced-word extensions of (w, v = lambda mu(w)).
void scan_subtree(const LinearRepresentation& r, Word& w, const QVector& v, std::size_t radius,
                  std::vector<BallEntry>& out, std::size_t work_limit,
                  std::atomic<std::size_t>& evals, bool& over_limit) {
    if (over_limit) return;
    std::size_t seen = evals.fetch_add(1) + 1;
    if (work_limit && seen > work_limit) {
        over_limit = true;
        return;
    }
    Rational c = dot(v, r.rho);
    if (c != 0) out.push_back(BallEntry{GroupElement::from_reduced(w), std::move(c)});
    if (w.size() == radius) return;
    for (std::uint32_t code = 0; code < 2 * r.n_generators; ++code) {
        Letter l = Letter::from_code(code);
        if (!w.empty() && l == w.back().inverse()) continue;
        QVector next = row_times_matrix(v, r.mu[code]);
        if (is_zero_vector(next)) continue;
        w.push_back(l);
        scan_subtree(r, w, next, radius, out, work_limit, evals, over_limit);
        w.pop_back();
        if (over_limit) return;
    }
}

} // namespace

std::vector<BallEntry> ball_coefficients_serial(const LinearRepresentation& r, std::size_t radius,
                                                std::size_t work_limit, std::size_t* evaluations) {
    std::vector<BallEntry> out;
    std::atomic<std::size_t> evals{0};
    bool over_limit = false;
    Word w;
    scan_subtree(r, w, r.lambda, radius, out, work_limit, evals, over_limit);
    if (evaluations) *evaluations = evals.load();
    if (over_limit) throw BudgetError(kWorkLimitMessage);
    return out;
}

std::vector<BallEntry> ball_coefficients_parallel(const LinearRepresentation& r, std::size_t radius,
                                                  std::size_t work_limit,
                                                  std::size_t* evaluations) {
    std::vector<BallEntry> root_out;
    std::atomic<std::size_t> evals{0};
    bool over_limit = false;

    // ε handled up front; depth-one subtrees are independent tasks.
    {
        std::size_t seen = evals.fetch_add(1) + 1;
        if (work_limit && seen > work_limit) throw BudgetError(kWorkLimitMessage);
        Rational c = dot(r.lambda, r.rho);
        if (c != 0) root_out.push_back(BallEntry{GroupElement(), std::move(c)});
    }
    std::size_t tasks = 2 * r.n_generators;
    std::vector<std::vector<BallEntry>> per_task(tasks);
    std::vector<char> task_over(tasks, 0);
    if (radius > 0) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::size_t code = 0; code < tasks; ++code) {
            QVector v = row_times_matrix(r.lambda, r.mu[code]);
            if (is_zero_vector(v)) continue;
            Word w{Letter::from_code(static_cast<std::uint32_t>(code))};
            bool over = false;
            scan_subtree(r, w, v, radius, per_task[code], work_limit, evals, over);
            if (over) task_over[code] = 1;
        }
    }
    for (std::size_t code = 0; code < tasks; ++code) {
        if (task_over[code]) over_limit = true;
        root_out.insert(root_out.end(), per_task[code].begin(), per_task[code].end());
    }
    if (evaluations) *evaluations = evals.load();
    if (over_limit) throw BudgetError(kWorkLimitMessage);
    return root_out;
}

std::vector<BallEntry> ball_coefficients(const LinearRepresentation& r, std::size_t radius,
                                         std::size_t work_limit, std::size_t* evaluations) {
#ifdef _OPENMP
    return ball_coefficients_parallel(r, radius, work_limit, evaluations);
#else
    return ball_coefficients_serial(r, radius, work_limit, evaluations);
#endif
}

std::size_t magnus_min_index_serial(const std::vector<BallEntry>& candidates) {
    if (candidates.empty()) throw DomainError("magnus minimum of an empty candidate list");
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (magnus_compare(candidates[i].element, candidates[best].element) == Order::Less)
            best = i;
    return best;
}

std::size_t magnus_min_index_parallel(const std::vector<BallEntry>& candidates) {
    if (candidates.empty()) throw DomainError("magnus minimum of an empty candidate list");
    std::size_t n = candidates.size();
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::vector<std::size_t> local(static_cast<std::size_t>(threads), n);
#ifdef _OPENMP
    // Exceptions must not escape the parallel region; carry the first one out.
    std::exception_ptr error;
#pragma omp parallel num_threads(threads)
    {
        std::size_t best = n;
#pragma omp for schedule(static)
        for (std::size_t i = 0; i < n; ++i) {
            try {
                if (best == n ||
                    magnus_compare(candidates[i].element, candidates[best].element) == Order::Less)
                    best = i;
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
        local[static_cast<std::size_t>(omp_get_thread_num())] = best;
    }
    if (error) std::rethrow_exception(error);
#else
    local[0] = magnus_min_index_serial(candidates);
#endif
    std::size_t best = n;
    for (std::size_t b : local) {
        if (b == n) continue;
        if (best == n || magnus_compare(candidates[b].element, candidates[best].element) == Order::Less)
            best = b;
    }
    return best;
}

std::size_t magnus_min_index(const std::vector<BallEntry>& candidates) {
#ifdef _OPENMP
    return magnus_min_index_parallel(candidates);
#else
    return magnus_min_index_serial(candidates);
#endif
}

} // namespace kernels
} // namespace freefield
