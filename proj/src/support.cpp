#include "freefield/support.hpp"

#include "freefield/errors.hpp"
#include "freefield/parallel.hpp"

namespace freefield {

Integer jacob_bound(std::size_t n) {
    Integer product = 1;
    Integer binom = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        // C(n, i) from C(n, i-1)
        binom = binom * static_cast<unsigned long>(n - i + 1) / static_cast<unsigned long>(i);
        product *= binom + 1;
    }
    return product;
}

bool is_pseudo_regular(const QMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("pseudo-regularity needs a square matrix");
    return rank(m) == rank(m * m);
}

Word support_subword(const LinearRepresentation& r, const Word& w) {
    if (w.size() < r.dim) throw DomainError("support_subword requires |w| >= dim");
    if (coefficient(r, w) == 0) throw DomainError("support_subword requires w in the support");

    // Row vectors of the prefixes p_0 = eps, p_1, ..., p_{|w|}.
    std::vector<QVector> prefix_rows;
    prefix_rows.push_back(r.lambda);
    for (const Letter& l : w) prefix_rows.push_back(row_times_matrix(prefix_rows.back(), r.mu_of(l)));

    // Elimination tracking each reduced row as a combination of the
    // original prefix vectors, so the dependency comes out in the original
    // basis: lambda mu(p_i) = sum_{j<i} c_j lambda mu(p_j).
    std::vector<QVector> basis, combos;
    std::vector<std::size_t> pivots;
    const std::size_t m = prefix_rows.size();
    for (std::size_t i = 0; i < m; ++i) {
        QVector res = prefix_rows[i];
        QVector combo(m, Rational(0));
        combo[i] = 1;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            Rational f = res[pivots[k]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < r.dim; ++j) res[j] -= f * basis[k][j];
            for (std::size_t j = 0; j < m; ++j) combo[j] -= f * combos[k][j];
        }
        std::size_t p = 0;
        while (p < r.dim && res[p] == 0) ++p;
        if (p < r.dim) {
            Rational inv = 1 / res[p];
            for (Rational& x : res) x *= inv;
            for (Rational& x : combo) x *= inv;
            basis.push_back(std::move(res));
            combos.push_back(std::move(combo));
            pivots.push_back(p);
            continue;
        }
        // First dependent prefix found: 0 = sum_j combo[j] * prefix_rows[j]
        // with combo[i] = 1, i.e. prefix_rows[i] = sum_{j<i} (-combo[j]) ...
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        for (std::size_t j = 0; j < i; ++j) {
            if (combo[j] == 0) continue;
            Word candidate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
            candidate.insert(candidate.end(), suffix.begin(), suffix.end());
            if (coefficient(r, candidate) != 0) return candidate;
        }
        throw DomainError("inconsistent prefix dependency");
    }
    throw DomainError("no dependent prefix found; |w| >= dim should force one");
}

MinSupp min_supp(const SupportQuery& query) {
    const LinearRepresentation& r = query.rep;
    if (r.dim == 0) throw DomainError("zero series");

    std::size_t bound;
    if (query.bound_override) {
        bound = *query.bound_override;
    } else {
        Integer n = jacob_bound(query.rank ? query.rank : r.dim);
        // The scan is capped by work_limit anyway; clamping the radius only
        // avoids pointless depth bookkeeping for huge bounds.
        bound = n.fits_ulong_p() ? static_cast<std::size_t>(n.get_ui()) : query.work_limit;
    }
    std::size_t radius = bound == 0 ? 0 : bound - 1; // minimum has length < N

    auto candidates = kernels::ball_coefficients(r, radius, query.work_limit);
    if (candidates.empty())
        throw DomainError("inconsistent bound — no support element below the bound");
    std::size_t best = kernels::magnus_min_index(candidates);
    return MinSupp{candidates[best].element, candidates[best].value};
}

} // namespace freefield
