#ifndef FREEFIELD_SUPPORT_HPP
#define FREEFIELD_SUPPORT_HPP

#include <optional>

#include "freefield/automaton.hpp"
#include "freefield/matrix.hpp"
#include "freefield/word.hpp"

namespace freefield {

/// N(n) = prod_{i=1..n} [ C(n,i) + 1 ]: support words at least this long
/// contain a factor u_1...u_n with every u_i > 1, so the minimum of a
/// well-ordered support has length < N(n).
Integer jacob_bound(std::size_t n);

/// True iff M lies in a subgroup of the multiplicative semigroup, i.e. is
/// similar to diag(g, 0) with g invertible; decided by rank M = rank M^2.
bool is_pseudo_regular(const QMatrix& m);

/// For w in supp(r) with |w| >= dim(r): produces a strict subword of w that
/// is still in the support, by the prefix-dependency substitution.  The
/// first linearly dependent prefix row is eliminated and the first j with
/// nonzero substituted coefficient is chosen, so the output is
/// deterministic.
Word support_subword(const LinearRepresentation& r, const Word& w);

struct SupportQuery {
    LinearRepresentation rep; // simplification-free, equal to its own reduction
    std::size_t rank = 0;     // its (reduced) dimension
    std::optional<std::size_t> bound_override;
    std::size_t work_limit = 1'000'000; // coefficient evaluations
};

struct MinSupp {
    GroupElement element;
    Rational coefficient;
};

/// Magnus-minimal element of a well-ordered rational support and its
/// coefficient.  Candidates are the support elements of length < N (N the
/// Jacob bound unless overridden), enumerated with forward-vector pruning;
/// the minimum is the pairwise Magnus comparison over the candidates.
MinSupp min_supp(const SupportQuery& query);

} // namespace freefield

#endif
