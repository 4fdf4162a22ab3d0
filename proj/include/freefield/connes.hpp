#ifndef FREEFIELD_CONNES_HPP
#define FREEFIELD_CONNES_HPP

#include <map>

#include "freefield/automaton.hpp"
#include "freefield/expr.hpp"
#include "freefield/word.hpp"

namespace freefield {

/// An edge {p(ω), ω} of the Cayley graph, identified by its longer
/// endpoint ω ≠ 1.
struct CayleyEdge {
    GroupElement omega;
    explicit CayleyEdge(GroupElement w);
};

/// Finite window onto a group series: coefficients on all elements of
/// length <= radius.  Arithmetic drops anything that leaves the window.
class TruncatedSeries {
public:
    using Map = std::map<GroupElement, Rational, LenLexLess>;

    explicit TruncatedSeries(std::size_t radius) : radius_(radius) {}

    std::size_t radius() const { return radius_; }
    const Map& terms() const { return coeffs_; }
    Rational coefficient(const GroupElement& g) const;
    bool empty() const { return coeffs_.empty(); }

    void add(const GroupElement& g, const Rational& c);
    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries scaled(const Rational& c) const;
    /// Group Cauchy product, truncated to min(radius, other.radius).
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    /// 1 + a + a^2 + ...; errors with "star undefined" when (a, 1) != 0 or
    /// the iteration fails to leave the window within the cap.
    TruncatedSeries star(std::size_t iteration_cap = 0) const;

    bool equal_on_ball(const TruncatedSeries& other, std::size_t window) const;

private:
    std::size_t radius_;
    Map coeffs_;
};

/// Coefficients of r on all reduced words of length <= radius.
TruncatedSeries truncated_from_representation(const LinearRepresentation& r, std::size_t radius);

/// The translate ω̄ ∘ a over reduced factorizations; for simplification-free
/// r this is the word-level right translate by the word of ω̄.
LinearRepresentation group_translate(const LinearRepresentation& r, const GroupElement& omega_bar);

/// F_a{p(ω), ω} = (ω̄ ∘ a)·(x̄ − 1), x the last letter of ω.  Output stays
/// simplification-free: the translate support never ends in x.
LinearRepresentation connes_apply(const LinearRepresentation& r, const CayleyEdge& e);

/// Direct-formula evaluation on a truncated window (independent of the
/// representation route): F_a{p(ω),ω} = Σ_{ω̄ ∈ suff(α)} a_α α (p(ω) − ω).
TruncatedSeries connes_apply_truncated(const TruncatedSeries& a, const CayleyEdge& e);

/// Exact rank of F_a restricted to edges: per letter x, the final-vector
/// space {μ(ω̄)ρ : ω reduced ending in x} is closed off by a worklist over
/// reduced continuations; each vector maps to the series (λ, μ, v)(x̄ − 1)
/// inside one shared enlarged representation, and the rank is that of the
/// final vectors modulo the observability kernel.
std::size_t connes_rank_exact(const LinearRepresentation& r);

struct TruncatedRank {
    std::size_t rank_at_depth;      // edges with l(ω) <= depth
    std::size_t rank_at_depth_plus; // edges with l(ω) <= depth + 1
    bool stabilized() const { return rank_at_depth == rank_at_depth_plus; }
};

/// Certified lower bound: rank of the coefficient matrix of F_a over all
/// edges with l(ω) <= depth, coefficients on the ball l <= window.
TruncatedRank connes_rank_truncated(const LinearRepresentation& r, std::size_t depth,
                                    std::size_t window);

/// Rank of the group-level Hankel operator ∘a (translates by ω ≠ 1).
std::size_t group_hankel_rank(const LinearRepresentation& r);

/// Truncated verification of F_{ab} = F_a b + a F_b on all edges with
/// l(ω) <= depth (coefficients compared on the same ball), plus
/// F_{a*} = a* F_a a* when a's star is well-defined on the window
/// ((a,1) = 0); errors with "star undefined" when check_star is forced on
/// an a with (a, 1) != 0.
bool verify_connes_identities(const LinearRepresentation& a, const LinearRepresentation& b,
                              std::size_t depth);
bool verify_connes_star_identity(const LinearRepresentation& a, std::size_t depth);

} // namespace freefield

#endif
