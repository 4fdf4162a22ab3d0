#ifndef FREEFIELD_SIMPLIFY_HPP
#define FREEFIELD_SIMPLIFY_HPP

#include "freefield/automaton.hpp"
#include "freefield/expr.hpp"

namespace freefield {

/// Characteristic automaton of the reduced words: one start state plus one
/// "last letter read" state per letter; y leaves state(x) iff y is not the
/// inverse of x.  All 2n+1 states are final with weight 1.
WeightedAutomaton reduced_word_automaton(std::size_t n_generators);

struct ClosureOptions {
    /// Cap on total edge count; 0 selects 10 * states^2 * |doubled alphabet|.
    std::size_t max_edges = 0;
    /// Processes the worklist in reversed order; the closure is confluent,
    /// this exists so tests can exercise that.
    bool reverse_worklist = false;
};

/// Reduction-bypass closure: for every adjacent pair
/// p --(beta x)--> q --(gamma x̄)--> r and every edge o --(alpha y)--> p,
/// adds a parallel edge o --(alpha beta gamma) y--> r; an initial weight
/// alpha at p likewise adds an initial weight alpha beta gamma at r.  Every
/// derivation fires exactly once; new edges feed new derivations until none
/// remain.  Terminates for every well-defined input; the budget turns
/// divergent input into an error.
WeightedAutomaton fliess_closure(const WeightedAutomaton& a, const ClosureOptions& options = {});

/// Closure followed by the reduced-word filter, as an automaton whose paths
/// are all reduced words (used for expression extraction and DOT export).
WeightedAutomaton reduced_word_product_automaton(const WeightedAutomaton& a,
                                                 const ClosureOptions& options = {});

/// The group-level series of a: coefficient on each reduced word w equals
/// the group coefficient (a, w); zero on every non-reduced word.  Returned
/// Schützenberger-reduced.
LinearRepresentation remove_simplifications(const WeightedAutomaton& a,
                                            const ClosureOptions& options = {});

/// 0/1 automaton accepting a rational language L with supp(e) ⊆ L (reading
/// monomials as group elements), built by the structural recursion: union
/// for Sum, concatenation for Product, Kleene star for Star.
WeightedAutomaton support_envelope(const ExprPtr& e, std::size_t n_generators);

struct WellOrderOptions {
    std::size_t cycle_budget = 10000;
};

/// True iff every simple cycle label of the (trimmed) automaton reduces to
/// a group element strictly greater than 1 in the Magnus order.  Cycle
/// labels are rotation-invariant under the comparison, so any starting
/// vertex is fine; products and conjugates of positive labels stay
/// positive, so simple cycles suffice for all closed paths.
bool check_well_ordered(const WeightedAutomaton& a, const WellOrderOptions& options = {});

} // namespace freefield

#endif
