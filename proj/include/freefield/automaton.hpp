#ifndef FREEFIELD_AUTOMATON_HPP
#define FREEFIELD_AUTOMATON_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "freefield/matrix.hpp"
#include "freefield/rational.hpp"
#include "freefield/word.hpp"

namespace freefield {

using State = std::uint32_t;
using EdgeId = std::uint32_t;

/// Where an edge came from: user construction, or a bypass added by the
/// reduction closure (recording the triple of edges that derived it).
struct EdgeProvenance {
    enum class Kind { Original, Bypass } kind = Kind::Original;
    EdgeId e0 = 0, e1 = 0, e2 = 0;

    static EdgeProvenance original() { return {}; }
    static EdgeProvenance bypass(EdgeId a, EdgeId b, EdgeId c) {
        return {Kind::Bypass, a, b, c};
    }
};

struct Edge {
    EdgeId id;
    State src, dst;
    Letter letter;
    Rational weight; // nonzero
    EdgeProvenance provenance;
};

/// A field-weighted automaton over the doubled alphabet.  Parallel edges
/// are legal and kept distinct (the closure needs edge identity); the
/// effective transition weight is their sum, taken in to_representation.
class WeightedAutomaton {
public:
    WeightedAutomaton() = default;
    WeightedAutomaton(std::size_t n_generators, std::size_t states)
        : n_generators_(n_generators), state_count_(states) {}

    std::size_t n_generators() const { return n_generators_; }
    std::size_t state_count() const { return state_count_; }

    State add_state();
    EdgeId add_edge(State src, State dst, Letter letter, Rational weight,
                    EdgeProvenance prov = EdgeProvenance::original());

    void add_initial(State s, const Rational& w);
    void add_final(State s, const Rational& w);

    const std::vector<Edge>& edges() const { return edges_; }
    const std::map<State, Rational>& initial() const { return initial_; }
    const std::map<State, Rational>& final_weights() const { return final_; }

    Rational initial_weight(State s) const;
    Rational final_weight(State s) const;

    /// Sum of initial(q) * final(q): the coefficient of the empty word.
    Rational empty_word_coefficient() const;

private:
    std::size_t n_generators_ = 0;
    std::size_t state_count_ = 0;
    std::vector<Edge> edges_;
    std::map<State, Rational> initial_, final_;
};

/// Removes states that are not both accessible and co-accessible
/// (renumbering the survivors; edge ids are reassigned densely).
WeightedAutomaton trim(const WeightedAutomaton& a);

// Word-level rational constructions (no group reduction happens here).
WeightedAutomaton aut_scalar(std::size_t n_generators, const Rational& c);
WeightedAutomaton aut_gen(std::size_t n_generators, Letter l);
WeightedAutomaton aut_sum(const WeightedAutomaton& a, const WeightedAutomaton& b);
WeightedAutomaton aut_product(const WeightedAutomaton& a, const WeightedAutomaton& b);
/// Requires a proper argument: zero coefficient on the empty word.
WeightedAutomaton aut_star(const WeightedAutomaton& a);
WeightedAutomaton aut_scale(const Rational& c, const WeightedAutomaton& a);

/// A triple (lambda, mu, rho) with (S, w) = lambda mu(w) rho; mu is indexed
/// by letter code over the doubled alphabet.
struct LinearRepresentation {
    std::size_t n_generators = 0;
    std::size_t dim = 0;
    QVector lambda;             // 1 x dim
    std::vector<QMatrix> mu;    // 2 * n_generators many dim x dim matrices
    QVector rho;                // dim x 1

    const QMatrix& mu_of(const Letter& l) const { return mu[l.code()]; }
    QMatrix mu_word(const Word& w) const;
};

LinearRepresentation to_representation(const WeightedAutomaton& a);
WeightedAutomaton representation_to_automaton(const LinearRepresentation& r);

Rational coefficient(const LinearRepresentation& r, const Word& w);

/// Tensor construction: coefficients multiply pointwise.
LinearRepresentation hadamard(const LinearRepresentation& r, const LinearRepresentation& t);

/// (lambda, mu, mu(u) rho): coefficient(result, w) = coefficient(r, w u).
LinearRepresentation right_translate(const LinearRepresentation& r, const Word& u);

/// Equivalent representation of minimal dimension (= Hankel rank):
/// forward-space restriction followed by the dual backward restriction,
/// both by worklist over letters with exact elimination.
LinearRepresentation schutzenberger_reduce(const LinearRepresentation& r);

bool is_zero(const LinearRepresentation& r);
/// Independent route: lambda mu(w) rho = 0 for every |w| < dim.
bool is_zero_by_enumeration(const LinearRepresentation& r);

std::size_t hankel_rank_word(const LinearRepresentation& r);

// Representation-level rational operations (used by the Connes module and
// tests; the compile pipeline works on automata).
LinearRepresentation rep_sum(const LinearRepresentation& a, const LinearRepresentation& b);
LinearRepresentation rep_product(const LinearRepresentation& a, const LinearRepresentation& b);
LinearRepresentation rep_scale(const Rational& c, const LinearRepresentation& a);
LinearRepresentation rep_difference(const LinearRepresentation& a, const LinearRepresentation& b);

/// Forward space span{lambda mu(w)} as a row space (observability data).
RowSpace forward_space(const LinearRepresentation& r);
/// Backward space span{mu(w) rho} as a row space of transposed columns.
RowSpace backward_space(const LinearRepresentation& r);

} // namespace freefield

#endif
