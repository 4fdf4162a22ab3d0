#ifndef FREEFIELD_COMPILE_HPP
#define FREEFIELD_COMPILE_HPP

#include "freefield/automaton.hpp"
#include "freefield/expr.hpp"

namespace freefield {

/// Compiles a *-rational expression to a weighted automaton recognizing,
/// word by word over the doubled alphabet, the series the expression
/// denotes over the free monoid (no group reduction).  Star children must
/// be proper (zero coefficient on the empty word); Inverse nodes are
/// rejected.
WeightedAutomaton expression_to_automaton(const ExprPtr& e, std::size_t n_generators);

/// State elimination (the direction opposite to the standard automaton
/// construction): returns a *-rational expression denoting a's word
/// series.  When every path of a is a reduced word, every concatenation in
/// the output stays reduced, i.e. the expression is without simplification.
ExprPtr automaton_to_expression(const WeightedAutomaton& a);

} // namespace freefield

#endif
