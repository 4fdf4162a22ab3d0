#ifndef FREEFIELD_IO_HPP
#define FREEFIELD_IO_HPP

#include <string>

#include <json.hpp>

#include "freefield/automaton.hpp"
#include "freefield/word.hpp"

namespace freefield {

/// Schema: {"alphabet":[names...], "states":N, "initial":[[state,"p/q"]...],
/// "final":[[state,"p/q"]...], "edges":[[src,"letter",dst,"p/q"]...]}.
/// Letters are generator names, inverses spelled x' (x^-1 accepted on read).
nlohmann::json automaton_to_json(const WeightedAutomaton& a, const Alphabet& alphabet);
WeightedAutomaton automaton_from_json(const nlohmann::json& j, Alphabet* alphabet_out = nullptr);

/// GraphViz export: initial states marked with an incoming arrow, final
/// states doubly circled, bypass edges dashed.
std::string automaton_to_dot(const WeightedAutomaton& a, const Alphabet& alphabet);

} // namespace freefield

#endif
