#include "freefield/io.hpp"

#include <sstream>

#include "freefield/errors.hpp"

namespace freefield {

namespace {

Letter letter_from_name(const std::string& text, const Alphabet& alphabet) {
    std::string base = text;
    bool barred = false;
    if (base.size() > 1 && base.back() == '\'') {
        barred = true;
        base.pop_back();
    } else if (base.size() > 3 && base.compare(base.size() - 3, 3, "^-1") == 0) {
        barred = true;
        base.resize(base.size() - 3);
    }
    std::size_t idx = alphabet.find(base);
    if (idx == alphabet.size()) throw ParseError("unknown letter name: " + text, 0);
    return Letter(static_cast<std::uint32_t>(idx), barred);
}

} // namespace

nlohmann::json automaton_to_json(const WeightedAutomaton& a, const Alphabet& alphabet) {
    if (alphabet.size() != a.n_generators())
        throw DomainError("alphabet size does not match the automaton");
    nlohmann::json j;
    j["alphabet"] = alphabet.names();
    j["states"] = a.state_count();
    nlohmann::json initial = nlohmann::json::array();
    for (const auto& [q, w] : a.initial())
        initial.push_back({q, rational_to_string(w)});
    nlohmann::json final_states = nlohmann::json::array();
    for (const auto& [q, w] : a.final_weights())
        final_states.push_back({q, rational_to_string(w)});
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : a.edges())
        edges.push_back(
            {e.src, alphabet.letter_to_string(e.letter), e.dst, rational_to_string(e.weight)});
    j["initial"] = std::move(initial);
    j["final"] = std::move(final_states);
    j["edges"] = std::move(edges);
    return j;
}

WeightedAutomaton automaton_from_json(const nlohmann::json& j, Alphabet* alphabet_out) {
    if (!j.contains("alphabet") || !j.contains("states"))
        throw ParseError("automaton JSON needs \"alphabet\" and \"states\"", 0);
    Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
    WeightedAutomaton a(alphabet.size(), j.at("states").get<std::size_t>());
    for (const auto& entry : j.value("edges", nlohmann::json::array())) {
        State src = entry.at(0).get<State>();
        Letter l = letter_from_name(entry.at(1).get<std::string>(), alphabet);
        State dst = entry.at(2).get<State>();
        a.add_edge(src, dst, l, parse_rational(entry.at(3).get<std::string>()));
    }
    for (const auto& entry : j.value("initial", nlohmann::json::array()))
        a.add_initial(entry.at(0).get<State>(), parse_rational(entry.at(1).get<std::string>()));
    for (const auto& entry : j.value("final", nlohmann::json::array()))
        a.add_final(entry.at(0).get<State>(), parse_rational(entry.at(1).get<std::string>()));
    if (alphabet_out) *alphabet_out = std::move(alphabet);
    return a;
}

std::string automaton_to_dot(const WeightedAutomaton& a, const Alphabet& alphabet) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (const auto& [q, w] : a.final_weights()) {
        out << "  " << q << " [shape=doublecircle";
        if (w != 1) out << ", xlabel=\"" << rational_to_string(w) << "\"";
        out << "];\n";
    }
    std::size_t entry = 0;
    for (const auto& [q, w] : a.initial()) {
        out << "  init" << entry << " [shape=point, style=invis];\n";
        out << "  init" << entry << " -> " << q;
        if (w != 1) out << " [label=\"" << rational_to_string(w) << "\"]";
        out << ";\n";
        ++entry;
    }
    for (const Edge& e : a.edges()) {
        out << "  " << e.src << " -> " << e.dst << " [label=\""
            << alphabet.letter_to_string(e.letter);
        if (e.weight != 1) out << " (" << rational_to_string(e.weight) << ")";
        out << "\"";
        if (e.provenance.kind == EdgeProvenance::Kind::Bypass) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace freefield
