#include "freefield/compile.hpp"

#include <map>

#include "freefield/errors.hpp"

namespace freefield {

WeightedAutomaton expression_to_automaton(const ExprPtr& e, std::size_t n_generators) {
    switch (e->kind()) {
        case ExprKind::Scalar: return aut_scalar(n_generators, e->scalar_value());
        case ExprKind::Gen:
            if (e->letter().index >= n_generators)
                throw DomainError("generator index outside the declared alphabet");
            return aut_gen(n_generators, e->letter());
        case ExprKind::Sum: {
            WeightedAutomaton acc = aut_scalar(n_generators, 0);
            bool first = true;
            for (const ExprPtr& c : e->children()) {
                WeightedAutomaton ca = expression_to_automaton(c, n_generators);
                acc = first ? std::move(ca) : aut_sum(acc, ca);
                first = false;
            }
            return acc;
        }
        case ExprKind::Product: {
            WeightedAutomaton acc = aut_scalar(n_generators, 1);
            bool first = true;
            for (const ExprPtr& c : e->children()) {
                WeightedAutomaton ca = expression_to_automaton(c, n_generators);
                acc = first ? std::move(ca) : aut_product(acc, ca);
                first = false;
            }
            return acc;
        }
        case ExprKind::Neg:
            return aut_scale(Rational(-1), expression_to_automaton(e->child(), n_generators));
        case ExprKind::Star: return aut_star(expression_to_automaton(e->child(), n_generators));
        case ExprKind::Inverse:
            throw DomainError("expression contains a field inverse; eliminate inverses first");
    }
    throw DomainError("unreachable expression kind");
}

namespace {

/// Generalized edges carrying expressions; nullptr means absent.
struct ElimGraph {
    // keyed (src, dst); START = state_count, END = state_count + 1
    std::map<std::pair<State, State>, ExprPtr> label;

    void add(State s, State t, const ExprPtr& e) {
        auto key = std::make_pair(s, t);
        auto it = label.find(key);
        if (it == label.end())
            label.emplace(key, e);
        else
            it->second = simplified_sum({it->second, e});
    }
};

} // namespace

ExprPtr automaton_to_expression(const WeightedAutomaton& a) {
    const WeightedAutomaton t = trim(a);
    const State start = static_cast<State>(t.state_count());
    const State end = start + 1;
    ElimGraph g;
    for (const Edge& e : t.edges())
        g.add(e.src, e.dst, simplified_product({RatExpr::scalar(e.weight), RatExpr::gen(e.letter)}));
    for (const auto& [q, w] : t.initial()) g.add(start, q, RatExpr::scalar(w));
    for (const auto& [q, w] : t.final_weights()) g.add(q, end, RatExpr::scalar(w));

    for (State victim = 0; victim < t.state_count(); ++victim) {
        ExprPtr loop;
        std::vector<std::pair<State, ExprPtr>> incoming, outgoing;
        for (auto it = g.label.begin(); it != g.label.end();) {
            auto [s, d] = it->first;
            if (s == victim && d == victim) {
                loop = it->second;
                it = g.label.erase(it);
            } else if (d == victim) {
                incoming.emplace_back(s, it->second);
                it = g.label.erase(it);
            } else if (s == victim) {
                outgoing.emplace_back(d, it->second);
                it = g.label.erase(it);
            } else {
                ++it;
            }
        }
        ExprPtr loop_star;
        if (loop && !(loop->kind() == ExprKind::Scalar && loop->scalar_value() == 0))
            loop_star = simplified_star(loop);
        for (const auto& [src, in_label] : incoming)
            for (const auto& [dst, out_label] : outgoing) {
                std::vector<ExprPtr> parts{in_label};
                if (loop_star) parts.push_back(loop_star);
                parts.push_back(out_label);
                g.add(src, dst, simplified_product(std::move(parts)));
            }
    }
    auto it = g.label.find(std::make_pair(start, end));
    if (it == g.label.end()) return RatExpr::scalar(0);
    return it->second;
}

} // namespace freefield
