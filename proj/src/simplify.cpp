#include "freefield/simplify.hpp"

#include <deque>
#include <functional>
#include <set>
#include <tuple>

#include "freefield/errors.hpp"
#include "freefield/magnus.hpp"

namespace freefield {

WeightedAutomaton reduced_word_automaton(std::size_t n_generators) {
    if (n_generators < 1) throw DomainError("alphabet must have at least one generator");
    // state 0: nothing read yet; state 1 + code: last letter read
    WeightedAutomaton a(n_generators, 2 * n_generators + 1);
    a.add_initial(0, 1);
    for (State s = 0; s < a.state_count(); ++s) a.add_final(s, 1);
    for (std::uint32_t code = 0; code < 2 * n_generators; ++code) {
        Letter y = Letter::from_code(code);
        a.add_edge(0, 1 + code, y, 1);
        for (std::uint32_t prev = 0; prev < 2 * n_generators; ++prev) {
            if (Letter::from_code(prev).inverse() == y) continue;
            a.add_edge(1 + prev, 1 + code, y, 1);
        }
    }
    return a;
}

namespace {

// Initial weights are treated as parallel entry arrows with identity, the
// same way bypass edges stay parallel: a later bypass may add a fresh entry
// at a state that already carried one, and that fresh entry feeds further
// derivations of its own.
struct InitialEntry {
    std::size_t id;
    State state;
    Rational weight;
};

struct DerivationKey {
    enum class Kind { EdgeBypass, InitialBypass } kind;
    std::size_t feeder; // edge id (EdgeBypass) or initial entry id
    EdgeId e1, e2;

    friend bool operator<(const DerivationKey& a, const DerivationKey& b) {
        return std::tie(a.kind, a.feeder, a.e1, a.e2) < std::tie(b.kind, b.feeder, b.e1, b.e2);
    }
};

bool cancelling_pair(const Edge& e1, const Edge& e2) {
    return e2.src == e1.dst && e2.letter == e1.letter.inverse();
}

} // namespace

WeightedAutomaton fliess_closure(const WeightedAutomaton& input, const ClosureOptions& options) {
    WeightedAutomaton a = trim(input);
    const std::size_t doubled = 2 * a.n_generators();
    const std::size_t max_edges =
        options.max_edges
            ? options.max_edges
            : 10 * a.state_count() * a.state_count() * std::max<std::size_t>(doubled, 1);

    std::vector<InitialEntry> entries;
    for (const auto& [q, w] : a.initial()) entries.push_back({entries.size(), q, w});

    std::set<DerivationKey> enqueued;
    std::deque<DerivationKey> worklist;
    auto push = [&](DerivationKey key) {
        if (enqueued.insert(key).second) worklist.push_back(key);
    };

    // Every (feeder, e1, e2) combination is discovered when its last
    // participant appears, by scanning the participants that already exist.
    auto discover_pair = [&](const Edge& e1, const Edge& e2) {
        if (!cancelling_pair(e1, e2)) return;
        for (const Edge& e0 : a.edges())
            if (e0.dst == e1.src)
                push({DerivationKey::Kind::EdgeBypass, e0.id, e1.id, e2.id});
        for (const InitialEntry& en : entries)
            if (en.state == e1.src)
                push({DerivationKey::Kind::InitialBypass, en.id, e1.id, e2.id});
    };
    auto discover_new_edge = [&](EdgeId id) {
        const Edge e_new = a.edges()[id];
        for (const Edge& e1 : a.edges())
            if (e1.src == e_new.dst)
                for (const Edge& e2 : a.edges())
                    if (cancelling_pair(e1, e2))
                        push({DerivationKey::Kind::EdgeBypass, e_new.id, e1.id, e2.id});
        for (const Edge& e2 : a.edges()) discover_pair(e_new, e2);
        for (const Edge& e1 : a.edges()) discover_pair(e1, e_new);
    };
    auto discover_new_entry = [&](const InitialEntry& en) {
        for (const Edge& e1 : a.edges())
            if (e1.src == en.state)
                for (const Edge& e2 : a.edges())
                    if (cancelling_pair(e1, e2))
                        push({DerivationKey::Kind::InitialBypass, en.id, e1.id, e2.id});
    };

    for (const Edge& e1 : a.edges())
        for (const Edge& e2 : a.edges()) discover_pair(e1, e2);

    while (!worklist.empty()) {
        DerivationKey key;
        if (options.reverse_worklist) {
            key = worklist.back();
            worklist.pop_back();
        } else {
            key = worklist.front();
            worklist.pop_front();
        }
        const Edge e1 = a.edges()[key.e1];
        const Edge e2 = a.edges()[key.e2];
        if (a.edges().size() + entries.size() >= max_edges)
            throw BudgetError("closure budget exceeded — expression appears not well-defined");
        if (key.kind == DerivationKey::Kind::EdgeBypass) {
            const Edge e0 = a.edges()[key.feeder];
            EdgeId id = a.add_edge(e0.src, e2.dst, e0.letter, e0.weight * e1.weight * e2.weight,
                                   EdgeProvenance::bypass(e0.id, e1.id, e2.id));
            discover_new_edge(id);
        } else {
            const InitialEntry feeder = entries[key.feeder];
            InitialEntry fresh{entries.size(), e2.dst, feeder.weight * e1.weight * e2.weight};
            entries.push_back(fresh);
            discover_new_entry(fresh);
        }
    }

    WeightedAutomaton out(a.n_generators(), a.state_count());
    for (const Edge& e : a.edges()) out.add_edge(e.src, e.dst, e.letter, e.weight, e.provenance);
    for (const InitialEntry& en : entries) out.add_initial(en.state, en.weight);
    for (const auto& [q, w] : a.final_weights()) out.add_final(q, w);
    return out;
}

namespace {

/// Weighted product automaton computing the Hadamard product of the two
/// word series; provenance of the left factor is preserved so DOT export
/// can still draw bypass edges dashed.
WeightedAutomaton hadamard_product_automaton(const WeightedAutomaton& a,
                                             const WeightedAutomaton& b) {
    if (a.n_generators() != b.n_generators())
        throw DomainError("alphabet mismatch in hadamard product");
    WeightedAutomaton p(a.n_generators(), a.state_count() * b.state_count());
    auto pair_state = [&](State x, State y) {
        return static_cast<State>(x * b.state_count() + y);
    };
    for (const Edge& ea : a.edges())
        for (const Edge& eb : b.edges()) {
            if (!(ea.letter == eb.letter)) continue;
            p.add_edge(pair_state(ea.src, eb.src), pair_state(ea.dst, eb.dst), ea.letter,
                       ea.weight * eb.weight, ea.provenance);
        }
    for (const auto& [qa, wa] : a.initial())
        for (const auto& [qb, wb] : b.initial()) p.add_initial(pair_state(qa, qb), wa * wb);
    for (const auto& [qa, wa] : a.final_weights())
        for (const auto& [qb, wb] : b.final_weights()) p.add_final(pair_state(qa, qb), wa * wb);
    return trim(p);
}

/// The star edge construction without the properness check: paths are
/// concatenations of nonempty accepted blocks, which is exactly the
/// language (L \ {eps})* — all a 0/1 envelope needs.
WeightedAutomaton star_language(const WeightedAutomaton& a) {
    WeightedAutomaton s(a.n_generators(), a.state_count() + 1);
    State q0 = static_cast<State>(a.state_count());
    for (const Edge& e : a.edges()) s.add_edge(e.src, e.dst, e.letter, e.weight);
    for (const Edge& e : a.edges()) {
        Rational entry = a.initial_weight(e.src);
        if (entry == 0) continue;
        s.add_edge(q0, e.dst, e.letter, entry * e.weight);
        for (const auto& [q, w] : a.final_weights())
            s.add_edge(q, e.dst, e.letter, w * entry * e.weight);
    }
    s.add_initial(q0, 1);
    s.add_final(q0, 1);
    for (const auto& [q, w] : a.final_weights()) s.add_final(q, w);
    return s;
}

/// Dedupe parallel edges and clamp all weights to 1 (language view).
WeightedAutomaton clamp01(const WeightedAutomaton& a) {
    WeightedAutomaton c(a.n_generators(), a.state_count());
    std::set<std::tuple<State, State, std::uint32_t>> seen;
    for (const Edge& ed : a.edges())
        if (seen.insert({ed.src, ed.dst, ed.letter.code()}).second)
            c.add_edge(ed.src, ed.dst, ed.letter, 1);
    for (const auto& [q, w] : a.initial())
        if (c.initial_weight(q) == 0) c.add_initial(q, 1);
    for (const auto& [q, w] : a.final_weights())
        if (c.final_weight(q) == 0) c.add_final(q, 1);
    return c;
}

} // namespace

WeightedAutomaton reduced_word_product_automaton(const WeightedAutomaton& a,
                                                 const ClosureOptions& options) {
    WeightedAutomaton closed = fliess_closure(a, options);
    return hadamard_product_automaton(closed, reduced_word_automaton(a.n_generators()));
}

LinearRepresentation remove_simplifications(const WeightedAutomaton& a,
                                            const ClosureOptions& options) {
    WeightedAutomaton closed = fliess_closure(a, options);
    // Reduce before the (dimension-multiplying) filter, then again after.
    LinearRepresentation closed_rep = schutzenberger_reduce(to_representation(closed));
    LinearRepresentation chi = to_representation(reduced_word_automaton(a.n_generators()));
    return schutzenberger_reduce(hadamard(closed_rep, chi));
}

WeightedAutomaton support_envelope(const ExprPtr& e, std::size_t n_generators) {
    switch (e->kind()) {
        case ExprKind::Scalar: return aut_scalar(n_generators, 1);
        case ExprKind::Gen: return aut_gen(n_generators, e->letter());
        case ExprKind::Neg: return support_envelope(e->child(), n_generators);
        case ExprKind::Sum: {
            WeightedAutomaton acc = aut_scalar(n_generators, 0);
            bool first = true;
            for (const ExprPtr& c : e->children()) {
                WeightedAutomaton ca = support_envelope(c, n_generators);
                acc = first ? std::move(ca) : clamp01(aut_sum(acc, ca));
                first = false;
            }
            return acc;
        }
        case ExprKind::Product: {
            WeightedAutomaton acc = aut_scalar(n_generators, 1);
            bool first = true;
            for (const ExprPtr& c : e->children()) {
                WeightedAutomaton ca = support_envelope(c, n_generators);
                acc = first ? std::move(ca) : clamp01(aut_product(acc, ca));
                first = false;
            }
            return acc;
        }
        case ExprKind::Star:
            return clamp01(star_language(support_envelope(e->child(), n_generators)));
        case ExprKind::Inverse:
            throw DomainError("support envelope requires a *-rational expression");
    }
    throw DomainError("unreachable expression kind");
}

bool check_well_ordered(const WeightedAutomaton& input, const WellOrderOptions& options) {
    WeightedAutomaton a = trim(input);
    std::size_t n = a.state_count();
    std::vector<std::vector<const Edge*>> out(n);
    for (const Edge& e : a.edges()) out[e.src].push_back(&e);

    // Simple-cycle enumeration: DFS from each root visiting only states
    // >= root, so each cycle is reported exactly once, at its least state.
    // The Magnus comparison of a cycle label is rotation-invariant, hence
    // the starting vertex does not matter.
    std::size_t cycles_seen = 0;
    std::vector<char> on_path(n, 0);
    Word label;
    bool ok = true;

    std::function<void(State, State)> dfs = [&](State root, State q) {
        if (!ok) return;
        for (const Edge* e : out[q]) {
            if (!ok) return;
            if (e->dst < root) continue;
            if (e->dst == root) {
                if (++cycles_seen > options.cycle_budget)
                    throw BudgetError("cycle budget exceeded");
                Word cycle = label;
                cycle.push_back(e->letter);
                GroupElement g = GroupElement::reduce(cycle);
                if (g.is_identity() || magnus_compare(g, GroupElement()) != Order::Greater) {
                    ok = false;
                    return;
                }
            } else if (!on_path[e->dst]) {
                on_path[e->dst] = 1;
                label.push_back(e->letter);
                dfs(root, e->dst);
                label.pop_back();
                on_path[e->dst] = 0;
            }
        }
    };

    for (State root = 0; root < n && ok; ++root) {
        on_path.assign(n, 0);
        on_path[root] = 1;
        label.clear();
        dfs(root, root);
    }
    return ok;
}

} // namespace freefield
