#include "freefield/automaton.hpp"

#include <functional>
#include <queue>

#include "freefield/errors.hpp"

namespace freefield {

State WeightedAutomaton::add_state() {
    return static_cast<State>(state_count_++);
}

EdgeId WeightedAutomaton::add_edge(State src, State dst, Letter letter, Rational weight,
                                   EdgeProvenance prov) {
    if (src >= state_count_ || dst >= state_count_) throw DomainError("edge endpoint out of range");
    if (letter.index >= n_generators_) throw DomainError("edge letter out of range");
    if (weight == 0) throw DomainError("edge weight must be nonzero");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{id, src, dst, letter, std::move(weight), prov});
    return id;
}

void WeightedAutomaton::add_initial(State s, const Rational& w) {
    if (s >= state_count_) throw DomainError("initial state out of range");
    if (w == 0) return;
    initial_[s] += w;
    if (initial_[s] == 0) initial_.erase(s);
}

void WeightedAutomaton::add_final(State s, const Rational& w) {
    if (s >= state_count_) throw DomainError("final state out of range");
    if (w == 0) return;
    final_[s] += w;
    if (final_[s] == 0) final_.erase(s);
}

Rational WeightedAutomaton::initial_weight(State s) const {
    auto it = initial_.find(s);
    return it == initial_.end() ? Rational(0) : it->second;
}

Rational WeightedAutomaton::final_weight(State s) const {
    auto it = final_.find(s);
    return it == final_.end() ? Rational(0) : it->second;
}

Rational WeightedAutomaton::empty_word_coefficient() const {
    Rational s(0);
    for (const auto& [q, w] : initial_) s += w * final_weight(q);
    return s;
}

WeightedAutomaton trim(const WeightedAutomaton& a) {
    std::size_t n = a.state_count();
    std::vector<char> accessible(n, 0), coaccessible(n, 0);
    std::queue<State> queue;
    for (const auto& [q, w] : a.initial()) {
        accessible[q] = 1;
        queue.push(q);
    }
    // forward reachability
    std::vector<std::vector<State>> out(n), in(n);
    for (const Edge& e : a.edges()) {
        out[e.src].push_back(e.dst);
        in[e.dst].push_back(e.src);
    }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop();
        for (State r : out[q])
            if (!accessible[r]) {
                accessible[r] = 1;
                queue.push(r);
            }
    }
    for (const auto& [q, w] : a.final_weights()) {
        coaccessible[q] = 1;
        queue.push(q);
    }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop();
        for (State r : in[q])
            if (!coaccessible[r]) {
                coaccessible[r] = 1;
                queue.push(r);
            }
    }
    std::vector<State> remap(n, 0);
    std::size_t kept = 0;
    for (std::size_t q = 0; q < n; ++q)
        if (accessible[q] && coaccessible[q]) remap[q] = static_cast<State>(kept++);
    WeightedAutomaton t(a.n_generators(), kept);
    for (const Edge& e : a.edges())
        if (accessible[e.src] && coaccessible[e.src] && accessible[e.dst] && coaccessible[e.dst])
            t.add_edge(remap[e.src], remap[e.dst], e.letter, e.weight, e.provenance);
    for (const auto& [q, w] : a.initial())
        if (accessible[q] && coaccessible[q]) t.add_initial(remap[q], w);
    for (const auto& [q, w] : a.final_weights())
        if (accessible[q] && coaccessible[q]) t.add_final(remap[q], w);
    return t;
}

WeightedAutomaton aut_scalar(std::size_t n_generators, const Rational& c) {
    WeightedAutomaton a(n_generators, 1);
    if (c != 0) {
        a.add_initial(0, c);
        a.add_final(0, 1);
    }
    return a;
}

WeightedAutomaton aut_gen(std::size_t n_generators, Letter l) {
    WeightedAutomaton a(n_generators, 2);
    a.add_edge(0, 1, l, 1);
    a.add_initial(0, 1);
    a.add_final(1, 1);
    return a;
}

WeightedAutomaton aut_sum(const WeightedAutomaton& a, const WeightedAutomaton& b) {
    if (a.n_generators() != b.n_generators()) throw DomainError("alphabet mismatch in sum");
    WeightedAutomaton s(a.n_generators(), a.state_count() + b.state_count());
    State off = static_cast<State>(a.state_count());
    for (const Edge& e : a.edges()) s.add_edge(e.src, e.dst, e.letter, e.weight);
    for (const Edge& e : b.edges()) s.add_edge(e.src + off, e.dst + off, e.letter, e.weight);
    for (const auto& [q, w] : a.initial()) s.add_initial(q, w);
    for (const auto& [q, w] : b.initial()) s.add_initial(q + off, w);
    for (const auto& [q, w] : a.final_weights()) s.add_final(q, w);
    for (const auto& [q, w] : b.final_weights()) s.add_final(q + off, w);
    return s;
}

WeightedAutomaton aut_product(const WeightedAutomaton& a, const WeightedAutomaton& b) {
    if (a.n_generators() != b.n_generators()) throw DomainError("alphabet mismatch in product");
    WeightedAutomaton p(a.n_generators(), a.state_count() + b.state_count());
    State off = static_cast<State>(a.state_count());
    for (const Edge& e : a.edges()) p.add_edge(e.src, e.dst, e.letter, e.weight);
    for (const Edge& e : b.edges()) p.add_edge(e.src + off, e.dst + off, e.letter, e.weight);
    // Bridge: finish the A part at a final-weighted state and consume the
    // first letter of the B part there.  Splits with an empty A part ride
    // the same bridges (the path starts on a final-weighted A state), so
    // every path starts on the A side and no initial weights move to B;
    // splits with an empty B part are carried by the A-side final weights.
    for (const Edge& e : b.edges()) {
        Rational entry = b.initial_weight(e.src);
        if (entry == 0) continue;
        for (const auto& [q, w] : a.final_weights())
            p.add_edge(q, e.dst + off, e.letter, w * entry * e.weight);
    }
    for (const auto& [q, w] : a.initial()) p.add_initial(q, w);
    Rational b_empty = b.empty_word_coefficient();
    if (b_empty != 0)
        for (const auto& [q, w] : a.final_weights()) p.add_final(q, w * b_empty);
    for (const auto& [q, w] : b.final_weights()) p.add_final(q + off, w);
    return p;
}

WeightedAutomaton aut_star(const WeightedAutomaton& a) {
    if (a.empty_word_coefficient() != 0) throw DomainError("star not proper");
    WeightedAutomaton s(a.n_generators(), a.state_count() + 1);
    State q0 = static_cast<State>(a.state_count());
    for (const Edge& e : a.edges()) s.add_edge(e.src, e.dst, e.letter, e.weight);
    for (const Edge& e : a.edges()) {
        Rational entry = a.initial_weight(e.src);
        if (entry == 0) continue;
        // start the first block
        s.add_edge(q0, e.dst, e.letter, entry * e.weight);
        // close a block at any final state and start the next one
        for (const auto& [q, w] : a.final_weights())
            s.add_edge(q, e.dst, e.letter, w * entry * e.weight);
    }
    s.add_initial(q0, 1);
    s.add_final(q0, 1);
    for (const auto& [q, w] : a.final_weights()) s.add_final(q, w);
    return s;
}

WeightedAutomaton aut_scale(const Rational& c, const WeightedAutomaton& a) {
    WeightedAutomaton s(a.n_generators(), a.state_count());
    if (c == 0) return s;
    for (const Edge& e : a.edges()) s.add_edge(e.src, e.dst, e.letter, e.weight);
    for (const auto& [q, w] : a.initial()) s.add_initial(q, c * w);
    for (const auto& [q, w] : a.final_weights()) s.add_final(q, w);
    return s;
}

QMatrix LinearRepresentation::mu_word(const Word& w) const {
    QMatrix m = QMatrix::identity(dim);
    for (const Letter& l : w) m = m * mu_of(l);
    return m;
}

LinearRepresentation to_representation(const WeightedAutomaton& a) {
    LinearRepresentation r;
    r.n_generators = a.n_generators();
    r.dim = a.state_count();
    r.lambda.assign(r.dim, Rational(0));
    r.rho.assign(r.dim, Rational(0));
    r.mu.assign(2 * r.n_generators, QMatrix(r.dim, r.dim));
    for (const auto& [q, w] : a.initial()) r.lambda[q] = w;
    for (const auto& [q, w] : a.final_weights()) r.rho[q] = w;
    for (const Edge& e : a.edges()) r.mu[e.letter.code()].at(e.src, e.dst) += e.weight;
    return r;
}

WeightedAutomaton representation_to_automaton(const LinearRepresentation& r) {
    WeightedAutomaton a(r.n_generators, r.dim);
    for (std::uint32_t code = 0; code < 2 * r.n_generators; ++code)
        for (std::size_t i = 0; i < r.dim; ++i)
            for (std::size_t j = 0; j < r.dim; ++j) {
                const Rational& w = r.mu[code].at(i, j);
                if (w != 0)
                    a.add_edge(static_cast<State>(i), static_cast<State>(j),
                               Letter::from_code(code), w);
            }
    for (std::size_t i = 0; i < r.dim; ++i) {
        if (r.lambda[i] != 0) a.add_initial(static_cast<State>(i), r.lambda[i]);
        if (r.rho[i] != 0) a.add_final(static_cast<State>(i), r.rho[i]);
    }
    return a;
}

Rational coefficient(const LinearRepresentation& r, const Word& w) {
    QVector v = r.lambda;
    for (const Letter& l : w) {
        if (l.code() >= r.mu.size()) return Rational(0);
        v = row_times_matrix(v, r.mu_of(l));
        if (is_zero_vector(v)) return Rational(0);
    }
    return dot(v, r.rho);
}

LinearRepresentation hadamard(const LinearRepresentation& r, const LinearRepresentation& t) {
    if (r.n_generators != t.n_generators) throw DomainError("alphabet mismatch in hadamard");
    LinearRepresentation h;
    h.n_generators = r.n_generators;
    h.dim = r.dim * t.dim;
    h.lambda.assign(h.dim, Rational(0));
    h.rho.assign(h.dim, Rational(0));
    for (std::size_t i = 0; i < r.dim; ++i)
        for (std::size_t j = 0; j < t.dim; ++j) {
            h.lambda[i * t.dim + j] = r.lambda[i] * t.lambda[j];
            h.rho[i * t.dim + j] = r.rho[i] * t.rho[j];
        }
    h.mu.reserve(2 * h.n_generators);
    for (std::uint32_t code = 0; code < 2 * h.n_generators; ++code)
        h.mu.push_back(QMatrix::kronecker(r.mu[code], t.mu[code]));
    return h;
}

LinearRepresentation right_translate(const LinearRepresentation& r, const Word& u) {
    LinearRepresentation t = r;
    QVector v = r.rho;
    for (auto it = u.rbegin(); it != u.rend(); ++it) v = matrix_times_col(r.mu_of(*it), v);
    t.rho = std::move(v);
    return t;
}

RowSpace forward_space(const LinearRepresentation& r) {
    RowSpace space(r.dim);
    std::vector<QVector> worklist;
    if (space.insert(r.lambda)) worklist.push_back(r.lambda);
    while (!worklist.empty()) {
        QVector v = std::move(worklist.back());
        worklist.pop_back();
        for (std::uint32_t code = 0; code < 2 * r.n_generators; ++code) {
            QVector next = row_times_matrix(v, r.mu[code]);
            if (space.insert(next)) worklist.push_back(std::move(next));
        }
    }
    return space;
}

RowSpace backward_space(const LinearRepresentation& r) {
    RowSpace space(r.dim);
    std::vector<QVector> worklist;
    if (space.insert(r.rho)) worklist.push_back(r.rho);
    while (!worklist.empty()) {
        QVector v = std::move(worklist.back());
        worklist.pop_back();
        for (std::uint32_t code = 0; code < 2 * r.n_generators; ++code) {
            QVector next = matrix_times_col(r.mu[code], v);
            if (space.insert(next)) worklist.push_back(std::move(next));
        }
    }
    return space;
}

namespace {

/// Restricts r to the row space spanned by basis (which must be invariant
/// under every mu on the right and contain lambda).
LinearRepresentation restrict_forward(const LinearRepresentation& r, const RowSpace& basis) {
    LinearRepresentation out;
    out.n_generators = r.n_generators;
    out.dim = basis.dim();
    auto lambda_coords = basis.coordinates(r.lambda);
    if (!lambda_coords) throw DomainError("forward basis does not contain lambda");
    out.lambda = std::move(*lambda_coords);
    out.rho.assign(out.dim, Rational(0));
    for (std::size_t i = 0; i < out.dim; ++i) out.rho[i] = dot(basis.row(i), r.rho);
    out.mu.assign(2 * r.n_generators, QMatrix(out.dim, out.dim));
    for (std::uint32_t code = 0; code < 2 * r.n_generators; ++code)
        for (std::size_t i = 0; i < out.dim; ++i) {
            QVector image = row_times_matrix(basis.row(i), r.mu[code]);
            auto coords = basis.coordinates(image);
            if (!coords) throw DomainError("forward basis is not invariant");
            for (std::size_t j = 0; j < out.dim; ++j) out.mu[code].at(i, j) = (*coords)[j];
        }
    return out;
}

LinearRepresentation transpose_rep(const LinearRepresentation& r) {
    LinearRepresentation t;
    t.n_generators = r.n_generators;
    t.dim = r.dim;
    t.lambda = r.rho;
    t.rho = r.lambda;
    t.mu.reserve(r.mu.size());
    for (const QMatrix& m : r.mu) t.mu.push_back(m.transposed());
    return t;
}

} // namespace

LinearRepresentation schutzenberger_reduce(const LinearRepresentation& r) {
    LinearRepresentation fwd = restrict_forward(r, forward_space(r));
    // Dual pass: restrict the reversed representation to its forward space.
    LinearRepresentation rev = transpose_rep(fwd);
    LinearRepresentation reduced_rev = restrict_forward(rev, forward_space(rev));
    return transpose_rep(reduced_rev);
}

bool is_zero(const LinearRepresentation& r) {
    return schutzenberger_reduce(r).dim == 0;
}

bool is_zero_by_enumeration(const LinearRepresentation& r) {
    if (r.dim == 0) return true;
    // All words strictly shorter than dim, by DFS with zero-prefix pruning.
    bool zero = true;
    std::function<void(const QVector&, std::size_t)> rec = [&](const QVector& v, std::size_t len) {
        if (!zero) return;
        if (dot(v, r.rho) != 0) {
            zero = false;
            return;
        }
        if (len + 1 >= r.dim) return;
        for (std::uint32_t code = 0; code < 2 * r.n_generators && zero; ++code) {
            QVector next = row_times_matrix(v, r.mu[code]);
            if (!is_zero_vector(next)) rec(next, len + 1);
        }
    };
    rec(r.lambda, 0);
    return zero;
}

std::size_t hankel_rank_word(const LinearRepresentation& r) {
    return schutzenberger_reduce(r).dim;
}

LinearRepresentation rep_sum(const LinearRepresentation& a, const LinearRepresentation& b) {
    if (a.n_generators != b.n_generators) throw DomainError("alphabet mismatch in sum");
    LinearRepresentation s;
    s.n_generators = a.n_generators;
    s.dim = a.dim + b.dim;
    s.lambda.assign(s.dim, Rational(0));
    s.rho.assign(s.dim, Rational(0));
    for (std::size_t i = 0; i < a.dim; ++i) {
        s.lambda[i] = a.lambda[i];
        s.rho[i] = a.rho[i];
    }
    for (std::size_t i = 0; i < b.dim; ++i) {
        s.lambda[a.dim + i] = b.lambda[i];
        s.rho[a.dim + i] = b.rho[i];
    }
    s.mu.assign(2 * s.n_generators, QMatrix(s.dim, s.dim));
    for (std::uint32_t code = 0; code < 2 * s.n_generators; ++code) {
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) s.mu[code].at(i, j) = a.mu[code].at(i, j);
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j)
                s.mu[code].at(a.dim + i, a.dim + j) = b.mu[code].at(i, j);
    }
    return s;
}

LinearRepresentation rep_product(const LinearRepresentation& a, const LinearRepresentation& b) {
    if (a.n_generators != b.n_generators) throw DomainError("alphabet mismatch in product");
    // Upper block-triangular construction:
    //   mu'(x) = [ mu_a(x)  rho_a (lambda_b mu_b(x)) ]
    //            [ 0        mu_b(x)                  ]
    // lambda' = (lambda_a, 0), rho' = (rho_a * (b, eps); rho_b).
    LinearRepresentation p;
    p.n_generators = a.n_generators;
    p.dim = a.dim + b.dim;
    p.lambda.assign(p.dim, Rational(0));
    p.rho.assign(p.dim, Rational(0));
    for (std::size_t i = 0; i < a.dim; ++i) p.lambda[i] = a.lambda[i];
    Rational b_empty = dot(b.lambda, b.rho);
    for (std::size_t i = 0; i < a.dim; ++i) p.rho[i] = a.rho[i] * b_empty;
    for (std::size_t i = 0; i < b.dim; ++i) p.rho[a.dim + i] = b.rho[i];
    p.mu.assign(2 * p.n_generators, QMatrix(p.dim, p.dim));
    for (std::uint32_t code = 0; code < 2 * p.n_generators; ++code) {
        QMatrix& m = p.mu[code];
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) m.at(i, j) = a.mu[code].at(i, j);
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j)
                m.at(a.dim + i, a.dim + j) = b.mu[code].at(i, j);
        QVector entry = row_times_matrix(b.lambda, b.mu[code]);
        for (std::size_t i = 0; i < a.dim; ++i) {
            if (a.rho[i] == 0) continue;
            for (std::size_t j = 0; j < b.dim; ++j) m.at(i, a.dim + j) = a.rho[i] * entry[j];
        }
    }
    return p;
}

LinearRepresentation rep_scale(const Rational& c, const LinearRepresentation& a) {
    LinearRepresentation s = a;
    for (Rational& x : s.lambda) x *= c;
    return s;
}

LinearRepresentation rep_difference(const LinearRepresentation& a, const LinearRepresentation& b) {
    return rep_sum(a, rep_scale(Rational(-1), b));
}

} // namespace freefield
