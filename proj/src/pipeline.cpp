#include "freefield/pipeline.hpp"

#include <deque>

#include "freefield/errors.hpp"
#include "freefield/magnus.hpp"

namespace freefield {

namespace {

struct Rewriter {
    std::size_t n_generators;
    const PipelineOptions& options;
    std::vector<std::string>* warnings;

    void warn(const std::string& message) {
        if (warnings) warnings->push_back(message);
    }

    LinearRepresentation series_of(const ExprPtr& star_rational) {
        WeightedAutomaton a = expression_to_automaton(star_rational, n_generators);
        return remove_simplifications(a, options.closure);
    }

    MinSupp minimum_of(const LinearRepresentation& reduced) {
        SupportQuery q;
        q.rep = reduced;
        q.rank = reduced.dim;
        q.bound_override = options.bound_override;
        q.work_limit = options.work_limit;
        return min_supp(q);
    }

    /// Star bodies produced here have every support element > 1 by
    /// bi-invariance (w w0^{-1} > w0 w0^{-1} = 1), hence are trusted.
    ExprPtr mn_inverse(const ExprPtr& child) {
        LinearRepresentation reduced = series_of(child);
        if (reduced.dim == 0) throw DomainError("inverse of zero");
        MinSupp min = minimum_of(reduced);
        const GroupElement& w0 = min.element;
        GroupElement w0_inv = group_inv(w0);
        Rational a0_inv = 1 / min.coefficient;

        ExprPtr tail = tail_expression(child, reduced, min);
        return simplified_product({RatExpr::scalar(a0_inv), monomial_expr(w0_inv),
                                   simplified_star(tail, /*trusted=*/true)});
    }

    /// sum_{w > w0} (-a_w a0^{-1}) w w0^{-1}, as an expression.
    ExprPtr tail_expression(const ExprPtr& child, const LinearRepresentation& reduced,
                            const MinSupp& min) {
        Rational a0_inv = 1 / min.coefficient;
        GroupElement w0_inv = group_inv(min.element);
        if (auto poly = as_group_polynomial(child)) {
            // Star-free child: the support is finite and exact, so the tail
            // is written out monomial by monomial.
            std::vector<ExprPtr> terms;
            for (const auto& [g, c] : poly->terms()) {
                if (g == min.element) continue;
                terms.push_back(simplified_product(
                    {RatExpr::scalar(-c * a0_inv), monomial_expr(group_mul(g, w0_inv))}));
            }
            return simplified_sum(std::move(terms));
        }
        // General child: re-express the series through its minimal
        // simplification-free automaton first.  The extracted expression has
        // the group series as its word series, so the scalar subtraction of
        // the minimum is exact at the word level and the star body compiles
        // proper.
        ExprPtr exact = automaton_to_expression(representation_to_automaton(reduced));
        ExprPtr minus_min = simplified_product(
            {RatExpr::scalar(-min.coefficient), monomial_expr(min.element)});
        return simplified_product({RatExpr::scalar(-a0_inv),
                                   simplified_sum({exact, minus_min}),
                                   monomial_expr(w0_inv)});
    }

    /// A user star is kept literal only when it provably denotes the same
    /// series as (1 - a)^{-1}: the support envelope has all cycles > 1 and
    /// the minimum of the support is > 1.
    ExprPtr rewrite_star(const ExprPtr& original, const ExprPtr& child) {
        if (original->trusted_star()) return simplified_star(child, /*trusted=*/true);

        LinearRepresentation reduced = series_of(child);
        if (reduced.dim == 0) return RatExpr::scalar(1); // 0^* = 1

        bool envelope_ok = false;
        try {
            envelope_ok = check_well_ordered(support_envelope(child, n_generators));
        } catch (const BudgetError&) {
            envelope_ok = false;
        }
        bool minimum_ok = false;
        if (envelope_ok) {
            MinSupp min = minimum_of(reduced);
            minimum_ok = !min.element.is_identity() &&
                         magnus_compare(min.element, GroupElement()) == Order::Greater;
        }
        if (envelope_ok && minimum_ok) return word_proper_star(child, reduced);

        if (options.literal_stars) {
            warn("star argument is not well-ordered; kept literal (series semantics)");
            return word_proper_star(child, reduced);
        }
        warn("star argument is not well-ordered; rewritten as (1 - a)^-1");
        return mn_inverse(simplified_sum({RatExpr::scalar(1), RatExpr::neg(child)}));
    }

    /// Stars compile word-level, so the child must have zero coefficient on
    /// the empty *word*.  A child whose word series misses that but whose
    /// group series is fine (cancellation hit the empty word) is re-expressed
    /// through its simplification-free automaton.
    ExprPtr word_proper_star(const ExprPtr& child, const LinearRepresentation& reduced) {
        WeightedAutomaton a = expression_to_automaton(child, n_generators);
        if (a.empty_word_coefficient() == 0) return simplified_star(child);
        ExprPtr exact = automaton_to_expression(representation_to_automaton(reduced));
        return simplified_star(exact);
    }

    ExprPtr run(const ExprPtr& e) {
        switch (e->kind()) {
            case ExprKind::Scalar:
            case ExprKind::Gen: return e;
            case ExprKind::Sum: {
                std::vector<ExprPtr> parts;
                parts.reserve(e->children().size());
                for (const ExprPtr& c : e->children()) parts.push_back(run(c));
                return simplified_sum(std::move(parts));
            }
            case ExprKind::Product: {
                std::vector<ExprPtr> parts;
                parts.reserve(e->children().size());
                for (const ExprPtr& c : e->children()) parts.push_back(run(c));
                return simplified_product(std::move(parts));
            }
            case ExprKind::Neg: return RatExpr::neg(run(e->child()));
            case ExprKind::Star: return rewrite_star(e, run(e->child()));
            case ExprKind::Inverse: return mn_inverse(run(e->child()));
        }
        throw DomainError("unreachable expression kind");
    }
};

} // namespace

ExprPtr eliminate_inverses(const ExprPtr& e, std::size_t n_generators,
                           const PipelineOptions& options, std::vector<std::string>* warnings) {
    Rewriter rw{n_generators, options, warnings};
    return rw.run(e);
}

Normalized normalize_expression(const ExprPtr& e, std::size_t n_generators,
                                const PipelineOptions& options) {
    Normalized out;
    out.star_rational = eliminate_inverses(e, n_generators, options, &out.warnings);
    WeightedAutomaton a = expression_to_automaton(out.star_rational, n_generators);
    out.series = remove_simplifications(a, options.closure);
    return out;
}

bool is_zero_expression(const ExprPtr& e, std::size_t n_generators,
                        const PipelineOptions& options) {
    return normalize_expression(e, n_generators, options).series.dim == 0;
}

std::optional<std::pair<GroupElement, Rational>> nonzero_witness(const LinearRepresentation& r) {
    if (r.dim == 0) return std::nullopt;
    // BFS in military order over reduced words, shortest first; a nonzero
    // coefficient exists at some length < dim for a reduced representation.
    struct Item {
        Word w;
        QVector v;
    };
    std::deque<Item> queue;
    queue.push_back({Word{}, r.lambda});
    while (!queue.empty()) {
        Item it = std::move(queue.front());
        queue.pop_front();
        Rational c = dot(it.v, r.rho);
        if (c != 0) return std::make_pair(GroupElement::from_reduced(it.w), c);
        if (it.w.size() + 1 >= r.dim) continue;
        for (std::uint32_t code = 0; code < 2 * r.n_generators; ++code) {
            Letter l = Letter::from_code(code);
            if (!it.w.empty() && l == it.w.back().inverse()) continue;
            QVector next = row_times_matrix(it.v, r.mu[code]);
            if (is_zero_vector(next)) continue;
            Word w = it.w;
            w.push_back(l);
            queue.push_back({std::move(w), std::move(next)});
        }
    }
    return std::nullopt;
}

} // namespace freefield
