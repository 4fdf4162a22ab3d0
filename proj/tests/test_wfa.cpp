#include <doctest.h>

#include <random>

#include "freefield/automaton.hpp"
#include "freefield/compile.hpp"
#include "helpers.hpp"

using namespace freefield;
using namespace freefield::test;

namespace {

/// The automaton of the worked (b+ac)* figure: b-loop at state 0, a to
/// state 1, c back; initial and final at state 0.
WeightedAutomaton bac_star_automaton() {
    WeightedAutomaton a(3, 2);
    Letter la(0, false), lb(1, false), lc(2, false);
    a.add_edge(0, 0, lb, 1);
    a.add_edge(0, 1, la, 1);
    a.add_edge(1, 0, lc, 1);
    a.add_initial(0, 1);
    a.add_final(0, 1);
    return a;
}

} // namespace

TEST_CASE("to_representation matches the worked example matrices") {
    LinearRepresentation r = to_representation(bac_star_automaton());
    LinearRepresentation expected = bac_star_paper_representation();
    CHECK(r.dim == 2);
    CHECK(r.lambda == expected.lambda);
    CHECK(r.rho == expected.rho);
    for (std::size_t code = 0; code < 6; ++code) CHECK(r.mu[code] == expected.mu[code]);
}

TEST_CASE("to_representation of edge cases") {
    WeightedAutomaton empty(2, 0);
    LinearRepresentation r0 = to_representation(empty);
    CHECK(r0.dim == 0);
    CHECK(is_zero(r0));

    // one state, self-loop x with weight 2, initial = final = 1: (2x)^*
    WeightedAutomaton loop(1, 1);
    loop.add_edge(0, 0, Letter(0, false), 2);
    loop.add_initial(0, 1);
    loop.add_final(0, 1);
    LinearRepresentation r = to_representation(loop);
    Alphabet a = ab_x();
    CHECK(coefficient(r, w(a, "x")) == 2);
    CHECK(coefficient(r, w(a, "x x")) == 4);
    CHECK(coefficient(r, w(a, "x x x")) == 8);

    // parallel edges sum into one transition weight
    WeightedAutomaton par(1, 2);
    par.add_edge(0, 1, Letter(0, false), 2);
    par.add_edge(0, 1, Letter(0, false), 3);
    par.add_initial(0, 1);
    par.add_final(1, 1);
    CHECK(coefficient(to_representation(par), w(a, "x")) == 5);
}

TEST_CASE("coefficients by matrix product") {
    Alphabet abc = ab_abc();
    LinearRepresentation r = bac_star_paper_representation();
    CHECK(coefficient(r, w(abc, "b a c b")) == 1);
    CHECK(coefficient(r, w(abc, "c a")) == 0);
    CHECK(coefficient(r, Word{}) == dot(r.lambda, r.rho));
}

TEST_CASE("mu is a monoid morphism") {
    std::mt19937 rng(41);
    LinearRepresentation r = random_representation(rng, 2, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Word u = random_word(rng, 2, 3), v = random_word(rng, 2, 3);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(r.mu_word(uv) == r.mu_word(u) * r.mu_word(v));
    }
}

TEST_CASE("hadamard product multiplies coefficients") {
    Alphabet a = ab_x();
    // 2x and 3x
    LinearRepresentation r2 = to_representation(aut_scale(2, aut_gen(1, Letter(0, false))));
    LinearRepresentation r3 = to_representation(aut_scale(3, aut_gen(1, Letter(0, false))));
    LinearRepresentation h = hadamard(r2, r3);
    CHECK(coefficient(h, w(a, "x")) == 6);
    CHECK(coefficient(h, Word{}) == 0);

    LinearRepresentation bac = bac_star_paper_representation();
    LinearRepresentation sq = hadamard(bac, bac);
    // 0/1 coefficients square to themselves: same series on short words
    for_each_reduced_word(3, 5, [&](const Word& word) {
        CHECK(coefficient(sq, word) == coefficient(bac, word));
        return true;
    });

    // coefficient law on random representations over one generator
    std::mt19937 rng(43);
    LinearRepresentation ra = random_representation(rng, 1, 2);
    LinearRepresentation rb = random_representation(rng, 1, 3);
    LinearRepresentation rh = hadamard(ra, rb);
    std::function<void(Word&)> walk = [&](Word& word) {
        CHECK(coefficient(rh, word) == coefficient(ra, word) * coefficient(rb, word));
        if (word.size() == 8) return;
        for (std::uint32_t code = 0; code < 2; ++code) {
            word.push_back(Letter::from_code(code));
            walk(word);
            word.pop_back();
        }
    };
    Word start;
    walk(start);
}

TEST_CASE("right translate strips a suffix") {
    Alphabet abc = ab_abc();
    LinearRepresentation bac = bac_star_paper_representation();
    LinearRepresentation t = right_translate(bac, w(abc, "c"));
    CHECK(coefficient(t, w(abc, "b a")) == coefficient(bac, w(abc, "b a c")));
    CHECK(coefficient(t, w(abc, "b a")) == 1);

    LinearRepresentation same = right_translate(bac, Word{});
    for_each_reduced_word(3, 4, [&](const Word& word) {
        CHECK(coefficient(same, word) == coefficient(bac, word));
        return true;
    });

    // xy translated by y leaves x
    Alphabet xy = ab_xy();
    LinearRepresentation rxy = to_representation(
        expression_to_automaton(ex(xy, "x y"), 2));
    LinearRepresentation tx = right_translate(rxy, w(xy, "y"));
    CHECK(coefficient(tx, w(xy, "x")) == 1);
    CHECK(coefficient(tx, w(xy, "x y")) == 0);
    CHECK(coefficient(tx, Word{}) == 0);
}

TEST_CASE("schutzenberger reduction reaches the hankel rank") {
    // zero series presented with dimension 3
    LinearRepresentation zero;
    zero.n_generators = 1;
    zero.dim = 3;
    zero.lambda.assign(3, Rational(0));
    zero.rho.assign(3, Rational(1));
    zero.mu.assign(2, QMatrix(3, 3));
    zero.mu[0].at(0, 1) = 1;
    CHECK(schutzenberger_reduce(zero).dim == 0);
    CHECK(is_zero(zero));
    CHECK(hankel_rank_word(zero) == 0);

    // the worked example is already minimal
    LinearRepresentation bac = bac_star_paper_representation();
    CHECK(schutzenberger_reduce(bac).dim == 2);
    CHECK(hankel_rank_word(bac) == 2);

    // single letter x padded with unreachable states reduces to dimension 2
    LinearRepresentation padded;
    padded.n_generators = 1;
    padded.dim = 5;
    padded.lambda = {Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)};
    padded.rho = {Rational(0), Rational(1), Rational(0), Rational(0), Rational(0)};
    padded.mu.assign(2, QMatrix(5, 5));
    padded.mu[0].at(0, 1) = 1;
    padded.mu[0].at(2, 3) = 1; // unreachable block
    padded.mu[1].at(3, 4) = 1;
    CHECK(schutzenberger_reduce(padded).dim == 2);

    // single word xy needs three states
    Alphabet xy = ab_xy();
    LinearRepresentation rxy =
        to_representation(expression_to_automaton(ex(xy, "x y"), 2));
    CHECK(hankel_rank_word(rxy) == 3);
}

TEST_CASE("schutzenberger reduction preserves coefficients") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        LinearRepresentation r = random_representation(rng, 1, 4);
        LinearRepresentation s = schutzenberger_reduce(r);
        std::function<void(Word&)> walk = [&](Word& word) {
            CHECK(coefficient(s, word) == coefficient(r, word));
            if (word.size() == 8) return;
            for (std::uint32_t code = 0; code < 2; ++code) {
                word.push_back(Letter::from_code(code));
                walk(word);
                word.pop_back();
            }
        };
        Word start;
        walk(start);
    }
}

TEST_CASE("zero test: two routes agree") {
    // (1 - x) x^* == 1 at the word level
    Alphabet a = ab_x();
    WeightedAutomaton lhs = expression_to_automaton(ex(a, "(1 - x) x^* - 1"), 1);
    LinearRepresentation r = to_representation(lhs);
    CHECK(is_zero(r));
    CHECK(is_zero_by_enumeration(r));

    LinearRepresentation bac = bac_star_paper_representation();
    CHECK_FALSE(is_zero(bac));
    CHECK_FALSE(is_zero_by_enumeration(bac));

    std::mt19937 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        LinearRepresentation rr = random_representation(rng, 1, 3);
        CHECK(is_zero(rr) == is_zero_by_enumeration(rr));
    }
}

TEST_CASE("translate span dimension equals hankel rank") {
    // Fliess at desk scale: span{ right_translate(R, u) : |u| <= rank },
    // read off as coefficient vectors on words of length <= 2 * rank.
    std::mt19937 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        LinearRepresentation r = random_representation(rng, 1, 1 + trial % 4);
        std::size_t rank = hankel_rank_word(r);

        std::vector<Word> domain;
        std::function<void(Word&, std::size_t)> words = [&](Word& word, std::size_t cap) {
            domain.push_back(word);
            if (word.size() == cap) return;
            for (std::uint32_t code = 0; code < 2; ++code) {
                word.push_back(Letter::from_code(code));
                words(word, cap);
                word.pop_back();
            }
        };
        Word scratch;
        words(scratch, 2 * rank);

        RowSpace span(domain.size());
        for (const Word& u : domain) {
            if (u.size() > rank) continue;
            LinearRepresentation t = right_translate(r, u);
            QVector v(domain.size());
            for (std::size_t i = 0; i < domain.size(); ++i) v[i] = coefficient(t, domain[i]);
            span.insert(std::move(v));
        }
        CHECK(span.dim() == rank);
    }
}

TEST_CASE("representation-level sum, product, scale") {
    Alphabet a = ab_xy();
    std::mt19937 rng(61);
    for (int trial = 0; trial < 8; ++trial) {
        LinearRepresentation ra = random_representation(rng, 2, 2);
        LinearRepresentation rb = random_representation(rng, 2, 2);
        LinearRepresentation sum = rep_sum(ra, rb);
        LinearRepresentation prod = rep_product(ra, rb);
        LinearRepresentation scaled = rep_scale(make_rational(-3, 2), ra);
        for (int wt = 0; wt < 30; ++wt) {
            Word word = random_word(rng, 2, wt % 5);
            CHECK(coefficient(sum, word) == coefficient(ra, word) + coefficient(rb, word));
            CHECK(coefficient(scaled, word) == make_rational(-3, 2) * coefficient(ra, word));
            // product: all splittings
            Rational expect(0);
            for (std::size_t cut = 0; cut <= word.size(); ++cut) {
                Word u(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(cut));
                Word v(word.begin() + static_cast<std::ptrdiff_t>(cut), word.end());
                expect += coefficient(ra, u) * coefficient(rb, v);
            }
            CHECK(coefficient(prod, word) == expect);
        }
    }
}

TEST_CASE("trim removes junk states") {
    WeightedAutomaton a(1, 4);
    Letter x(0, false);
    a.add_edge(0, 1, x, 1);
    a.add_edge(2, 3, x, 1); // unreachable island
    a.add_edge(1, 2, x, 1); // dead end: 2 is not co-accessible... except via 3
    a.add_initial(0, 1);
    a.add_final(1, 1);
    WeightedAutomaton t = trim(a);
    CHECK(t.state_count() == 2);
    CHECK(t.edges().size() == 1);
}
