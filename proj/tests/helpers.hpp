#ifndef FREEFIELD_TEST_HELPERS_HPP
#define FREEFIELD_TEST_HELPERS_HPP

#include <map>
#include <random>
#include <string>

#include "freefield/automaton.hpp"
#include "freefield/compile.hpp"
#include "freefield/expr.hpp"
#include "freefield/word.hpp"

namespace freefield::test {

inline Alphabet ab_x() { return Alphabet::from_csv("x"); }
inline Alphabet ab_xy() { return Alphabet::from_csv("x,y"); }
inline Alphabet ab_xyz() { return Alphabet::from_csv("x,y,z"); }
inline Alphabet ab_abc() { return Alphabet::from_csv("a,b,c"); }

inline Word w(const Alphabet& a, const std::string& text) { return a.parse_word(text); }
inline GroupElement ge(const Alphabet& a, const std::string& text) {
    return GroupElement::reduce(a.parse_word(text));
}
inline ExprPtr ex(const Alphabet& a, const std::string& text) {
    return parse_expression(text, a);
}

/// Independent oracle: word series arithmetic on explicit polynomials
/// truncated at a fixed length.  Star iterations terminate because word
/// products only lengthen (no cancellation at the word level).
struct WordSeries {
    std::size_t max_len;
    std::map<Word, Rational, LenLexLess> coeffs;

    explicit WordSeries(std::size_t len) : max_len(len) {}

    void add(const Word& word, const Rational& c) {
        if (c == 0 || word.size() > max_len) return;
        auto it = coeffs.find(word);
        if (it == coeffs.end())
            coeffs.emplace(word, c);
        else {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }
    Rational at(const Word& word) const {
        auto it = coeffs.find(word);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    WordSeries times(const WordSeries& o) const {
        WordSeries out(max_len);
        for (const auto& [u, cu] : coeffs)
            for (const auto& [v, cv] : o.coeffs) {
                if (u.size() + v.size() > max_len) continue;
                Word cat = u;
                cat.insert(cat.end(), v.begin(), v.end());
                out.add(cat, cu * cv);
            }
        return out;
    }
    WordSeries plus(const WordSeries& o) const {
        WordSeries out = *this;
        for (const auto& [u, c] : o.coeffs) out.add(u, c);
        return out;
    }
    WordSeries scaled(const Rational& c) const {
        WordSeries out(max_len);
        for (const auto& [u, k] : coeffs) out.add(u, k * c);
        return out;
    }
    WordSeries star() const {
        WordSeries acc(max_len);
        acc.add(Word{}, 1);
        WordSeries term = acc;
        for (std::size_t i = 0; i <= max_len; ++i) {
            term = term.times(*this);
            if (term.coeffs.empty()) break;
            acc = acc.plus(term);
        }
        return acc;
    }
};

inline WordSeries word_series_of(const ExprPtr& e, std::size_t max_len) {
    switch (e->kind()) {
        case ExprKind::Scalar: {
            WordSeries s(max_len);
            s.add(Word{}, e->scalar_value());
            return s;
        }
        case ExprKind::Gen: {
            WordSeries s(max_len);
            s.add(Word{e->letter()}, 1);
            return s;
        }
        case ExprKind::Sum: {
            WordSeries s(max_len);
            for (const ExprPtr& c : e->children()) s = s.plus(word_series_of(c, max_len));
            return s;
        }
        case ExprKind::Product: {
            WordSeries s(max_len);
            s.add(Word{}, 1);
            for (const ExprPtr& c : e->children()) s = s.times(word_series_of(c, max_len));
            return s;
        }
        case ExprKind::Neg: return word_series_of(e->child(), max_len).scaled(Rational(-1));
        case ExprKind::Star: return word_series_of(e->child(), max_len).star();
        case ExprKind::Inverse: throw DomainError("word series oracle needs a *-rational input");
    }
    throw DomainError("unreachable");
}

/// Group-coefficient oracle: (a, g) = sum of word coefficients over words
/// reducing to g.  Sums to word length `depth` and checks stabilization
/// against depth - 2 so a too-small window fails loudly.
inline Rational group_coefficient_oracle(const ExprPtr& e, const GroupElement& g,
                                         std::size_t depth) {
    WordSeries big = word_series_of(e, depth);
    Rational full(0), shallow(0);
    for (const auto& [u, c] : big.coeffs) {
        if (GroupElement::reduce(u) == g) {
            full += c;
            if (u.size() + 2 <= depth) shallow += c;
        }
    }
    if (full != shallow) throw DomainError("group coefficient oracle did not stabilize");
    return full;
}

inline Word random_word(std::mt19937& rng, std::size_t n_generators, std::size_t len) {
    std::uniform_int_distribution<std::uint32_t> dist(0, 2 * static_cast<std::uint32_t>(n_generators) - 1);
    Word out;
    for (std::size_t i = 0; i < len; ++i) out.push_back(Letter::from_code(dist(rng)));
    return out;
}

inline Word random_reduced_word(std::mt19937& rng, std::size_t n_generators, std::size_t len) {
    std::uniform_int_distribution<std::uint32_t> dist(0, 2 * static_cast<std::uint32_t>(n_generators) - 1);
    Word out;
    while (out.size() < len) {
        Letter l = Letter::from_code(dist(rng));
        if (!out.empty() && l == out.back().inverse()) continue;
        out.push_back(l);
    }
    return out;
}

/// Random small representation with entries in {-1, 0, 1/2, 1, 2}.
inline LinearRepresentation random_representation(std::mt19937& rng, std::size_t n_generators,
                                                  std::size_t dim) {
    std::uniform_int_distribution<int> pick(0, 9);
    auto value = [&]() -> Rational {
        switch (pick(rng)) {
            case 0: return Rational(-1);
            case 1: return Rational(1);
            case 2: return Rational(2);
            case 3: return make_rational(1, 2);
            default: return Rational(0);
        }
    };
    LinearRepresentation r;
    r.n_generators = n_generators;
    r.dim = dim;
    r.lambda.assign(dim, Rational(0));
    r.rho.assign(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
        r.lambda[i] = value();
        r.rho[i] = value();
    }
    r.mu.assign(2 * n_generators, QMatrix(dim, dim));
    for (auto& m : r.mu)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = value();
    return r;
}

/// The 2-state automaton of the worked (b+ac)* example: states {0, 1},
/// b-loop at 0, a from 0 to 1, c back; initial and final at 0.
inline LinearRepresentation bac_star_paper_representation() {
    Alphabet abc = ab_abc();
    LinearRepresentation r;
    r.n_generators = 3;
    r.dim = 2;
    r.lambda = {Rational(1), Rational(0)};
    r.rho = {Rational(1), Rational(0)};
    r.mu.assign(6, QMatrix(2, 2));
    Letter a(0, false), b(1, false), c(2, false);
    r.mu[a.code()].at(0, 1) = 1;
    r.mu[b.code()].at(0, 0) = 1;
    r.mu[c.code()].at(1, 0) = 1;
    return r;
}

} // namespace freefield::test

#endif
