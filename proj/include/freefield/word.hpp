#ifndef FREEFIELD_WORD_HPP
#define FREEFIELD_WORD_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "freefield/errors.hpp"

namespace freefield {

/// One symbol of the doubled alphabet X ∪ X'.  The alphabet size is a
/// runtime parameter; letters only carry their generator index and a
/// barred flag marking the formal inverse.
struct Letter {
    std::uint32_t index = 0;
    bool barred = false;

    Letter() = default;
    Letter(std::uint32_t idx, bool bar) : index(idx), barred(bar) {}

    /// Dense code in [0, 2n): 2*index + barred.  Used to index mu tables.
    std::uint32_t code() const { return 2 * index + (barred ? 1u : 0u); }
    static Letter from_code(std::uint32_t c) { return Letter(c / 2, (c & 1u) != 0); }

    Letter inverse() const { return Letter(index, !barred); }

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.index == b.index && a.barred == b.barred;
    }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
    friend bool operator<(const Letter& a, const Letter& b) { return a.code() < b.code(); }
};

/// A word of the free monoid over the doubled alphabet; may be non-reduced.
using Word = std::vector<Letter>;

bool is_reduced_word(const Word& w);

/// Length-then-lexicographic comparison by letter codes.  This is the
/// deterministic container/key order, *not* the Magnus order.
int compare_lenlex(const Word& a, const Word& b);

/// An element of the free group, stored as its unique reduced word.
class GroupElement {
public:
    GroupElement() = default;

    /// Reduces w by a single left-to-right stack scan; linear time.
    static GroupElement reduce(const Word& w);

    /// Wraps a word the caller asserts is reduced; checked.
    static GroupElement from_reduced(Word w);

    const Word& word() const { return word_; }
    std::size_t length() const { return word_.size(); }
    bool is_identity() const { return word_.empty(); }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.word_ == b.word_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

private:
    explicit GroupElement(Word w) : word_(std::move(w)) {}
    Word word_;
};

/// Container ordering for GroupElement keys (lenlex on reduced words).
struct LenLexLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const {
        return compare_lenlex(a.word(), b.word()) < 0;
    }
    bool operator()(const Word& a, const Word& b) const { return compare_lenlex(a, b) < 0; }
};

GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupElement& a);

/// Longest proper prefix p(ω) and the ℓ(ω) nonempty suffixes in increasing
/// length order.  Errors on ω = ε.
std::pair<GroupElement, std::vector<GroupElement>> prefix_suffixes(const GroupElement& omega);

/// True iff the parts multiply to ω with lengths adding up (ω ≐ ω₁⋯ωₙ).
bool is_reduced_factorization(const GroupElement& omega, const std::vector<GroupElement>& parts);

/// Ordered generator names; owns parsing and printing of letters/words.
/// The declared order also fixes the military order used by the Magnus
/// comparison.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    /// "x,y,z" -> alphabet; names must be distinct and non-empty.
    static Alphabet from_csv(const std::string& csv);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index lookup; returns size() when absent.
    std::size_t find(const std::string& name) const;

    std::string letter_to_string(const Letter& l) const;

    /// Parses a word: letters are generator names, inverses written x' or
    /// x^-1, whitespace-separated or juxtaposed (greedy longest match).
    Word parse_word(const std::string& text) const;

    std::string word_to_string(const Word& w) const;
    std::string word_to_string(const GroupElement& g) const { return word_to_string(g.word()); }

private:
    std::vector<std::string> names_;
};

/// Calls fn(word) for every reduced word of length <= max_len over the
/// doubled alphabet of n generators, in DFS prefix order starting from ε.
/// fn returns false to prune the subtree below the given word.
void for_each_reduced_word(std::size_t n_generators, std::size_t max_len,
                           const std::function<bool(const Word&)>& fn);

} // namespace freefield

#endif
