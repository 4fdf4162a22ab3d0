#ifndef FREEFIELD_MAGNUS_HPP
#define FREEFIELD_MAGNUS_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "freefield/rational.hpp"
#include "freefield/word.hpp"

namespace freefield {

/// Finite Z-linear combination of monoid words (truncations of Z<<X>>).
/// Zero coefficients are never stored.
class MonoidPolynomial {
public:
    using Map = std::map<Word, Integer, LenLexLess>;

    MonoidPolynomial() = default;
    static MonoidPolynomial one() { return monomial(Word{}, 1); }
    static MonoidPolynomial monomial(Word w, Integer c = 1);

    void add(const Word& w, const Integer& c);
    MonoidPolynomial& operator+=(const MonoidPolynomial& other);
    MonoidPolynomial operator+(const MonoidPolynomial& other) const;
    MonoidPolynomial scaled(const Integer& c) const;

    Integer coefficient(const Word& w) const;
    bool empty() const { return coeffs_.empty(); }
    const Map& terms() const { return coeffs_; }

    /// Military-largest word of the support (throws when empty).
    const Word& leading_word() const;

    friend bool operator==(const MonoidPolynomial& a, const MonoidPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    Map coeffs_;
};

/// All Lyndon words over n generators of length <= max_len, in military
/// order (length, then lexicographic by declared generator order).
/// Generated with Duval's algorithm.
std::vector<Word> lyndon_words(std::size_t n_generators, std::size_t max_len);

bool is_lyndon(const Word& w);

/// Chen-Fox-Lyndon factorization: strictly decreasing Lyndon factors with
/// multiplicities >= 1; the concatenation reproduces w.  w must be unbarred.
std::vector<std::pair<Word, std::size_t>> lyndon_factorization(const Word& w);

/// Bilinear extensions of the word shuffle and infiltration products.
MonoidPolynomial shuffle(const MonoidPolynomial& p, const MonoidPolynomial& q);
MonoidPolynomial infiltration(const MonoidPolynomial& p, const MonoidPolynomial& q);

/// Number of occurrences of v as a subword of ω, extended to the free
/// group through the unipotent subword-counting representation of
/// v ⧢ X* (barred letters act by the exact integer matrix inverse).
/// v must be nonempty and unbarred.
Integer subword_count(const GroupElement& omega, const Word& v);

/// Image of ω under x -> 1 + x, truncated to words of length <= degree.
MonoidPolynomial magnus_truncated(const GroupElement& omega, std::size_t degree);

enum class Order { Less, Equal, Greater };

/// Witness of a strict Magnus comparison: the first Lyndon word whose
/// subword counts differ, and the two counts.
struct MagnusWitness {
    Word lyndon;
    Integer count_a;
    Integer count_b;
};

struct MagnusOptions {
    /// Cap on the length of candidate Lyndon words; 0 means the default
    /// l(a) + l(b) + 4.
    std::size_t length_cap = 0;
};

/// Total bi-invariant order on the free group: a ≺ b iff the first Lyndon
/// word (in military order) with differing subword counts has a smaller
/// count in a.  Equality is decided first on reduced words, so the scan
/// runs only on genuinely distinct elements.
Order magnus_compare(const GroupElement& a, const GroupElement& b,
                     const MagnusOptions& options = {}, MagnusWitness* witness = nullptr);

} // namespace freefield

#endif
