#ifndef FREEFIELD_EXPR_HPP
#define FREEFIELD_EXPR_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freefield/rational.hpp"
#include "freefield/word.hpp"

namespace freefield {

enum class ExprKind { Scalar, Gen, Sum, Product, Neg, Star, Inverse };

class RatExpr;
using ExprPtr = std::shared_ptr<const RatExpr>;

/// Immutable AST of a rational expression.  Product children are ordered
/// (noncommutative); an expression is *-rational iff it contains no
/// Inverse node.
class RatExpr {
public:
    static ExprPtr scalar(Rational value);
    static ExprPtr gen(Letter letter);
    static ExprPtr sum(std::vector<ExprPtr> children);
    static ExprPtr product(std::vector<ExprPtr> children);
    static ExprPtr neg(ExprPtr child);
    static ExprPtr star(ExprPtr child, bool trusted = false);
    static ExprPtr inverse(ExprPtr child);

    ExprKind kind() const { return kind_; }
    const Rational& scalar_value() const { return scalar_; }
    const Letter& letter() const { return letter_; }
    const std::vector<ExprPtr>& children() const { return children_; }
    const ExprPtr& child(std::size_t i = 0) const { return children_.at(i); }

    /// Star nodes produced by the Malcev-Neumann inversion are well-ordered
    /// by construction and skip the user-star validation pass.
    bool trusted_star() const { return trusted_star_; }

    bool is_star_rational() const; // no Inverse node anywhere

private:
    RatExpr(ExprKind k) : kind_(k) {}
    ExprKind kind_;
    Rational scalar_ = 0;
    Letter letter_;
    std::vector<ExprPtr> children_;
    bool trusted_star_ = false;
};

/// Structural equality (trusted flags ignored).
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// Constructors that fold the obvious algebra (drop zero summands, unit
/// factors, collapse scalars) to keep extracted expressions readable.
ExprPtr simplified_sum(std::vector<ExprPtr> parts);
ExprPtr simplified_product(std::vector<ExprPtr> parts);
ExprPtr simplified_star(ExprPtr child, bool trusted = false);

/// Product of generator letters for a reduced word; ScalarLit(1) for ε.
ExprPtr monomial_expr(const GroupElement& g);

/// Parses the expression grammar
///   expr   := ["-"] term { ("+"|"-") term }
///   term   := factor { factor }            (juxtaposition = product)
///   factor := atom { "^*" | "^-1" | "'" }
///   atom   := NAME | RATIONAL | "(" expr ")"
/// NAME^-1 (or NAME') on a generator lowers to a barred letter; ^-1 on any
/// compound subexpression builds an Inverse node.
ExprPtr parse_expression(const std::string& text, const Alphabet& alphabet);

std::string format_expression(const ExprPtr& e, const Alphabet& alphabet);

/// Finite formal sum of group elements with exact coefficients; no zero
/// values stored.
class GroupPolynomial {
public:
    using Map = std::map<GroupElement, Rational, LenLexLess>;

    GroupPolynomial() = default;
    static GroupPolynomial monomial(const GroupElement& g, const Rational& c);

    void add(const GroupElement& g, const Rational& c);
    GroupPolynomial& operator+=(const GroupPolynomial& other);
    GroupPolynomial scaled(const Rational& c) const;
    GroupPolynomial operator*(const GroupPolynomial& other) const; // group Cauchy product

    Rational coefficient(const GroupElement& g) const;
    bool empty() const { return coeffs_.empty(); }
    const Map& terms() const { return coeffs_; }

private:
    Map coeffs_;
};

/// Exact evaluation of a star-free expression as a group polynomial;
/// nullopt when the expression contains Star or Inverse nodes.
std::optional<GroupPolynomial> as_group_polynomial(const ExprPtr& e);

} // namespace freefield

#endif
