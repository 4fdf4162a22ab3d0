#include <doctest.h>

#include "freefield/expr.hpp"
#include "helpers.hpp"

using namespace freefield;
using namespace freefield::test;

TEST_CASE("parser lowers names, stars, inverses") {
    Alphabet a = ab_x();
    ExprPtr e = ex(a, "x^-1 (1 - x)^-1");
    REQUIRE(e->kind() == ExprKind::Product);
    REQUIRE(e->children().size() == 2);
    CHECK(e->children()[0]->kind() == ExprKind::Gen);
    CHECK(e->children()[0]->letter().barred);
    CHECK(e->children()[1]->kind() == ExprKind::Inverse);
    const ExprPtr& inner = e->children()[1]->child();
    REQUIRE(inner->kind() == ExprKind::Sum);
    CHECK(inner->children()[0]->kind() == ExprKind::Scalar);
    CHECK(inner->children()[1]->kind() == ExprKind::Neg);

    Alphabet xy = ab_xy();
    ExprPtr s = ex(xy, "(x' y x)^* x'");
    REQUIRE(s->kind() == ExprKind::Product);
    CHECK(s->children()[0]->kind() == ExprKind::Star);
    CHECK(s->children()[0]->child()->kind() == ExprKind::Product);
    CHECK(s->children()[0]->child()->children().size() == 3);
    CHECK(s->children()[1]->kind() == ExprKind::Gen);
    CHECK(s->children()[1]->letter().barred);

    ExprPtr zero = ex(xy, "0");
    CHECK(zero->kind() == ExprKind::Scalar);
    CHECK(zero->scalar_value() == 0);
}

TEST_CASE("parser handles rationals, juxtaposition, apostrophe inverses") {
    Alphabet a = ab_xy();
    ExprPtr r = ex(a, "2/3");
    CHECK(r->scalar_value() == make_rational(2, 3));

    // juxtaposed letters inside one token
    CHECK(expr_equal(ex(a, "yx"), ex(a, "y x")));
    // x' is the same letter as x^-1
    CHECK(expr_equal(ex(a, "x'"), ex(a, "x^-1")));
    // double inverse returns to the generator
    CHECK(expr_equal(ex(a, "x'^-1"), ex(a, "x")));
    // (...)^-1 on a compound builds an Inverse node
    CHECK(ex(a, "(x y)^-1")->kind() == ExprKind::Inverse);
    // leading minus
    CHECK(ex(a, "-x")->kind() == ExprKind::Neg);
    // precedence: juxtaposition binds tighter than +
    ExprPtr sum = ex(a, "x y + y");
    REQUIRE(sum->kind() == ExprKind::Sum);
    CHECK(sum->children()[0]->kind() == ExprKind::Product);
}

TEST_CASE("parser reports positions for errors") {
    Alphabet a = ab_xy();
    CHECK_THROWS_AS(ex(a, "x +"), ParseError);
    CHECK_THROWS_AS(ex(a, "(x"), ParseError);
    CHECK_THROWS_AS(ex(a, "x q"), ParseError);
    CHECK_THROWS_AS(ex(a, "x ^ y"), ParseError);
    try {
        ex(a, "x + @");
    } catch (const ParseError& err) {
        CHECK(err.position == 4);
    }
}

TEST_CASE("format and reparse round trip") {
    Alphabet a = ab_xy();
    for (const char* text :
         {"x y + 2 x'", "(x + y)^* x", "1 - x y x'", "3/4 (x - y)^-1", "x (y + 1) (x y)^*"}) {
        ExprPtr e = ex(a, text);
        ExprPtr round = ex(a, format_expression(e, a));
        CHECK(expr_equal(e, round));
    }
}

TEST_CASE("simplified constructors fold the obvious algebra") {
    Alphabet a = ab_xy();
    ExprPtr x = ex(a, "x");
    CHECK(expr_equal(simplified_sum({RatExpr::scalar(0), x}), x));
    CHECK(expr_equal(simplified_product({RatExpr::scalar(1), x}), x));
    CHECK(simplified_product({RatExpr::scalar(0), x})->kind() == ExprKind::Scalar);
    CHECK(simplified_star(RatExpr::scalar(0))->scalar_value() == 1);
    CHECK(simplified_sum({})->scalar_value() == 0);
    CHECK(simplified_product({})->scalar_value() == 1);
}

TEST_CASE("group polynomial arithmetic") {
    Alphabet a = ab_xy();
    auto p = as_group_polynomial(ex(a, "x y - y x + 2"));
    REQUIRE(p.has_value());
    CHECK(p->coefficient(ge(a, "x y")) == 1);
    CHECK(p->coefficient(ge(a, "y x")) == -1);
    CHECK(p->coefficient(GroupElement()) == 2);

    // products reduce at the group level
    auto q = as_group_polynomial(ex(a, "(x y) (y' x)"));
    REQUIRE(q.has_value());
    CHECK(q->coefficient(ge(a, "x x")) == 1);
    CHECK(q->terms().size() == 1);

    // cancellation to zero removes entries
    auto z = as_group_polynomial(ex(a, "x - x"));
    REQUIRE(z.has_value());
    CHECK(z->empty());

    CHECK_FALSE(as_group_polynomial(ex(a, "x^*")).has_value());
}

TEST_CASE("monomial expressions") {
    Alphabet a = ab_xy();
    CHECK(monomial_expr(GroupElement())->scalar_value() == 1);
    ExprPtr m = monomial_expr(ge(a, "x y' x"));
    auto p = as_group_polynomial(m);
    REQUIRE(p.has_value());
    CHECK(p->coefficient(ge(a, "x y' x")) == 1);
}
