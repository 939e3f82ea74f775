#include <catch2/catch_amalgamated.hpp>

#include "chern/chern.hpp"
#include "test_util.hpp"

using namespace chern;

namespace {

Polynomial poly(const std::string& text) { return parse_polynomial(text); }

ClassExpr cls(const std::string& text) {
    return std::get<ClassExpr>(parse_expression(text));
}

std::size_t error_offset(const std::string& text) {
    try {
        parse_expression(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    return 0;
}

}  // namespace

TEST_CASE("polynomial atoms") {
    CHECK(poly("7") == Polynomial(7));
    CHECK(poly("3/4") == Polynomial(Rational(3, 4)));
    CHECK(poly("x1") == Polynomial::variable(VarId::x(1)));
    CHECK(poly("y12") == Polynomial::variable(VarId::y(12)));
    CHECK(poly("z") == Polynomial::variable(VarId::z()));
    CHECK(poly("z3") == Polynomial::variable(VarId::z(3)));
    CHECK(poly(" ( x1 ) ") == Polynomial::variable(VarId::x(1)));
}

TEST_CASE("operator precedence and associativity") {
    Polynomial x1 = Polynomial::variable(VarId::x(1));
    Polynomial x2 = Polynomial::variable(VarId::x(2));
    Polynomial z = Polynomial::variable(VarId::z());
    CHECK(poly("1 + x1 * x2") == Polynomial(1) + x1 * x2);
    CHECK(poly("(1 + x1) * x2") == (Polynomial(1) + x1) * x2);
    CHECK(poly("x1 ^ 2 * x2") == x1 * x1 * x2);
    CHECK(poly("2 * x1 ^ 3") == Polynomial(2) * x1.pow(3));
    CHECK(poly("1 - z - z") == Polynomial(1) - z - z);
    CHECK(poly("-x1 + x2") == x2 - x1);
    CHECK(poly("-x1 * x2") == -(x1 * x2));
    CHECK(poly("+x1") == x1);
    CHECK(poly("x1 - (x2 - x1)") == x1 - (x2 - x1));
    CHECK(poly("x1^0") == Polynomial(1));
    CHECK(poly("1/2 * x1") == Polynomial(Rational(1, 2)) * x1);
    // '/' binds only rational literals, not arbitrary factors
    CHECK_THROWS_AS(poly("x1 / 2"), ParseError);
}

TEST_CASE("class expressions") {
    GrassmannSpec spec(2, 4);
    CHECK(expand_class(cls("c(1,Q)"), spec).str() == "y1 + y2");
    CHECK(expand_class(cls("euler(sym(3,dual(S)))"), spec).str() ==
          "18*x1^3*x2 + 45*x1^2*x2^2 + 18*x1*x2^3");
    CHECK(expand_class(cls("schur([2,1],Q)"), spec) == schur(Partition({2, 1}), y_alphabet(2)));
    CHECK(expand_class(cls("c(1,Q)^4"), spec) ==
          expand_class(cls("c(1,Q)"), spec).pow(4));
    CHECK(expand_class(cls("c(1,Q) * c(1,dual(S)) + 2"), spec) ==
          expand_class(cls("c(1,Q)"), spec) * expand_class(cls("c(1,dual(S))"), spec) +
              Polynomial(2));
    CHECK(expand_class(cls("c(2,tensor(Q,dual(S)))"), spec) ==
          elementary(2, roots_of(BundleExpr::tensor(BundleExpr::Q(),
                                                    BundleExpr::dual(BundleExpr::S())),
                                 spec)));
    CHECK(expand_class(cls("c(1,wedge(2,Q))"), spec) ==
          expand_class(cls("c(1,Q)"), spec));
    CHECK(expand_class(cls("-c(1,Q)"), spec) == -expand_class(cls("c(1,Q)"), spec));
    CHECK(expand_class(cls("1/2 * c(1,Q)"), spec) ==
          Polynomial(Rational(1, 2)) * expand_class(cls("c(1,Q)"), spec));
}

TEST_CASE("expressions without class atoms come back as polynomials") {
    ParsedExpression e = parse_expression("x1 + 2");
    CHECK(std::holds_alternative<Polynomial>(e));
    ParsedExpression c = parse_expression("c(1,Q)");
    CHECK(std::holds_alternative<ClassExpr>(c));
    // a bare constant is a polynomial
    CHECK(std::holds_alternative<Polynomial>(parse_expression("5")));
}

TEST_CASE("variables and classes cannot mix") {
    CHECK_THROWS_AS(parse_expression("x1 * c(1,Q)"), ParseError);
    CHECK(error_offset("x1 * c(1,Q)") == 1);
    CHECK(error_offset("c(1,Q) + y1") == 10);
    CHECK_THROWS_AS(parse_polynomial("c(1,Q)"), ParseError);
    try {
        parse_polynomial("2 + euler(S)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
    }
}

TEST_CASE("parse errors carry offsets and expectations") {
    try {
        parse_expression("x1 + ");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);
        CHECK(e.found() == "end of input");
        CHECK(std::string(e.what()) ==
              "parse error at byte 6: expected a number, a variable, '(', 'c(', 'euler(', "
              "or 'schur('; found end of input");
    }
    CHECK(error_offset("(x1") == 4);
    CHECK(error_offset("x1 x2") == 4);
    CHECK(error_offset("x1 + @") == 6);
    CHECK(error_offset("x0") == 2);
    CHECK(error_offset("x") == 2);
    CHECK(error_offset("1/0") == 3);
    CHECK(error_offset("x1^x2") == 4);
    CHECK(error_offset("c(1 Q)") == 5);
    CHECK(error_offset("c(1,R)") == 5);
    CHECK(error_offset("schur([1,2],Q)") == 10);
    CHECK(error_offset("sym(0,S)") == 1);  // bare 'sym' is not an expression atom
    CHECK(error_offset("c(1,sym(0,S))") == 9);
}

TEST_CASE("renderings parse back to the same polynomial") {
    std::mt19937_64 rng(71);
    std::vector<VarId> vars = {VarId::x(1), VarId::x(2), VarId::y(1), VarId::z()};
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial p = testutil::random_polynomial(rng, vars, 4, 5);
        // also exercise fractional coefficients
        p = Polynomial(testutil::random_rational(rng)) * p;
        CHECK(parse_polynomial(p.str()) == p);
    }
    CHECK(parse_polynomial(Polynomial().str()) == Polynomial());
}

TEST_CASE("whitespace is insignificant") {
    CHECK(poly("x1+x2") == poly(" x1 \t + \n x2 "));
    GrassmannSpec spec(2, 4);
    CHECK(expand_class(cls("euler( sym( 3 , dual( S ) ) )"), spec) ==
          expand_class(cls("euler(sym(3,dual(S)))"), spec));
}
