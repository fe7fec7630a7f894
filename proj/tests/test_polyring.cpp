#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shapes/polyring.hpp"

using namespace shapes;

namespace {

Poly random_poly(int n, Ring ring, std::mt19937_64& rng) {
    std::vector<Var> vars;
    for (int s = 1; s < n; ++s)
        for (const Column& c : all_columns(n, s)) {
            if (ring == Ring::reduced_plus && var_is_trivial(c)) continue;
            if (ring == Ring::reduced_minus && var_is_anti_trivial(c, n)) continue;
            vars.push_back(c);
        }
    std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    Poly p(n, ring);
    for (int t = 0; t < 3; ++t) {
        Monomial m;
        m[vars[pick(rng)]] += 1;
        m[vars[pick(rng)]] += 1;
        p.add_term(m, Rat(coeff(rng)));
    }
    return p;
}

// A degree-2 monomial in the ring's variables (never empty, unlike
// random_poly, which may cancel to zero).
Monomial random_monomial(int n, Ring ring, std::mt19937_64& rng) {
    std::vector<Var> vars;
    for (int s = 1; s < n; ++s)
        for (const Column& c : all_columns(n, s)) {
            if (ring == Ring::reduced_plus && var_is_trivial(c)) continue;
            if (ring == Ring::reduced_minus && var_is_anti_trivial(c, n)) continue;
            vars.push_back(c);
        }
    std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1);
    Monomial m;
    m[vars[pick(rng)]] += 1;
    m[vars[pick(rng)]] += 1;
    return m;
}

// The (unique) monomial of a one-term letter expression.
Monomial M(int n, const std::string& s) {
    return poly_from_letters(n, Ring::reduced_plus, s).terms().begin()->first;
}

}  // namespace

TEST_CASE("variable names round-trip") {
    CHECK(var_name({1, 3}) == "d2_13");
    CHECK(parse_var("d2_13") == Var{1, 3});
    Var wide{2, 13};
    CHECK(parse_var(var_name(wide)) == wide);
}

TEST_CASE("letter dictionaries") {
    auto l3 = letter_table(3);
    CHECK(l3.at('X') == Var{2});
    CHECK(l3.at('U') == Var{3});
    CHECK(l3.at('Y') == Var{1, 3});
    CHECK(l3.at('E') == Var{2, 3});
    auto l4 = letter_table(4);
    CHECK(l4.at('D') == Var{2, 4});
    CHECK(l4.at('B') == Var{3, 4});
    CHECK(l4.at('W') == Var{1, 3, 4});
    CHECK(l4.at('Z') == Var{1, 2, 4});
    CHECK(l4.at('C') == Var{2, 3, 4});
}

TEST_CASE("variable chains") {
    auto gt = [](char a, char b, int n, Order o) {
        auto lt = letter_table(n);
        return var_greater(lt.at(a), lt.at(b), o, n);
    };
    // reduced_graded, n=3: U > X > E > Y.
    std::string chain3 = "UXEY";
    for (std::size_t i = 0; i + 1 < chain3.size(); ++i)
        CHECK(gt(chain3[i], chain3[i + 1], 3, Order::reduced_graded));
    // reduced_graded, n=4: Z<W<C<Y<E<V<D<B<X<U<A ascending.
    std::string chain4 = "ZWCYEVDBXUA";
    for (std::size_t i = 0; i + 1 < chain4.size(); ++i)
        CHECK(gt(chain4[i + 1], chain4[i], 4, Order::reduced_graded));
    // shape_lex shares the within-height direction of reduced_graded:
    // the larger index at the first difference from the end wins.
    CHECK(var_greater({2}, {1}, Order::shape_lex, 3));
    CHECK(var_greater({3}, {2}, Order::shape_lex, 3));
    CHECK(var_greater({2, 3}, {1, 3}, Order::shape_lex, 3));
    // Smaller height beats larger height in both families.
    CHECK(var_greater({3}, {1, 2}, Order::shape_lex, 3));
    CHECK(var_greater({3}, {1, 3}, Order::reduced_graded, 3));
}

TEST_CASE("monomial comparisons and leading terms") {
    Order o3 = Order::reduced_graded;
    Poly g = poly_from_letters(3, Ring::reduced_plus, "U - XY + E");
    CHECK(g.leading_monomial(o3) == M(3, "XY"));

    Order o4 = Order::reduced_graded;
    auto lt_of = [&](const std::string& s) {
        return poly_from_letters(4, Ring::reduced_plus, s).leading_monomial(o4);
    };
    CHECK(lt_of("B - YD + EV") == M(4, "EV"));
    CHECK(lt_of("XB - UD + AE") == M(4, "BX"));
    CHECK(lt_of("B - UV + YA") == M(4, "UV"));  // UV > YA

    // Constants lead with the empty monomial.
    Poly five = Poly::constant(3, Ring::reduced_plus, 5);
    auto [m, c] = five.leading_term(o3);
    CHECK(m.empty());
    CHECK(c == 5);
    CHECK_THROWS(Poly(3, Ring::reduced_plus).leading_term(o3));
}

TEST_CASE("orders are total and multiplicative") {
    std::mt19937_64 rng(7);
    for (Order o : {Order::shape_lex, Order::reduced_graded}) {
        int n = 4;
        Ring ring = o == Order::shape_lex ? Ring::full : Ring::reduced_plus;
        for (int trial = 0; trial < 200; ++trial) {
            Monomial u = random_monomial(n, ring, rng);
            Monomial v = random_monomial(n, ring, rng);
            Monomial w = random_monomial(n, ring, rng);
            int cmp = compare_monomials(u, v, o, n);
            CHECK(cmp == -compare_monomials(v, u, o, n));
            if (cmp > 0)
                CHECK(compare_monomials(monomial_mul(u, w), monomial_mul(v, w), o, n) > 0);
            CHECK(compare_monomials(u, u, o, n) == 0);
        }
        // Degree-1 agreement with the variable chain.
        for (const Column& a : all_columns(n, 2))
            for (const Column& b : all_columns(n, 2)) {
                if (a == b) continue;
                Monomial ma{{a, 1}}, mb{{b, 1}};
                CHECK((compare_monomials(ma, mb, o, n) > 0) == var_greater(a, b, o, n));
            }
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = random_poly(3, Ring::full, rng);
        Poly q = random_poly(3, Ring::full, rng);
        Poly r = random_poly(3, Ring::full, rng);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + (-p) == Poly(3, Ring::full));
        CHECK(p * q == q * p);
    }
}

TEST_CASE("trivial substitution is an algebra morphism") {
    // delta2_12 delta1_3 + delta2_23 delta1_1 - delta2_13 delta1_2 maps to
    // U + E - XY.
    Poly p(3, Ring::full);
    p.add_term({{{1, 2}, 1}, {{3}, 1}}, 1);
    p.add_term({{{2, 3}, 1}, {{1}, 1}}, 1);
    p.add_term({{{1, 3}, 1}, {{2}, 1}}, -1);
    CHECK(p.substitute_trivial() == poly_from_letters(3, Ring::reduced_plus, "U + E - XY"));

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = random_poly(4, Ring::full, rng);
        Poly b = random_poly(4, Ring::full, rng);
        CHECK((a * b).substitute_trivial() == a.substitute_trivial() * b.substitute_trivial());
        CHECK((a * b).substitute_anti_trivial() ==
              a.substitute_anti_trivial() * b.substitute_anti_trivial());
    }
}

TEST_CASE("monomial <-> tableau encoding") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Monomial m = random_poly(4, Ring::reduced_plus, rng).terms().begin()->first;
        Tableau t = tableau_from_monomial(4, m);
        CHECK(monomial_from_tableau(t) == m);
    }
    // The empty monomial is the empty tableau.
    CHECK(tableau_from_monomial(3, {}).is_empty());
}

TEST_CASE("letter parser and printer") {
    Poly p = poly_from_letters(3, Ring::reduced_plus, "XY - U - E");
    CHECK(p.term_count() == 3);
    CHECK(poly_from_letters(3, Ring::reduced_plus, poly_to_letters(p, Order::reduced_graded)) ==
          p);
    Poly q = poly_from_letters(3, Ring::reduced_plus, "X^3 - 1/2 U^2*E");
    CHECK(q.term_count() == 2);
    CHECK(q.terms().at(Monomial{{{3}, 2}, {{2, 3}, 1}}) == Rat(-1, 2));
    CHECK(q.terms().at(Monomial{{{2}, 3}}) == 1);
}

TEST_CASE("ring constraint validation") {
    Poly bad(3, Ring::reduced_plus);
    bad.add_term({{{1, 2}, 1}}, 1);  // trivial variable in a reduced ring
    CHECK_THROWS_AS(check_in_ring(bad), std::invalid_argument);
    CHECK_NOTHROW(check_in_ring(poly_from_letters(3, Ring::reduced_plus, "XY - U - E")));
}
