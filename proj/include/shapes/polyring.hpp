#ifndef SHAPES_POLYRING_HPP
#define SHAPES_POLYRING_HPP

// Exact-rational polynomial arithmetic in the minor variables
// d{s}_{i1..is} (the determinant of rows i1 < ... < is of the first s
// columns of g in SL(n)).  Three rings share the variable set:
//   full          all variables d{s}_I, 1 <= s <= n-1
//   reduced_plus  the trivial variables d{s}_{1..s} are set to 1
//   reduced_minus the anti-trivial variables d{s}_{n+1-s..n} are set to 1
// plus two order families per ring (see Order).

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "shapes/tableaux.hpp"

namespace shapes {

using Rat = mpq_class;

// A variable is its ascending row-index list; the height is the length.
using Var = Column;

// Exponent map; keys unique, exponents >= 1.
using Monomial = std::map<Var, int>;

enum class Ring { full, reduced_plus, reduced_minus };

// Both order families share the variable chain "smaller height greater;
// within a height, larger index at the first difference from the end is
// greater" and a graded reverse-lex monomial comparison.  They differ in
// the grading: shape_lex grades by total degree, reduced_graded by the
// degree in the non-trivial variables only.  This is the unique pairing
// we found under which every non-semistandard (resp. non-quasi-standard)
// two-column product leads its own exchange relation -- plain lex fails
// on the equal-height pair d2_23 d2_14, whose straightening tail contains
// d2_12 d2_34.
enum class Order {
    shape_lex,
    // Same after reflecting every index i -> n+1-i.
    anti_shape_lex,
    reduced_graded,
    anti_reduced_graded,
};

bool var_is_trivial(const Var& v);                 // rows 1..s
bool var_is_anti_trivial(const Var& v, int n);     // rows n+1-s..n

std::string var_name(const Var& v);                // d2_13, d2_1_13 if any index > 9
Var parse_var(const std::string& name);

// true if a is strictly greater than b in the order's variable chain.
bool var_greater(const Var& a, const Var& b, Order o, int n);

// -1, 0, +1 with +1 meaning a > b.
int compare_monomials(const Monomial& a, const Monomial& b, Order o, int n);

int monomial_degree(const Monomial& m);            // total degree
int monomial_nontrivial_degree(const Monomial& m, Order o, int n);
bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b);  // requires divisibility
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

Monomial monomial_from_tableau(const Tableau& t);
Tableau tableau_from_monomial(int n, const Monomial& m);

class Poly {
public:
    Poly() : n_(0), ring_(Ring::full) {}
    Poly(int n, Ring ring) : n_(n), ring_(ring) {}
    static Poly constant(int n, Ring ring, const Rat& c);
    static Poly variable(int n, Ring ring, const Var& v);
    static Poly monomial(int n, Ring ring, const Monomial& m, const Rat& c = 1);
    static Poly from_tableau(Ring ring, const Tableau& t);

    int n() const { return n_; }
    Ring ring() const { return ring_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    void add_term(const Monomial& m, const Rat& c);  // accumulates, drops zeros

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return n_ == o.n_ && ring_ == o.ring_ && terms_ == o.terms_; }

    std::pair<Monomial, Rat> leading_term(Order o) const;  // throws on zero
    Monomial leading_monomial(Order o) const;
    Poly make_monic(Order o) const;

    // Set each trivial (resp. anti-trivial) variable to 1 and retag the ring.
    Poly substitute_trivial() const;        // -> reduced_plus
    Poly substitute_anti_trivial() const;   // -> reduced_minus

    std::string to_string(Order o) const;   // terms in decreasing order

private:
    int n_;
    Ring ring_;
    std::map<Monomial, Rat> terms_;
};

// Validate ring constraints (no trivial vars in reduced_plus, ...);
// throws std::invalid_argument on violation.
void check_in_ring(const Poly& p);

// Single-letter dictionaries used throughout for sl(2), sl(3), sl(4):
// n=2: X=d1_2.  n=3: X=d1_2, U=d1_3, Y=d2_13, E=d2_23.
// n=4 adds A=d1_4, V=d2_14, D=d2_24, B=d2_34, Z=d3_124, W=d3_134, C=d3_234.
std::map<char, Var> letter_table(int n);

// "XY - U - E", "U^2*E X^3", coefficients like 3, -1/2.  Test/CLI sugar.
Poly poly_from_letters(int n, Ring ring, const std::string& text);
std::string poly_to_letters(const Poly& p, Order o);

}  // namespace shapes

#endif
