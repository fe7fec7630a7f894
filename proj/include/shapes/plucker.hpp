#ifndef SHAPES_PLUCKER_HPP
#define SHAPES_PLUCKER_HPP

// Quadratic exchange relations between minor variables.  The basic
// identity, valid on SL(n) for row sets I (|I| = p) and J (|J| = q) with
// p >= q >= r >= 1:
//
//   d_I d_J = sum over r-subsets A of I of  d_I'(A) d_J'(A)
//
// where I'(A) replaces the entries of A, in place, by j_1..j_r, and
// J'(A) = A followed by j_{r+1}..j_q; each factor is then re-sorted
// ascending with the sign of the permutation, terms with a repeated
// index vanishing.  plucker_relation returns the difference
// (left side minus right side), an element of the defining ideal.

#include <optional>
#include <vector>

#include "shapes/polyring.hpp"

namespace shapes {

struct ExchangeSpec {
    int n;
    Column I;  // ascending, |I| >= |J|
    Column J;  // ascending
    int r;     // 1 <= r <= |J|
};

// Sort ascending, returning the permutation sign, or nullopt on a
// repeated entry.
std::optional<std::pair<Column, int>> sort_with_sign(std::vector<int> v);

// One exchange term: (sign, first factor, second factor); terms with a
// repeated index are omitted.
struct ExchangeTerm {
    int sign;
    Var first;
    Var second;
};
std::vector<ExchangeTerm> exchange_terms(const ExchangeSpec& spec);

// d_I d_J - sum of exchange terms, in the requested ring (trivial or
// anti-trivial variables substituted away for the reduced rings).
Poly plucker_relation(const ExchangeSpec& spec, Ring ring = Ring::full);

// All exchange relations (every depth r) over height pairs p >= q,
// substituted into the requested ring, made monic under its natural
// order, with zeros and duplicates removed.  Deterministic order.
std::vector<Poly> generating_set(int n, Ring ring);

// The natural order of a ring: shape_lex for full, reduced_graded for
// reduced_plus, their anti twins for reduced_minus.
Order natural_order(Ring ring);

}  // namespace shapes

#endif
