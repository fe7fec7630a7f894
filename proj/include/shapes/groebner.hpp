#ifndef SHAPES_GROEBNER_HPP
#define SHAPES_GROEBNER_HPP

// Buchberger completion to reduced Groebner bases, normal forms, and the
// two explicit ideal-element constructions: f_S in the full ring (leading
// term a non-semistandard two-column monomial, semistandard tail) and
// P_T in the reduced ring (leading term a non-quasi-standard monomial,
// quasi-standard tail, built from the trivial-top cascade).

#include <string>
#include <vector>

#include "shapes/plucker.hpp"

namespace shapes {

struct GroebnerBasis {
    int n = 0;
    Ring ring = Ring::full;
    Order order = Order::shape_lex;
    std::vector<Poly> elements;  // monic, pairwise reduced, sorted by leading term ascending
};

// Full normal form: no monomial of the result is divisible by any
// leading term of the basis.  Divisor selection: among the basis
// elements whose leading term divides the current monomial, the one with
// the largest leading term (deterministic).
Poly reduce(const Poly& p, const std::vector<Poly>& basis, Order o);

Poly s_polynomial(const Poly& f, const Poly& g, Order o);

// Reduced Groebner basis; normal pair strategy (smallest lcm first) with
// the coprimality and chain criteria.
std::vector<Poly> buchberger(std::vector<Poly> gens, Order o);

// Disk cache controls for groebner_basis (default: .shapes-cache/ under
// the current directory, enabled).
void set_cache_directory(const std::string& dir);
void set_cache_enabled(bool enabled);

// Reduced Groebner basis of the defining ideal of the given ring, under
// its natural order, memoized in-process and on disk (JSON, keyed by a
// content hash of the generators and order).
const GroebnerBasis& groebner_basis(int n, Ring ring);

// Normal form of delta^t modulo the ring's cached basis.
Poly straighten(const Tableau& t, Ring ring);
Poly straighten(const Poly& p);

// The paper's explicit ideal element with leading term delta^t:
//   full ring      t non-semistandard with two columns -> f_t,
//                  tail semistandard;
//   reduced_plus   t non-quasi-standard (no trivial columns) -> P_t,
//                  tail quasi-standard.
// Built from exchange relations only (never from a Groebner basis), so
// the Groebner computations can be checked against it.
Poly construct_paper_element(const Tableau& t, Ring ring);

// {d^{(s)}_{1..s} - 1 : s = 1..n-1}, the ideal cutting out the reduced
// quotient.
std::vector<Poly> trivial_shift_set(int n);

}  // namespace shapes

#endif
