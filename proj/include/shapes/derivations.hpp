#ifndef SHAPES_DERIVATIONS_HPP
#define SHAPES_DERIVATIONS_HPP

// Infinitesimal sl(n) action on the minor variables, and the tau
// (entry-reflection) twist at the variable level.
//
// A generator is either E(i,j) (the elementary matrix, acting on
// functions through the flow g -> exp(s * transpose(E(i,j))) * g), or a
// traceless diagonal H given by its theta coordinates.  On a single
// variable:  E(i,j) d_I = +- d_{(I \ {j}) u {i}}  when j is in I and i
// is not (sign of the in-place replacement re-sort), 0 otherwise;
// H d_I = (sum of theta_i over i in I) d_I.  Extended as a derivation.
//
// On the reduced rings the derivation is computed on the canonical full
// lift and the trivial variables are substituted away afterwards; the
// substitution is legitimate for raising generators (i < j) on
// reduced_plus and for i > j on reduced_minus, since those kill the
// variables being substituted.  H is exposed as the plain eigen-
// derivation by total content, which is the weight-bookkeeping operator
// (slice-level H matrices come from commutators, see representation).

#include "shapes/polyring.hpp"

namespace shapes {

struct Generator {
    bool is_h = false;
    int i = 0, j = 0;           // E(i,j), 1-based, i != j
    std::vector<Rat> theta;     // H: size n, entries summing to 0

    static Generator E(int i, int j) { return Generator{false, i, j, {}}; }
    static Generator H(std::vector<Rat> theta) { return Generator{true, 0, 0, std::move(theta)}; }
    // H for the simple root alpha_k: theta = e_k - e_{k+1}.
    static Generator H_simple(int n, int k);
};

// +-Var or nullopt (zero).
std::optional<std::pair<Var, int>> apply_e_to_var(int i, int j, const Var& v);

// Content vector: count[i-1] = multiplicity of entry i across all
// columns of the monomial.
std::vector<int> theta_counts(const Monomial& m, int n);

// Relative (cone) weight in theta coordinates: content minus, for each
// column, the content of the trivial column of the same height.  This is
// the weight of the monomial in any shape slice, measured from the
// highest vector; raising by E(i,j) (i<j) adds theta_i - theta_j.
std::vector<int> cone_weight_theta(const Monomial& m, int n);

// Derivation on a polynomial; throws on an inadmissible ring/generator
// combination (see header comment).
Poly act_generator(const Generator& g, const Poly& p);

// Variable-level tau: d^{(s)}_I -> eps_n^s * sign * d^{(s)}_{n+1-I}.
std::pair<Var, Phase> tau_variable(const Var& v, int n);
std::pair<Monomial, Phase> tau_monomial(const Monomial& m, int n);

// tau-reflection of a generator: E(i,j) -> E(n+1-j, n+1-i), H(theta) ->
// H(reversed theta).
Generator tau_generator(const Generator& g, int n);

}  // namespace shapes

#endif
