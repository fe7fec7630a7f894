#ifndef SHAPES_REPRESENTATION_HPP
#define SHAPES_REPRESENTATION_HPP

// Simple sl(n) modules realized inside the shape algebras: weights,
// semistandard and quasi-standard bases, generator matrices (raising by
// derivation + normal form, lowering through the tau symmetry, Cartan by
// commutator), diamond-cone graphs, and the sl(3) dictionary onto
// Wildberger's basis e_{m,n,l} of the diamond cone.

#include <string>
#include <vector>

#include "shapes/derivations.hpp"
#include "shapes/groebner.hpp"

namespace shapes {

// Dominant weight lambda = sum a_j omega_j; as a shape, a_s columns of
// height s.
struct Weight {
    int n = 0;
    std::vector<int> a;  // a_1..a_{n-1}

    Weight() = default;
    Weight(int n_, std::vector<int> a_);

    bool dominant() const;
    Shape shape() const { return a; }
    int cells() const;             // |lambda| = sum s * a_s
    std::vector<int> theta() const;  // theta_i coefficient = a_i + ... + a_{n-1}, theta_n = 0
    Weight transpose() const;      // a_i -> a_{n-i}

    bool operator==(const Weight&) const = default;
};

// Product over i<j of (l_i - l_j)/(j - i), l_i = row length + n - i;
// the number of semistandard tableaux of shape lambda.
long long weyl_dimension(const Weight& lambda);

// Plain theta-content of a monomial (the H eigenvalue tuple).
std::vector<int> weight_of_monomial(const Monomial& m, int n);

// Weight of a cone node inside the slice V^lambda: lambda plus the
// relative (cone) weight of the monomial, in theta coordinates.
std::vector<int> slice_weight(const Monomial& m, const Weight& lambda);

enum class BasisKind { semistandard_full, quasi_standard_cone };

struct ModuleBasis {
    Weight lambda;
    BasisKind kind = BasisKind::quasi_standard_cone;
    Ring ring = Ring::reduced_plus;
    std::vector<Monomial> monomials;  // ascending in the ring's order
    std::vector<Tableau> tableaux;    // aligned with monomials

    int size() const { return static_cast<int>(monomials.size()); }
    // Index of a monomial, or -1.
    int index_of(const Monomial& m) const;
};

// semistandard_full: the semistandard tableaux of shape lambda (full
// ring).  quasi_standard_cone: all quasi-standard tableaux of every
// shape mu <= lambda componentwise (reduced ring) -- the normal forms of
// the shape-lambda monomials.
ModuleBasis module_basis(const Weight& lambda, BasisKind kind);

using Matrix = std::vector<std::vector<Rat>>;

Matrix matrix_identity(int d);
Matrix matrix_product(const Matrix& a, const Matrix& b);
Matrix matrix_difference(const Matrix& a, const Matrix& b);

struct RepresentationMatrix {
    ModuleBasis basis;
    Matrix entries;  // entries[row][col]; column k = coordinates of g . basis_k

    bool integral() const;
};

// Apply the generator to each basis monomial, straighten, read off
// coordinates.  Throws if a coordinate falls outside the basis (basis
// closure is enforced, not assumed).  The parallel variant distributes
// basis columns over OpenMP threads and is bit-identical to the serial
// one.
RepresentationMatrix matrix_of_generator(const Generator& g, const Weight& lambda, BasisKind kind);
RepresentationMatrix matrix_of_generator_parallel(const Generator& g, const Weight& lambda,
                                                  BasisKind kind);

// Module-level tau on a cone basis monomial: complete to shape lambda,
// reflect entries, drop trivial columns, straighten.  Sign from the
// column reversals; a single monomial for n <= 3, possibly a sum from
// n = 4 on.
Poly tau_module(const Monomial& m, const Weight& lambda);

// tau as a matrix on the cone basis (an involution).
RepresentationMatrix tau_matrix(const Weight& lambda);

// Lowering action for the positive root eta = E(i,j), i < j, on the cone
// basis: Y_eta = tau . X_{tau(eta)} . tau.  cartan_matrix is the
// commutator [X_eta, Y_eta].
RepresentationMatrix lowering_matrix(int i, int j, const Weight& lambda);
RepresentationMatrix cartan_matrix(int i, int j, const Weight& lambda);

struct DiamondEdge {
    int from = 0;        // basis index of the argument
    int to = 0;          // basis index of the image component
    std::string label;   // e.g. "e12" (raising) or "f12" (lowering)
    Rat coeff;
};

struct DiamondGraph {
    ModuleBasis basis;
    std::vector<std::vector<int>> weights;  // slice weight per node, theta form
    std::vector<DiamondEdge> edges;
};

// Nodes: the cone basis of V^lambda with slice weights; edges: nonzero
// entries of the simple raising matrices and of their tau-conjugated
// lowering matrices.
DiamondGraph diamond_graph(const Weight& lambda);

std::string graph_to_dot(const DiamondGraph& g);

// Wildberger's parametrization of the sl(3) diamond cone.
struct WildbergerIndex {
    long long m = 0, n = 0, l = 0;
    bool operator==(const WildbergerIndex&) const = default;
};

// m,n >= 0, -n <= l <= 2m-n, m-2n <= l <= m, l == max(m,n) mod 2.
bool wildberger_member(const WildbergerIndex& idx);

// e_{m,n,l} as a reduced sl(3) monomial:
//   m > n:  U^{n-(m-l)/2} E^{(m-l)/2} X^{m-n}
//   m = n:  U^{(m+l)/2}   E^{(m-l)/2}
//   m < n:  U^{(n+l)/2}   E^{m-(n+l)/2} Y^{n-m}
// (the published m < n case shows U^{(m+l)/2}, which is not even an
// integer when m and n differ in parity; (n+l)/2 is forced by matching
// the e_{m,n,l} action tables).  Throws std::domain_error off the cone.
Monomial wildberger_monomial(const WildbergerIndex& idx);

// Inverse of wildberger_monomial on monomials in U,E,X / U,E,Y.
WildbergerIndex wildberger_index(const Monomial& m);

}  // namespace shapes

#endif
