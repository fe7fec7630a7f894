#ifndef SHAPES_ORACLE_HPP
#define SHAPES_ORACLE_HPP

// Exact-rational evaluation of minor polynomials at points of SL(n):
// the independent check against which the symbolic machinery is tested.

#include <cstdint>
#include <string>
#include <vector>

#include "shapes/derivations.hpp"
#include "shapes/polyring.hpp"

namespace shapes {

struct GroupPoint {
    int n = 0;
    std::vector<std::vector<Rat>> m;  // n x n, det = 1

    Rat& at(int i, int j) { return m[i - 1][j - 1]; }        // 1-based
    const Rat& at(int i, int j) const { return m[i - 1][j - 1]; }
};

GroupPoint identity_point(int n);

// exp of the strictly lower-triangular matrix with entry (i,j), i > j,
// taken from `lower` (same indexing, upper part ignored).  Exact: the
// series terminates.
GroupPoint unipotent_point(int n, const std::vector<std::vector<Rat>>& lower);

// Convenience coordinates matching the sl(3) / sl(4) parametrisations
// used in the tests: n=3 takes (x, y, u) at positions (2,1), (3,2),
// (3,1); n=4 takes (x, y, z, u, v, w) at (2,1), (3,2), (4,3), (3,1),
// (4,2), (4,1).
GroupPoint unipotent_point3(const Rat& x, const Rat& y, const Rat& u);
GroupPoint unipotent_point4(const Rat& x, const Rat& y, const Rat& z,
                            const Rat& u, const Rat& v, const Rat& w);

// Deterministic pseudo-random SL(n) point: a product of elementary
// shears I + c E_{ij} with small rational c, seeded.
GroupPoint random_sl_point(int n, std::uint64_t seed);

Rat determinant(std::vector<std::vector<Rat>> a);

// Minor over rows v, columns 1..|v|.
Rat evaluate_delta(const GroupPoint& g, const Var& v);

// Trivial variables, being absent from reduced polynomials, evaluate as
// written; for ideal-vanishing checks on the reduced rings use points
// whose (anti-)trivial minors equal 1 (e.g. unipotent ones).
Rat evaluate_poly(const Poly& p, const GroupPoint& g);

// d/ds at s=0 of p(exp(s * transpose(X)) g) for X = E(i,j) or H(theta):
// the flow-side derivative that act_generator must reproduce.
Rat flow_derivative(const Generator& gen, const Poly& p, const GroupPoint& g);

// Exact comparison act_generator(gen, p)(g) == flow_derivative(gen, p, g).
bool derivation_consistency(const Generator& gen, const Poly& p, const GroupPoint& g);

// Gauss decomposition g = L * U with U unit upper triangular; throws
// std::domain_error naming the first vanishing principal minor
// ("d{k}_{1..k}") when it does not exist.  L_{jk} = d^{(k)}_{1..k-1,j} /
// d^{(k-1)}_{1..k-1}.
struct GaussFactors {
    GroupPoint lower;       // L (diagonal = principal minor ratios)
    GroupPoint upper_unit;  // U
};
GaussFactors gauss_decompose(const GroupPoint& g);

// True if every polynomial vanishes at every point.  The OpenMP kernel
// and the serial reference compute the same thing bit for bit; tests
// compare them, the benchmark times them.
bool all_vanish_serial(const std::vector<Poly>& polys, const std::vector<GroupPoint>& points);
bool all_vanish_parallel(const std::vector<Poly>& polys, const std::vector<GroupPoint>& points);

}  // namespace shapes

#endif
