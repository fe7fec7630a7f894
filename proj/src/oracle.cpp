#include "shapes/oracle.hpp"

#include <random>
#include <stdexcept>

namespace shapes {

GroupPoint identity_point(int n) {
    GroupPoint g{n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, 0))};
    for (int i = 0; i < n; ++i) g.m[i][i] = 1;
    return g;
}

static std::vector<std::vector<Rat>> mat_mul(const std::vector<std::vector<Rat>>& a,
                                             const std::vector<std::vector<Rat>>& b) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> c(n, std::vector<Rat>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

GroupPoint unipotent_point(int n, const std::vector<std::vector<Rat>>& lower) {
    std::vector<std::vector<Rat>> nil(n, std::vector<Rat>(n, 0));
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) nil[i][j] = lower[i][j];
    GroupPoint g = identity_point(n);
    std::vector<std::vector<Rat>> power = nil;
    Rat fact = 1;
    for (int k = 1; k < n; ++k) {
        fact *= k;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g.m[i][j] += power[i][j] / fact;
        power = mat_mul(power, nil);
    }
    return g;
}

GroupPoint unipotent_point3(const Rat& x, const Rat& y, const Rat& u) {
    std::vector<std::vector<Rat>> lo(3, std::vector<Rat>(3, 0));
    lo[1][0] = x;
    lo[2][1] = y;
    lo[2][0] = u;
    return unipotent_point(3, lo);
}

GroupPoint unipotent_point4(const Rat& x, const Rat& y, const Rat& z,
                            const Rat& u, const Rat& v, const Rat& w) {
    std::vector<std::vector<Rat>> lo(4, std::vector<Rat>(4, 0));
    lo[1][0] = x;
    lo[2][1] = y;
    lo[3][2] = z;
    lo[2][0] = u;
    lo[3][1] = v;
    lo[3][0] = w;
    return unipotent_point(4, lo);
}

GroupPoint random_sl_point(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 3);
    GroupPoint g = identity_point(n);
    for (int step = 0; step < 2 * n * n; ++step) {
        int i = pick(rng), j = pick(rng);
        int a = num(rng), b = den(rng);
        if (i == j || a == 0) continue;
        GroupPoint shear = identity_point(n);
        Rat c(a, b);
        c.canonicalize();  // mpq_class(num, den) does not reduce by itself
        shear.m[i][j] = c;
        g.m = mat_mul(shear.m, g.m);
    }
    return g;
}

Rat determinant(std::vector<std::vector<Rat>> a) {
    size_t n = a.size();
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

Rat evaluate_delta(const GroupPoint& g, const Var& v) {
    size_t s = v.size();
    std::vector<std::vector<Rat>> sub(s, std::vector<Rat>(s));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) sub[i][j] = g.m[v[i] - 1][j];
    return determinant(sub);
}

Rat evaluate_poly(const Poly& p, const GroupPoint& g) {
    Rat total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rat val = c;
        for (const auto& [v, e] : m) {
            Rat d = evaluate_delta(g, v);
            for (int k = 0; k < e; ++k) val *= d;
        }
        total += val;
    }
    return total;
}

// Minor over rows `v`, columns 1..|v|, with one row's content replaced:
// the row with index `replaced` uses the entries of row `source` of g.
static Rat minor_with_replaced_row(const GroupPoint& g, const Var& v, int replaced, int source) {
    size_t s = v.size();
    std::vector<std::vector<Rat>> sub(s, std::vector<Rat>(s));
    for (size_t i = 0; i < s; ++i) {
        int row = (v[i] == replaced) ? source : v[i];
        for (size_t j = 0; j < s; ++j) sub[i][j] = g.m[row - 1][j];
    }
    return determinant(sub);
}

Rat flow_derivative(const Generator& gen, const Poly& p, const GroupPoint& g) {
    // Leibniz over the minor factors of each monomial; the factor
    // derivative is the minor with row j's content replaced by row i's
    // (for E(i,j)), or (sum theta over rows) times the minor (for H).
    Rat total = 0;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m) {
            Rat dfactor;
            if (gen.is_h) {
                Rat eig = 0;
                for (int row : v) eig += gen.theta[row - 1];
                dfactor = eig * evaluate_delta(g, v);
            } else {
                bool has_j = std::find(v.begin(), v.end(), gen.j) != v.end();
                if (!has_j) continue;
                dfactor = minor_with_replaced_row(g, v, gen.j, gen.i);
            }
            Rat rest = c * e;
            for (const auto& [w, f] : m) {
                int reps = (w == v) ? f - 1 : f;
                Rat d = evaluate_delta(g, w);
                for (int k = 0; k < reps; ++k) rest *= d;
            }
            total += rest * dfactor;
        }
    }
    return total;
}

bool derivation_consistency(const Generator& gen, const Poly& p, const GroupPoint& g) {
    return evaluate_poly(act_generator(gen, p), g) == flow_derivative(gen, p, g);
}

GaussFactors gauss_decompose(const GroupPoint& g) {
    int n = g.n;
    GroupPoint L{n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, 0))};
    GroupPoint U = identity_point(n);
    for (int k = 0; k < n; ++k) {
        for (int j = k; j < n; ++j) {  // column k of L
            Rat sum = g.m[j][k];
            for (int t = 0; t < k; ++t) sum -= L.m[j][t] * U.m[t][k];
            L.m[j][k] = sum;
        }
        if (L.m[k][k] == 0) {
            Var triv(k + 1);
            for (int t = 0; t <= k; ++t) triv[t] = t + 1;
            throw std::domain_error("gauss_decompose: principal minor " + var_name(triv) + " vanishes");
        }
        for (int j = k + 1; j < n; ++j) {  // row k of U
            Rat sum = g.m[k][j];
            for (int t = 0; t < k; ++t) sum -= L.m[k][t] * U.m[t][j];
            U.m[k][j] = sum / L.m[k][k];
        }
    }
    return GaussFactors{std::move(L), std::move(U)};
}

static bool vanish_at(const std::vector<Poly>& polys, const GroupPoint& g) {
    for (const Poly& p : polys)
        if (evaluate_poly(p, g) != 0) return false;
    return true;
}

bool all_vanish_serial(const std::vector<Poly>& polys, const std::vector<GroupPoint>& points) {
    for (const GroupPoint& g : points)
        if (!vanish_at(polys, g)) return false;
    return true;
}

bool all_vanish_parallel(const std::vector<Poly>& polys, const std::vector<GroupPoint>& points) {
    int bad = 0;
    const int count = static_cast<int>(points.size());
#ifdef SHAPES_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) reduction(| : bad)
#endif
    for (int k = 0; k < count; ++k) bad |= vanish_at(polys, points[k]) ? 0 : 1;
    return bad == 0;
}

}  // namespace shapes
