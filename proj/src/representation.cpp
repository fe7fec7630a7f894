#include "shapes/representation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace shapes {

Weight::Weight(int n_, std::vector<int> a_) : n(n_), a(std::move(a_)) {
    if (n < 2 || static_cast<int>(a.size()) != n - 1)
        throw std::invalid_argument("Weight: need n-1 coefficients");
}

bool Weight::dominant() const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

int Weight::cells() const {
    int total = 0;
    for (int s = 1; s < n; ++s) total += s * a[s - 1];
    return total;
}

std::vector<int> Weight::theta() const {
    std::vector<int> t(n, 0);
    for (int i = 0; i < n - 1; ++i)
        for (int s = i; s < n - 1; ++s) t[i] += a[s];
    return t;
}

Weight Weight::transpose() const {
    std::vector<int> b(a.rbegin(), a.rend());
    return Weight(n, std::move(b));
}

long long weyl_dimension(const Weight& lambda) {
    if (!lambda.dominant()) throw std::invalid_argument("weyl_dimension: non-dominant weight");
    const int n = lambda.n;
    std::vector<int> rows = lambda.theta();  // row i length = theta_i
    Rat dim = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat q(rows[i] + n - 1 - i - (rows[j] + n - 1 - j), j - i);
            q.canonicalize();
            dim *= q;
        }
    if (dim.get_den() != 1) throw std::logic_error("weyl_dimension: non-integral result");
    return static_cast<long long>(dim.get_num().get_si());
}

std::vector<int> weight_of_monomial(const Monomial& m, int n) { return theta_counts(m, n); }

std::vector<int> slice_weight(const Monomial& m, const Weight& lambda) {
    std::vector<int> w = lambda.theta();
    std::vector<int> rel = cone_weight_theta(m, lambda.n);
    for (int i = 0; i < lambda.n; ++i) w[i] += rel[i];
    return w;
}

int ModuleBasis::index_of(const Monomial& m) const {
    for (size_t k = 0; k < monomials.size(); ++k)
        if (monomials[k] == m) return static_cast<int>(k);
    return -1;
}

ModuleBasis module_basis(const Weight& lambda, BasisKind kind) {
    if (!lambda.dominant()) throw std::invalid_argument("module_basis: non-dominant weight");
    const int n = lambda.n;
    ModuleBasis b;
    b.lambda = lambda;
    b.kind = kind;
    b.ring = (kind == BasisKind::semistandard_full) ? Ring::full : Ring::reduced_plus;
    const Order o = natural_order(b.ring);
    std::vector<Tableau> pool;
    if (kind == BasisKind::semistandard_full) {
        pool = enumerate_tableaux(n, lambda.shape(), TableauFilter::semistandard);
    } else {
        // All residue shapes mu <= lambda componentwise.
        Shape mu(n - 1, 0);
        while (true) {
            auto qs = enumerate_tableaux(n, mu, TableauFilter::quasi_standard);
            pool.insert(pool.end(), qs.begin(), qs.end());
            int i = 0;
            while (i < n - 1 && mu[i] == lambda.a[i]) mu[i++] = 0;
            if (i == n - 1) break;
            ++mu[i];
        }
    }
    std::sort(pool.begin(), pool.end(), [&](const Tableau& s, const Tableau& t) {
        return compare_monomials(monomial_from_tableau(s), monomial_from_tableau(t), o, n) < 0;
    });
    for (Tableau& t : pool) {
        b.monomials.push_back(monomial_from_tableau(t));
        b.tableaux.push_back(std::move(t));
    }
    return b;
}

Matrix matrix_identity(int d) {
    Matrix m(d, std::vector<Rat>(d, 0));
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

Matrix matrix_product(const Matrix& a, const Matrix& b) {
    const size_t d = a.size();
    Matrix c(d, std::vector<Rat>(d, 0));
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Matrix matrix_difference(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j) c[i][j] -= b[i][j];
    return c;
}

bool RepresentationMatrix::integral() const {
    for (const auto& row : entries)
        for (const Rat& x : row)
            if (x.get_den() != 1) return false;
    return true;
}

namespace {

void write_coordinates(const Poly& p, const ModuleBasis& b, Matrix& entries, int col) {
    for (const auto& [m, c] : p.terms()) {
        int idx = b.index_of(m);
        if (idx < 0)
            throw std::logic_error("matrix_of_generator: coordinate outside the basis: " +
                                   tableau_from_monomial(b.lambda.n, m).to_text());
        entries[idx][col] = c;
    }
}

RepresentationMatrix assemble(const Generator& g, const Weight& lambda, BasisKind kind,
                              bool parallel) {
    RepresentationMatrix rep;
    rep.basis = module_basis(lambda, kind);
    const int d = rep.basis.size();
    rep.entries.assign(d, std::vector<Rat>(d, 0));
    const Ring ring = rep.basis.ring;
    const GroebnerBasis& gb = groebner_basis(lambda.n, ring);  // warm before the loop
#ifdef SHAPES_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int k = 0; k < d; ++k) {
        Poly image = act_generator(g, Poly::monomial(lambda.n, ring, rep.basis.monomials[k]));
        image = reduce(image, gb.elements, gb.order);
        write_coordinates(image, rep.basis, rep.entries, k);  // disjoint column per iteration
    }
    (void)parallel;
    return rep;
}

}  // namespace

RepresentationMatrix matrix_of_generator(const Generator& g, const Weight& lambda, BasisKind kind) {
    return assemble(g, lambda, kind, false);
}

RepresentationMatrix matrix_of_generator_parallel(const Generator& g, const Weight& lambda,
                                                  BasisKind kind) {
    return assemble(g, lambda, kind, true);
}

Poly tau_module(const Monomial& m, const Weight& lambda) {
    const int n = lambda.n;
    Tableau completed = complete_to_shape(tableau_from_monomial(n, m), lambda.shape());
    auto [reflected, phase] = tau_tableau(completed);
    // Module-level tau is the combinatorial reflection: only the column
    // reversal sign matters, the algebra morphism's eps_n bookkeeping
    // stays at the variable level.
    Poly p = Poly::from_tableau(Ring::full, reflected).substitute_trivial() * Rat(phase.sign);
    return straighten(p);
}

RepresentationMatrix tau_matrix(const Weight& lambda) {
    RepresentationMatrix rep;
    rep.basis = module_basis(lambda, BasisKind::quasi_standard_cone);
    const int d = rep.basis.size();
    rep.entries.assign(d, std::vector<Rat>(d, 0));
    for (int k = 0; k < d; ++k)
        write_coordinates(tau_module(rep.basis.monomials[k], lambda), rep.basis, rep.entries, k);
    return rep;
}

RepresentationMatrix lowering_matrix(int i, int j, const Weight& lambda) {
    if (!(1 <= i && i < j && j <= lambda.n))
        throw std::invalid_argument("lowering_matrix: need a positive root E(i,j), i < j");
    RepresentationMatrix tau = tau_matrix(lambda);
    RepresentationMatrix x = matrix_of_generator(Generator::E(lambda.n + 1 - j, lambda.n + 1 - i),
                                                 lambda, BasisKind::quasi_standard_cone);
    RepresentationMatrix rep;
    rep.basis = std::move(x.basis);
    rep.entries = matrix_product(tau.entries, matrix_product(x.entries, tau.entries));
    return rep;
}

RepresentationMatrix cartan_matrix(int i, int j, const Weight& lambda) {
    RepresentationMatrix x =
        matrix_of_generator(Generator::E(i, j), lambda, BasisKind::quasi_standard_cone);
    RepresentationMatrix y = lowering_matrix(i, j, lambda);
    RepresentationMatrix rep;
    rep.basis = std::move(x.basis);
    rep.entries = matrix_difference(matrix_product(x.entries, y.entries),
                                    matrix_product(y.entries, x.entries));
    return rep;
}

DiamondGraph diamond_graph(const Weight& lambda) {
    DiamondGraph g;
    g.basis = module_basis(lambda, BasisKind::quasi_standard_cone);
    for (const Monomial& m : g.basis.monomials) g.weights.push_back(slice_weight(m, lambda));
    for (int k = 1; k < lambda.n; ++k) {
        std::string suffix = std::to_string(k) + std::to_string(k + 1);
        RepresentationMatrix x =
            matrix_of_generator(Generator::E(k, k + 1), lambda, BasisKind::quasi_standard_cone);
        RepresentationMatrix y = lowering_matrix(k, k + 1, lambda);
        for (int col = 0; col < g.basis.size(); ++col)
            for (int row = 0; row < g.basis.size(); ++row) {
                if (x.entries[row][col] != 0)
                    g.edges.push_back(DiamondEdge{col, row, "e" + suffix, x.entries[row][col]});
                if (y.entries[row][col] != 0)
                    g.edges.push_back(DiamondEdge{col, row, "f" + suffix, y.entries[row][col]});
            }
    }
    return g;
}

std::string graph_to_dot(const DiamondGraph& g) {
    std::ostringstream out;
    out << "digraph diamond {\n";
    for (int k = 0; k < g.basis.size(); ++k) {
        out << "  n" << k << " [label=\"" << g.basis.tableaux[k].to_text() << "\\n(";
        for (size_t i = 0; i < g.weights[k].size(); ++i)
            out << (i ? "," : "") << g.weights[k][i];
        out << ")\"];\n";
    }
    for (const DiamondEdge& e : g.edges) {
        out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label << ":";
        std::ostringstream c;
        c << e.coeff;
        out << c.str() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

bool wildberger_member(const WildbergerIndex& idx) {
    const auto [m, n, l] = idx;
    if (m < 0 || n < 0) return false;
    if (l < -n || l > 2 * m - n) return false;
    if (l < m - 2 * n || l > m) return false;
    return ((l - std::max(m, n)) % 2) == 0;
}

Monomial wildberger_monomial(const WildbergerIndex& idx) {
    if (!wildberger_member(idx))
        throw std::domain_error("wildberger_monomial: index outside the diamond cone");
    const auto [m, n, l] = idx;
    auto letters = letter_table(3);
    long long u, e, x = 0, y = 0;
    if (m > n) {
        e = (m - l) / 2;
        u = n - e;
        x = m - n;
    } else if (m == n) {
        u = (m + l) / 2;
        e = (m - l) / 2;
    } else {
        u = (n + l) / 2;
        e = m - u;
        y = n - m;
    }
    Monomial mono;
    if (u > 0) mono[letters.at('U')] = static_cast<int>(u);
    if (e > 0) mono[letters.at('E')] = static_cast<int>(e);
    if (x > 0) mono[letters.at('X')] = static_cast<int>(x);
    if (y > 0) mono[letters.at('Y')] = static_cast<int>(y);
    return mono;
}

WildbergerIndex wildberger_index(const Monomial& mono) {
    auto letters = letter_table(3);
    long long u = 0, e = 0, x = 0, y = 0;
    for (const auto& [v, k] : mono) {
        if (v == letters.at('U')) u = k;
        else if (v == letters.at('E')) e = k;
        else if (v == letters.at('X')) x = k;
        else if (v == letters.at('Y')) y = k;
        else throw std::domain_error("wildberger_index: not a cone monomial: " + var_name(v));
    }
    if (x > 0 && y > 0)
        throw std::domain_error("wildberger_index: X and Y cannot both appear (XY = U + E)");
    WildbergerIndex idx;
    if (y == 0) {
        idx = WildbergerIndex{u + e + x, u + e, u - e + x};
    } else {
        idx = WildbergerIndex{u + e, u + e + y, u - e - y};
    }
    if (!wildberger_member(idx))
        throw std::domain_error("wildberger_index: monomial maps outside the diamond cone");
    return idx;
}

}  // namespace shapes
