#ifndef SHAPES_TABLEAUX_HPP
#define SHAPES_TABLEAUX_HPP

// Young tableaux on the alphabet {1..n} with columns of height < n,
// strictly increasing down each column.  A tableau is a *multiset* of
// columns: two arrangements that differ by permuting equal-height columns
// denote the same object, so everything is stored in a canonical column
// order (taller columns first; among equal heights, compare entries from
// the bottom up and put the column that is smaller at the first
// difference further left).

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shapes {

// Entries of one column, strictly increasing, values in 1..n.
using Column = std::vector<int>;

// Shape (a_1, ..., a_{n-1}): a_s = number of columns of height s.
using Shape = std::vector<int>;

// Canonical "further left" relation between columns: taller first; equal
// heights compare bottom-up, smaller entry at the first difference wins.
bool column_before(const Column& a, const Column& b);

class Tableau {
public:
    Tableau() : n_(0) {}
    Tableau(int n, std::vector<Column> cols);

    // Build from the row form (row i lists the i-th entries of the
    // columns left to right); throws std::invalid_argument if the rows do
    // not assemble into strictly increasing columns.
    static Tableau from_rows(int n, const std::vector<std::vector<int>>& rows);

    // Parse "1 2 2/2 3" (rows joined by '/').  "" or "1" the unit: use
    // empty(n).  Also accepts "cols[(1,2),(3)]".
    static Tableau parse(int n, const std::string& text);
    static Tableau empty(int n) { return Tableau(n, {}); }

    int n() const { return n_; }
    const std::vector<Column>& columns() const { return cols_; }
    bool is_empty() const { return cols_.empty(); }
    int column_count() const { return static_cast<int>(cols_.size()); }
    int height(int j) const { return static_cast<int>(cols_[j].size()); }
    int cells() const;

    Shape shape() const;                       // a_1..a_{n-1}
    std::vector<std::vector<int>> rows() const;
    std::string to_text() const;               // row form
    std::string to_col_text() const;           // cols[(..),..] form

    bool operator==(const Tableau& o) const { return n_ == o.n_ && cols_ == o.cols_; }
    bool operator!=(const Tableau& o) const { return !(*this == o); }
    bool operator<(const Tableau& o) const;    // arbitrary total order (containers)

private:
    int n_;
    std::vector<Column> cols_;  // canonical order, heights non-increasing
};

// A column (1, 2, ..., s) contributes nothing to the reduced algebra.
bool is_trivial_column(const Column& c);

// Rows non-decreasing left to right in the canonical arrangement.
bool is_semistandard(const Tableau& t);

// Extraction witness: column index j (1-based) whose top s cells are the
// trivial 1..s and can be peeled off.  Smallest j, then largest s.
// Conditions, for witness (j, s):
//   (a) column j starts 1, 2, ..., s;
//   (b) some column j' >= j has height exactly s;
//   (c) for every k > j whose left neighbour is taller than s and which
//       itself has height >= s, entry s+1 of column k-1 exceeds entry s
//       of column k (so deleting the top s cells of column j and sliding
//       rows 1..s left still gives strictly increasing columns).
std::optional<std::pair<int, int>> reducibility_witness(const Tableau& t);

bool is_reducible(const Tableau& t);

// Quasi-standard: semistandard and irreducible.  The empty tableau is
// quasi-standard by convention.
bool is_quasi_standard(const Tableau& t);

// One extraction step at witness (j, s): delete the top s cells of
// column j and shift rows 1..s left by one from column j on.
Tableau extract_step(const Tableau& t, int j, int s);

// Full extraction f(T) = (L, R): L collects the peeled trivial columns,
// R is the quasi-standard residue.
struct SuperTableau {
    Tableau trivial;   // L: all columns of the form (1..s)
    Tableau residue;   // R: quasi-standard
};
SuperTableau extract(const Tableau& t);

// Inverse g(L, R): row i of the result is (i, repeated once per column of
// L of height >= i) followed by row i of R.
Tableau insert_trivial(const Tableau& trivial, const Tableau& residue);

// Append trivial columns so the shape becomes exactly `target`
// (componentwise >= shape(t) required).
Tableau complete_to_shape(const Tableau& t, const Shape& target);

// Scalar phase sign * eps_n^eps_power, eps_n = exp(i*pi/n) when floor(n/2)
// is odd and 1 otherwise; kept exact, never floated.
struct Phase {
    int sign = 1;        // +1 or -1
    int eps_power = 0;   // reduced mod 2n; forced to 0 when eps_n == 1
    bool operator==(const Phase& o) const = default;
};

// Entry reflection a -> n+1-a.  Each height-s column gets re-sorted
// (reversal sign (-1)^{s(s-1)/2}) and contributes eps_n^s.
std::pair<Tableau, Phase> tau_tableau(const Tableau& t);

// All strictly increasing s-subsets of 1..n, in canonical column order.
std::vector<Column> all_columns(int n, int s);

enum class TableauFilter { all, semistandard, quasi_standard };

// Every tableau of the given shape passing the filter, sorted by the
// container order.  Desk-scale enumeration (product of multisets of
// columns per height).
std::vector<Tableau> enumerate_tableaux(int n, const Shape& shape, TableauFilter f);

}  // namespace shapes

#endif
