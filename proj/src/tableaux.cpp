#include "shapes/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shapes {

bool column_before(const Column& a, const Column& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    for (size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
}

static void check_column(int n, const Column& c) {
    if (c.empty() || static_cast<int>(c.size()) >= n + 1)
        throw std::invalid_argument("column height out of range");
    int prev = 0;
    for (int e : c) {
        if (e <= prev || e > n) throw std::invalid_argument("column entries must strictly increase within 1..n");
        prev = e;
    }
}

Tableau::Tableau(int n, std::vector<Column> cols) : n_(n), cols_(std::move(cols)) {
    // Height-n columns are the determinant, identically 1 on SL(n): drop them.
    std::erase_if(cols_, [n](const Column& c) { return static_cast<int>(c.size()) == n; });
    for (const Column& c : cols_) check_column(n, c);
    std::sort(cols_.begin(), cols_.end(), column_before);
}

Tableau Tableau::from_rows(int n, const std::vector<std::vector<int>>& rows) {
    std::vector<Column> cols;
    size_t width = rows.empty() ? 0 : rows[0].size();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() > width) throw std::invalid_argument("row lengths must be non-increasing");
        width = rows[i].size();
    }
    size_t total = rows.empty() ? 0 : rows[0].size();
    for (size_t j = 0; j < total; ++j) {
        Column c;
        for (const auto& row : rows) {
            if (j < row.size()) c.push_back(row[j]);
        }
        for (size_t k = 1; k < c.size(); ++k)
            if (c[k] <= c[k - 1]) throw std::invalid_argument("rows do not assemble into strictly increasing columns");
        cols.push_back(std::move(c));
    }
    return Tableau(n, std::move(cols));
}

Tableau Tableau::parse(int n, const std::string& text) {
    std::string s = text;
    if (s.empty()) return empty(n);
    if (s.rfind("cols[", 0) == 0) {
        std::vector<Column> cols;
        Column cur;
        bool in_col = false;
        std::string num;
        auto flush_num = [&] {
            if (!num.empty()) { cur.push_back(std::stoi(num)); num.clear(); }
        };
        for (char ch : s.substr(5)) {
            if (ch == '(') { in_col = true; cur.clear(); }
            else if (ch == ')') { flush_num(); cols.push_back(cur); in_col = false; }
            else if (ch == ',' ) { if (in_col) flush_num(); }
            else if (ch >= '0' && ch <= '9') num += ch;
            else if (ch == ']' || ch == ' ') continue;
            else throw std::invalid_argument("bad column list: " + text);
        }
        return Tableau(n, std::move(cols));
    }
    std::vector<std::vector<int>> rows;
    std::stringstream line(s);
    std::string rowtext;
    while (std::getline(line, rowtext, '/')) {
        std::vector<int> row;
        std::stringstream rs(rowtext);
        int v;
        while (rs >> v) row.push_back(v);
        rows.push_back(std::move(row));
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return from_rows(n, rows);
}

int Tableau::cells() const {
    int c = 0;
    for (const Column& col : cols_) c += static_cast<int>(col.size());
    return c;
}

Shape Tableau::shape() const {
    Shape a(n_ > 0 ? n_ - 1 : 0, 0);
    for (const Column& c : cols_) a[c.size() - 1]++;
    return a;
}

std::vector<std::vector<int>> Tableau::rows() const {
    std::vector<std::vector<int>> out;
    size_t depth = cols_.empty() ? 0 : cols_[0].size();
    for (size_t i = 0; i < depth; ++i) {
        std::vector<int> row;
        for (const Column& c : cols_) {
            if (i < c.size()) row.push_back(c[i]);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string Tableau::to_text() const {
    if (cols_.empty()) return "1";  // the unit monomial
    std::string out;
    auto rws = rows();
    for (size_t i = 0; i < rws.size(); ++i) {
        if (i) out += "/";
        for (size_t j = 0; j < rws[i].size(); ++j) {
            if (j) out += " ";
            out += std::to_string(rws[i][j]);
        }
    }
    return out;
}

std::string Tableau::to_col_text() const {
    std::string out = "cols[";
    for (size_t j = 0; j < cols_.size(); ++j) {
        if (j) out += ",";
        out += "(";
        for (size_t k = 0; k < cols_[j].size(); ++k) {
            if (k) out += ",";
            out += std::to_string(cols_[j][k]);
        }
        out += ")";
    }
    return out + "]";
}

bool Tableau::operator<(const Tableau& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return cols_ < o.cols_;
}

bool is_trivial_column(const Column& c) {
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k] != static_cast<int>(k) + 1) return false;
    return true;
}

bool is_semistandard(const Tableau& t) {
    const auto& cols = t.columns();
    for (size_t j = 0; j + 1 < cols.size(); ++j) {
        for (size_t i = 0; i < cols[j + 1].size(); ++i) {
            if (cols[j][i] > cols[j + 1][i]) return false;
        }
    }
    return true;
}

std::optional<std::pair<int, int>> reducibility_witness(const Tableau& t) {
    const auto& cols = t.columns();
    int tcount = t.column_count();
    for (int j = 1; j <= tcount; ++j) {
        int cj = t.height(j - 1);
        for (int s = cj; s >= 1; --s) {
            bool top_trivial = true;
            for (int i = 0; i < s; ++i)
                if (cols[j - 1][i] != i + 1) { top_trivial = false; break; }
            if (!top_trivial) continue;
            bool has_height_s = false;
            for (int jp = j; jp <= tcount; ++jp)
                if (t.height(jp - 1) == s) { has_height_s = true; break; }
            if (!has_height_s) continue;
            bool slides = true;
            for (int k = j + 1; k <= tcount; ++k) {
                if (t.height(k - 2) > s && t.height(k - 1) >= s) {
                    if (!(cols[k - 2][s] > cols[k - 1][s - 1])) { slides = false; break; }
                }
            }
            if (slides) return std::make_pair(j, s);
        }
    }
    return std::nullopt;
}

bool is_reducible(const Tableau& t) { return reducibility_witness(t).has_value(); }

bool is_quasi_standard(const Tableau& t) {
    return is_semistandard(t) && !is_reducible(t);
}

Tableau extract_step(const Tableau& t, int j, int s) {
    auto rws = t.rows();
    for (int i = 0; i < s; ++i) {
        if (static_cast<int>(rws[i].size()) < j) throw std::invalid_argument("witness column out of range");
        rws[i].erase(rws[i].begin() + (j - 1));
    }
    return Tableau::from_rows(t.n(), rws);
}

SuperTableau extract(const Tableau& t) {
    Tableau cur = t;
    std::vector<Column> trivials;
    while (auto w = reducibility_witness(cur)) {
        auto [j, s] = *w;
        Column triv(s);
        for (int i = 0; i < s; ++i) triv[i] = i + 1;
        trivials.push_back(std::move(triv));
        cur = extract_step(cur, j, s);
    }
    return SuperTableau{Tableau(t.n(), std::move(trivials)), cur};
}

Tableau insert_trivial(const Tableau& trivial, const Tableau& residue) {
    Shape add = trivial.shape();
    auto rws = residue.rows();
    int depth = 0;
    for (size_t s = 0; s < add.size(); ++s)
        if (add[s] > 0) depth = static_cast<int>(s) + 1;
    if (static_cast<int>(rws.size()) < depth) rws.resize(depth);
    for (int i = 0; i < depth; ++i) {
        int copies = 0;  // columns of L of height >= i+1
        for (size_t s = i; s < add.size(); ++s) copies += add[s];
        rws[i].insert(rws[i].begin(), copies, i + 1);
    }
    return Tableau::from_rows(residue.n(), rws);
}

Tableau complete_to_shape(const Tableau& t, const Shape& target) {
    Shape have = t.shape();
    std::vector<Column> cols = t.columns();
    for (size_t s = 0; s < target.size(); ++s) {
        int need = target[s] - (s < have.size() ? have[s] : 0);
        if (need < 0) throw std::invalid_argument("target shape smaller than tableau shape");
        Column triv(s + 1);
        for (size_t i = 0; i <= s; ++i) triv[i] = static_cast<int>(i) + 1;
        for (int k = 0; k < need; ++k) cols.push_back(triv);
    }
    return Tableau(t.n(), std::move(cols));
}

std::pair<Tableau, Phase> tau_tableau(const Tableau& t) {
    int n = t.n();
    Phase ph;
    std::vector<Column> cols;
    for (const Column& c : t.columns()) {
        int s = static_cast<int>(c.size());
        Column rc(s);
        for (int k = 0; k < s; ++k) rc[k] = n + 1 - c[s - 1 - k];  // reflected, re-sorted ascending
        // Reflection reverses a strictly increasing list: sign of the reversal.
        if ((s * (s - 1) / 2) % 2 != 0) ph.sign = -ph.sign;
        ph.eps_power += s;
        cols.push_back(std::move(rc));
    }
    ph.eps_power %= 2 * n;
    if ((n / 2) % 2 == 0) ph.eps_power = 0;  // eps_n == 1
    return {Tableau(n, std::move(cols)), ph};
}

std::vector<Column> all_columns(int n, int s) {
    std::vector<Column> out;
    Column c(s);
    for (int i = 0; i < s; ++i) c[i] = i + 1;
    while (true) {
        out.push_back(c);
        int k = s - 1;
        while (k >= 0 && c[k] == n - (s - 1 - k)) --k;
        if (k < 0) break;
        ++c[k];
        for (int i = k + 1; i < s; ++i) c[i] = c[i - 1] + 1;
    }
    std::sort(out.begin(), out.end(), column_before);
    return out;
}

static void multisets(const std::vector<Column>& pool, int k, size_t from,
                      std::vector<Column>& cur, std::vector<std::vector<Column>>& out) {
    if (k == 0) { out.push_back(cur); return; }
    for (size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        multisets(pool, k - 1, i, cur, out);
        cur.pop_back();
    }
}

std::vector<Tableau> enumerate_tableaux(int n, const Shape& shape, TableauFilter f) {
    std::vector<std::vector<std::vector<Column>>> per_height;  // [height] -> choices
    for (size_t s = 0; s < shape.size(); ++s) {
        if (shape[s] == 0) continue;
        std::vector<std::vector<Column>> choices;
        std::vector<Column> cur;
        multisets(all_columns(n, static_cast<int>(s) + 1), shape[s], 0, cur, choices);
        per_height.push_back(std::move(choices));
    }
    std::vector<std::vector<Column>> combined{{}};
    for (const auto& choices : per_height) {
        std::vector<std::vector<Column>> next;
        for (const auto& base : combined) {
            for (const auto& add : choices) {
                auto merged = base;
                merged.insert(merged.end(), add.begin(), add.end());
                next.push_back(std::move(merged));
            }
        }
        combined = std::move(next);
    }
    std::vector<Tableau> out;
    for (auto& cols : combined) {
        Tableau t(n, std::move(cols));
        if (f == TableauFilter::semistandard && !is_semistandard(t)) continue;
        if (f == TableauFilter::quasi_standard && !is_quasi_standard(t)) continue;
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace shapes
