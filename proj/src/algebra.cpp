#include "tfpl/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace tfpl {

std::string LaurentPoly::to_string() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeff_) {
        if (!first) os << " + ";
        os << c.str() << "*q^" << e;
        first = false;
    }
    return os.str();
}

Eisenstein rho_power(int e) {
    // rho^0..rho^5 = 1, rho, rho-1, -1, -rho, 1-rho
    static const Eisenstein table[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    int r = e % 6;
    if (r < 0) r += 6;
    return table[r];
}

Eisenstein eval_at_rho(const LaurentPoly& p) {
    Eisenstein s;
    for (auto& [e, c] : p.terms()) s = s + Eisenstein(c, 0) * rho_power(e);
    return s;
}

int FeasibilityMatrix::index_of(const Word& w) const {
    auto it = std::find(order.begin(), order.end(), w);
    if (it == order.end()) throw std::invalid_argument("word not in matrix order: " + w);
    return static_cast<int>(it - order.begin());
}

const LaurentPoly& FeasibilityMatrix::at(const Word& row, const Word& col) const {
    return entries[index_of(row)][index_of(col)];
}

FeasibilityMatrix feasibility_matrix(int zeros, int ones) {
    if (zeros < 0 || ones < 0) throw std::invalid_argument("negative content");
    FeasibilityMatrix m;
    m.order = words_with_content(zeros, ones);
    std::sort(m.order.begin(), m.order.end(), [](const Word& a, const Word& b) {
        int da = inversions(a), db = inversions(b);
        if (da != db) return da < db;
        return a < b;
    });
    int n = m.size();
    m.entries.assign(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (auto& [wp, g] : feasibility(m.order[i]))
            m.entries[i][m.index_of(wp)] = LaurentPoly::q_power(g);
    // lower unitriangular under this order
    for (int i = 0; i < n; ++i) {
        assert(m.entries[i][i] == LaurentPoly(1));
        for (int j = i + 1; j < n; ++j) assert(m.entries[i][j].is_zero());
    }
    return m;
}

FeasibilityMatrix invert_unitriangular(const FeasibilityMatrix& m) {
    int n = m.size();
    FeasibilityMatrix inv;
    inv.order = m.order;
    inv.entries.assign(n, std::vector<LaurentPoly>(n));
    for (int j = 0; j < n; ++j) {
        inv.entries[j][j] = LaurentPoly(1);
        for (int i = j + 1; i < n; ++i) {
            LaurentPoly s;
            for (int k = j; k < i; ++k)
                if (!m.entries[i][k].is_zero() && !inv.entries[k][j].is_zero())
                    s += m.entries[i][k] * inv.entries[k][j];
            inv.entries[i][j] = -s;
        }
    }
    return inv;
}

Int integer_determinant(std::vector<std::vector<Int>> a) {
    int n = static_cast<int>(a.size());
    for (auto& row : a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("not square");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                Int q = a[i][j] / prev;
                assert(q * prev == a[i][j]);  // Bareiss division is exact
                a[i][j] = q;
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Int determinant_cofactor(const std::vector<std::vector<Int>>& a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Int det = 0;
    for (int j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c)
                if (c != j) minor[i - 1][cc++] = a[i][c];
        }
        Int term = a[0][j] * determinant_cofactor(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int ssyt_count(const Shape& lambda, int m) {
    if (m <= 0) return lambda.empty() ? 1 : 0;
    Shape conj = lambda.conjugate();
    Int num = 1, den = 1;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.parts[i]; ++j) {
            num *= m + j - i;                                   // content
            den *= lambda.parts[i] - j + conj.parts[j] - i - 1;  // hook
            if (num == 0) return 0;
        }
    Int r = num / den;
    assert(r * den == num);
    return r;
}

Int ssyt_count_enumerate(const Shape& lambda, int m) {
    if (m <= 0) return lambda.empty() ? 1 : 0;
    if (lambda.empty()) return 1;
    int rows = lambda.rows();
    std::vector<std::vector<int>> t(rows);
    for (int i = 0; i < rows; ++i) t[i].assign(lambda.parts[i], 0);
    Int count = 0;
    // fill cells row-major with row-weak / column-strict constraints
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < lambda.parts[i]; ++j) cells.emplace_back(i, j);
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[k];
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);
        if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= m; ++v) {
            t[i][j] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return count;
}

Int lr_coefficient(const Shape& mu, const Shape& nu, const Shape& lambda) {
    if (lambda.cells() != mu.cells() + nu.cells()) return 0;
    if (!lambda.contains(mu)) return 0;
    if (nu.empty()) return lambda == mu ? 1 : 0;
    int rows = lambda.rows();
    int kmax = nu.rows();
    std::vector<std::vector<int>> t(rows);
    for (int i = 0; i < rows; ++i) t[i].assign(lambda.row(i), 0);  // 0 in mu-cells
    std::vector<int> remaining(nu.parts.begin(), nu.parts.end());
    std::vector<int> placed(kmax, 0);  // counts along the reverse reading word

    // cells of lambda/mu in reverse reading order: rows top to bottom,
    // within a row right to left -- lattice condition checked incrementally.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < rows; ++i)
        for (int j = lambda.row(i) - 1; j >= mu.row(i); --j) cells.emplace_back(i, j);

    Int count = 0;
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[k];
        for (int v = 1; v <= kmax; ++v) {
            if (remaining[v - 1] == 0) continue;
            if (v > 1 && placed[v - 2] <= placed[v - 1]) continue;  // lattice
            if (j + 1 < lambda.row(i) && t[i][j + 1] < v) continue;  // row weak (reversed scan)
            if (i > 0 && j >= mu.row(i - 1) && t[i - 1][j] >= v) continue;  // column strict
            t[i][j] = v;
            --remaining[v - 1];
            ++placed[v - 1];
            self(self, k + 1);
            ++remaining[v - 1];
            --placed[v - 1];
            t[i][j] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

namespace {

// Sparse polynomial in nvars variables, exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Int>;

Poly schur_poly(const Shape& lambda, int nvars) {
    Poly p;
    if (lambda.rows() > nvars) return p;
    if (lambda.empty()) {
        p[std::vector<int>(nvars, 0)] = 1;
        return p;
    }
    int rows = lambda.rows();
    std::vector<std::vector<int>> t(rows);
    for (int i = 0; i < rows; ++i) t[i].assign(lambda.parts[i], 0);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < lambda.parts[i]; ++j) cells.emplace_back(i, j);
    std::vector<int> expo(nvars, 0);
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == cells.size()) {
            p[expo] += 1;
            return;
        }
        auto [i, j] = cells[k];
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);
        if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= nvars; ++v) {
            t[i][j] = v;
            ++expo[v - 1];
            self(self, k + 1);
            --expo[v - 1];
        }
    };
    rec(rec, 0);
    return p;
}

bool is_partition_vector(const std::vector<int>& e) {
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i - 1] < e[i]) return false;
    return true;
}

}  // namespace

Int lr_coefficient_monomial(const Shape& mu, const Shape& nu, const Shape& lambda) {
    if (lambda.cells() != mu.cells() + nu.cells()) return 0;
    int nvars = std::max(lambda.rows(), std::max(mu.rows() + nu.rows(), 1));
    Poly prod;
    {
        Poly pm = schur_poly(mu, nvars), pn = schur_poly(nu, nvars);
        for (auto& [ea, ca] : pm)
            for (auto& [eb, cb] : pn) {
                std::vector<int> e(nvars);
                for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
                prod[e] += ca * cb;
            }
    }
    Int answer = 0;
    // Peel off Schur polynomials from the top: the lex-greatest remaining
    // monomial of a symmetric polynomial is the leading term x^kappa of some
    // s_kappa, with kappa a partition.
    while (!prod.empty()) {
        while (!prod.empty() && prod.rbegin()->second == 0) prod.erase(std::prev(prod.end()));
        if (prod.empty()) break;
        std::vector<int> kappa = prod.rbegin()->first;
        Int c = prod.rbegin()->second;
        assert(is_partition_vector(kappa) && "leading monomial must be a partition");
        Shape sk(std::vector<int>(kappa.begin(), kappa.end()));
        if (sk == lambda) answer += c;
        Poly ps = schur_poly(sk, nvars);
        for (auto& [e, cc] : ps) {
            auto jt = prod.find(e);
            Int nv = (jt == prod.end() ? Int(0) : jt->second) - c * cc;
            if (nv == 0) {
                if (jt != prod.end()) prod.erase(jt);
            } else {
                prod[e] = nv;
            }
        }
    }
    return answer;
}

}  // namespace tfpl
