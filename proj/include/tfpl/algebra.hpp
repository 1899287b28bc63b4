#pragma once

// Exact coefficient rings (Laurent polynomials in q, Z[rho]), the
// feasibility matrix M and its unitriangular inverse, integer determinants,
// Littlewood-Richardson coefficients and hook-content SSYT counts.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "tfpl/words.hpp"

namespace tfpl {

using Int = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Laurent polynomials in q with integer coefficients.

class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(Int c) {
        if (c != 0) coeff_[0] = std::move(c);
    }
    LaurentPoly(Int c, int e) {
        if (c != 0) coeff_[e] = std::move(c);
    }

    static LaurentPoly q_power(int e) { return LaurentPoly(1, e); }

    bool is_zero() const { return coeff_.empty(); }
    const std::map<int, Int>& terms() const { return coeff_; }

    Int coeff(int e) const {
        auto it = coeff_.find(e);
        return it == coeff_.end() ? Int(0) : it->second;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.coeff_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.coeff_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.coeff_)
            for (auto& [eb, cb] : b.coeff_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const Int& c, const LaurentPoly& a) {
        return LaurentPoly(c) * a;
    }

    bool operator==(const LaurentPoly& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    Int eval_at_one() const {
        Int s = 0;
        for (auto& [e, c] : coeff_) s += c;
        return s;
    }

    // "c0*q^e0 + c1*q^e1 + ..." ascending in e; "0" when empty.
    std::string to_string() const;

    void add_term(int e, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = coeff_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeff_.erase(it);
        }
    }

  private:
    std::map<int, Int> coeff_;  // exponent -> nonzero coefficient
};

// ---------------------------------------------------------------------------
// Z[rho] with rho^2 = rho - 1 (rho a primitive sixth root of unity).

struct Eisenstein {
    Int a, b;  // a + b*rho

    Eisenstein(Int a_ = 0, Int b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}

    friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
        // (a+b rho)(c+d rho) = ac + (ad+bc) rho + bd (rho-1)
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    bool operator==(const Eisenstein& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Eisenstein& o) const { return !(*this == o); }

    std::string to_string() const {
        return a.str() + (b >= 0 ? "+" : "") + b.str() + "*rho";
    }
};

// rho^e for any integer e (rho^6 = 1, rho^-1 = 1 - rho).
Eisenstein rho_power(int e);

// Substitute q = rho. Ring homomorphism LaurentPoly -> Z[rho].
Eisenstein eval_at_rho(const LaurentPoly& p);

// ---------------------------------------------------------------------------
// Feasibility matrix M(N0,N1)

// Rows and columns indexed by the words with N0 zeros and N1 ones, sorted by
// (d, lex) -- a linear extension of dominance, so M is lower unitriangular.
struct FeasibilityMatrix {
    std::vector<Word> order;
    std::vector<std::vector<LaurentPoly>> entries;  // entries[row][col]

    int size() const { return static_cast<int>(order.size()); }
    int index_of(const Word& w) const;
    const LaurentPoly& at(const Word& row, const Word& col) const;
};

FeasibilityMatrix feasibility_matrix(int zeros, int ones);

// Exact inverse of a lower unitriangular matrix by forward substitution.
FeasibilityMatrix invert_unitriangular(const FeasibilityMatrix& m);

// ---------------------------------------------------------------------------
// Determinants

// Fraction-free Bareiss elimination; exact.
Int integer_determinant(std::vector<std::vector<Int>> a);

// Cofactor expansion, test oracle for integer_determinant.
Int determinant_cofactor(const std::vector<std::vector<Int>>& a);

// ---------------------------------------------------------------------------
// Symmetric-function counts

// Number of SSYT of shape lambda with entries in {1..m} (hook-content
// product, exact). For m <= 0 this is 1 if lambda is empty and 0 otherwise.
Int ssyt_count(const Shape& lambda, int m);

// Test oracle: exhaustive SSYT enumeration.
Int ssyt_count_enumerate(const Shape& lambda, int m);

// Littlewood-Richardson coefficient c^lambda_{mu,nu} via the tableau rule:
// skew SSYT of lambda/mu with content nu whose reverse reading word is a
// lattice word.
Int lr_coefficient(const Shape& mu, const Shape& nu, const Shape& lambda);

// Independent oracle: expand s_mu * s_nu in monomials and peel off Schur
// leading terms.
Int lr_coefficient_monomial(const Shape& mu, const Shape& nu, const Shape& lambda);

// c_{u,v}^w = c^{lambda(w)}_{lambda(u),lambda(v)} for words.
inline Int lr_of_words(const Word& u, const Word& v, const Word& w) {
    return lr_coefficient(shape_of(u), shape_of(v), shape_of(w));
}

Int binomial(int n, int k);

}  // namespace tfpl
