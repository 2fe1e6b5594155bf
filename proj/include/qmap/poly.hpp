#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmap/gf2.hpp"

namespace qmap {

/// Monomial in a fixed number of variables, as an exponent vector.
/// Canonical order is graded lexicographic with x1 > x2 > ... > xm.
struct Monomial {
    std::vector<std::uint8_t> exp;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}

    int degree() const {
        int d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    bool operator==(const Monomial&) const = default;

    Monomial times(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
        return r;
    }
};

/// true when a is strictly larger than b in graded lex.
bool graded_lex_greater(const Monomial& a, const Monomial& b);

/// All monomials of the given degree, in descending graded-lex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Polynomial over F2: a set of monomials with coefficient 1.
/// Terms are kept sorted in descending graded-lex order with no duplicates;
/// addition is symmetric difference, the zero polynomial is the empty set.
class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly one(int nvars);
    static Poly variable(int nvars, int i);  // 0-based index
    static Poly from_monomial(int nvars, Monomial m);
    static Poly from_terms(int nvars, std::vector<Monomial> terms);  // sorts + cancels

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Max term degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.front().degree(); }
    bool is_homogeneous() const;
    Poly homogeneous_component(int d) const;

    Poly operator+(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly&) const = default;

    bool eval(const BitVector& point) const;

    /// Substitutes images[i] for x_{i+1}; images live in a common ring.
    Poly substitute(const std::vector<Poly>& images) const;

    /// Same polynomial viewed in a ring with more variables (indices kept).
    Poly widened(int new_nvars) const;
    /// Variable x_i renamed to x_{i+shift}, in a ring with new_nvars variables.
    Poly shifted(int shift, int new_nvars) const;

    std::string str() const;

private:
    int nvars_ = 0;
    std::vector<Monomial> terms_;
};

/// The Bockstein derivation: F2-linear, Leibniz, beta(x_i) = x_i^2.
Poly bockstein(const Poly& f);

/// Parses "x1^2 + x1*x3" style input (grammar: poly := term ('+' term)*;
/// term := factor ('*' factor)*; factor := 'x'UINT ('^'UINT)?). Variable
/// indices are 1-based and must lie in [1, nvars].
Poly parse_poly(const std::string& text, int nvars);

/// Matrix with polynomial entries.
struct PolyMatrix {
    int rows = 0, cols = 0, nvars = 0;
    std::vector<Poly> entries;

    PolyMatrix() = default;
    PolyMatrix(int r, int c, int nv)
        : rows(r), cols(c), nvars(nv), entries(static_cast<std::size_t>(r) * c, Poly(nv)) {}

    Poly& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const Poly& at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * cols + c];
    }

    bool operator==(const PolyMatrix&) const = default;

    bool is_zero() const;

    /// Entrywise sum.
    PolyMatrix operator+(const PolyMatrix& o) const;
    /// Matrix product.
    PolyMatrix mul(const PolyMatrix& o) const;
    /// Applies the matrix to a column of polynomials.
    std::vector<Poly> apply(const std::vector<Poly>& v) const;

    /// Entrywise Bockstein.
    PolyMatrix bocksteined() const;

    /// Evaluates every entry at a point, giving a scalar matrix.
    BitMatrix eval(const BitVector& point) const;

    /// true when every nonzero entry is homogeneous of the given degree.
    bool entries_homogeneous_of_degree(int d) const;
};

/// Scalar matrix lifted to a PolyMatrix of constants.
PolyMatrix poly_matrix_from_bits(const BitMatrix& m, int nvars);

}  // namespace qmap
