#pragma once

#include <map>
#include <vector>

#include "qmap/poly.hpp"
#include "qmap/quadmap.hpp"

namespace qmap {

/// The graded quotient A*(Q) = F2[x1..xm]/(q1..qn), truncated at max_degree.
///
/// Per degree d the span of {mu * q_k : deg mu = d-2} is row-reduced over the
/// degree-d monomial basis (columns in descending graded-lex order, so the
/// pivot of each row is its graded-lex largest monomial). The non-pivot
/// monomials form the normal-form basis of A^d(Q).
class QuotientAlgebra {
public:
    QuotientAlgebra(std::vector<Poly> generators, int nvars, int max_degree);

    int nvars() const { return nvars_; }
    int max_degree() const { return max_degree_; }
    const std::vector<Poly>& generators() const { return gens_; }

    const std::vector<Monomial>& monomials(int d) const { return deg_[d].mons; }
    const std::vector<Monomial>& basis(int d) const { return deg_[d].basis; }
    int dim(int d) const { return static_cast<int>(deg_[d].basis.size()); }

    /// Idempotent, F2-linear; zero exactly on ideal members (within the
    /// truncation). Inhomogeneous input is reduced per degree component.
    Poly normal_form(const Poly& f) const;

    /// Coefficients h_k with f + normal_form(f) = sum_k h_k * q_k in F2[x].
    std::vector<Poly> reduction_certificate(const Poly& f) const;

    std::vector<int> hilbert_series() const;

    /// Coordinates of a normal-form degree-d element in basis(d).
    BitVector coords(const Poly& f, int d) const;
    Poly from_coords(const BitVector& c, int d) const;

private:
    struct DegreeData {
        std::vector<Monomial> mons;   // descending graded-lex
        std::map<std::vector<std::uint8_t>, int> index;
        std::vector<Monomial> basis;  // non-pivot monomials
        std::map<std::vector<std::uint8_t>, int> basis_index;
        // Reduced relation rows; main part over mons, cert part over relations.
        std::vector<BitVector> rows, certs;
        std::vector<int> pivot_col;            // per row
        std::vector<int> pivot_row_of_col;     // -1 when the column is free
        std::vector<std::pair<int, Monomial>> rel_tags;  // (generator k, mu)
    };
    std::vector<DegreeData> deg_;
    std::vector<Poly> gens_;
    int nvars_, max_degree_;

    void reduce_component(int d, BitVector& vec, BitVector* cert) const;
};

struct RegularityReport {
    bool square;    // m == n
    bool regular;   // meaningful only when square
    bool finite;    // quotient vanishes within the truncation
    std::vector<int> dims;
};

/// Regularity via finite-dimensionality: for n quadrics in n variables the
/// sequence is regular iff A^{n+1}(Q) = 0, since the quotient is generated in
/// degree 1 and a regular sequence forces Hilbert series (1+t)^n.
RegularityReport is_regular_sequence(const QuadraticMap& q, int truncation = -1);

}  // namespace qmap
