#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qmap/cohomology.hpp"
#include "qmap/ideal.hpp"

namespace qmap {

/// Dimensions of a spectral sequence page per total degree.
struct BPage {
    int max_degree = 0;
    std::vector<int> dims;  // dims[s] for s = 0 .. dims.size()-1
    std::string provenance;  // "B1", "direct" or "decomposition"
};

/// Model of the first Bockstein page: the algebra F2[s_1..s_n] (x) A*(Q) with
/// s_i in degree 2, with beta extended as a derivation by beta(x_i) = x_i^2
/// (reduced to normal form) and beta(s_j) = (L s)_j + eta_j.
///
/// Basis of total degree s: pairs s^a (x) mu with mu in the normal-form basis
/// of A^(s - 2|a|); s-monomials in descending graded-lex order, outer loop
/// over |a| ascending.
class B1Page {
public:
    /// eta is a column of n degree-3 polynomials (empty means zero).
    B1Page(const QuadraticMap& q, const PolyMatrix& l, std::vector<Poly> eta,
           int max_degree);

    int max_degree() const { return max_degree_; }
    int n() const { return n_; }
    const QuotientAlgebra& algebra() const { return *a_; }

    struct BasisElem {
        Monomial s_part;  // exponent over s_1..s_n
        Monomial a_part;  // normal-form monomial of A*(Q)
    };
    const std::vector<BasisElem>& basis(int s) const { return basis_[s]; }
    int dim(int s) const { return static_cast<int>(basis_[s].size()); }
    std::vector<int> dims() const;

    /// Matrix of beta from total degree s to s+1 (s <= max_degree-1).
    const BitMatrix& beta_matrix(int s) const { return beta_[s]; }

    /// beta of a single basis element, as coordinates in degree s+1.
    BitVector beta_of(int s, int index) const;

private:
    const QuadraticMap* q_;
    PolyMatrix l_;
    std::vector<Poly> eta_;
    std::unique_ptr<QuotientAlgebra> a_;
    int n_, max_degree_;
    std::vector<std::vector<BasisElem>> basis_;
    std::vector<std::map<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>, int>>
        index_;
    std::vector<BitMatrix> beta_;

    BitVector element_coords(int s, const std::vector<std::pair<Monomial, Poly>>& terms) const;
};

BPage b1_dims(const B1Page& page);

/// dim B2^s = dim ker(beta_s) - rank(beta_{s-1}), for s <= max_degree-1.
BPage b2_direct(const B1Page& page);

/// dim B2^s = sum_i dim H^(s-2i)(Q, Sym^i(L)); valid under eta = 0.
BPage b2_decomposition(const QuadraticMap& q, const PolyMatrix& l, int max_degree);

/// Degrees s > 0 with B2^s != 0: torsion of exponent at least 4 is present.
std::vector<int> torsion_report(const BPage& b2);

}  // namespace qmap
