#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qmap/gf2.hpp"
#include "qmap/poly.hpp"

namespace qmap {

/// Quadratic map Q: W -> V over F2, given by its values on a basis of W
/// together with the polar bilinear table B(w_i, w_j).
class QuadraticMap {
public:
    /// b_table[i][j] = B(w_i, w_j); only i < j entries are read, the rest is
    /// filled in by symmetry (B(w, w) = 0).
    QuadraticMap(int m, int n, std::vector<BitVector> q_on_basis,
                 std::vector<std::vector<BitVector>> b_table);

    static QuadraticMap zero(int m, int n);

    /// Builds the map from a pointwise function, validating the polar identity
    /// when m is small enough to enumerate.
    static QuadraticMap from_function(int m, int n,
                                      const std::function<BitVector(const BitVector&)>& f);

    /// Recovers (q_on_basis, b_table) from a column of homogeneous degree-2
    /// polynomials in m variables. Throws on non-quadratic input.
    static QuadraticMap from_polys(const std::vector<Poly>& q, int m);

    int dim_w() const { return m_; }
    int dim_v() const { return n_; }

    const BitVector& value_on_basis(int i) const { return q_basis_[i]; }
    const BitVector& bilinear_on_basis(int i, int j) const { return b_[i][j]; }

    BitVector eval(const BitVector& w) const;
    /// Bilinear extension of the polar form.
    BitVector bilinear(const BitVector& w, const BitVector& w2) const;

    /// The extension class: column of n homogeneous degree-2 polynomials,
    /// q_k = sum_i Q_k(w_i) x_i^2 + sum_{i<j} B_k(w_i,w_j) x_i x_j.
    std::vector<Poly> extension_class() const;

    bool operator==(const QuadraticMap&) const = default;

private:
    int m_, n_;
    std::vector<BitVector> q_basis_;
    std::vector<std::vector<BitVector>> b_;
};

/// Morphism of quadratic maps: a pair of matrices with Q2(f_W w) = f_V(Q1 w).
struct QuadMorphism {
    BitMatrix f_w;  // m2 x m1
    BitMatrix f_v;  // n2 x n1
};

QuadMorphism identity_morphism(const QuadraticMap& q);
QuadMorphism compose(const QuadMorphism& g, const QuadMorphism& f);

/// Checks the commuting square pointwise on all basis vectors and pairwise
/// sums (enough by the polar identity).
bool verify_morphism(const QuadMorphism& f, const QuadraticMap& q1,
                     const QuadraticMap& q2);

/// Checks (f_W)^*(q2) = (f_V)_*(q1) on extension classes by substituting
/// linear forms into q2.
bool pullback_check(const QuadMorphism& f, const QuadraticMap& q1,
                    const QuadraticMap& q2);

/// A quadratic map realized on a subspace (or subquotient), together with the
/// vectors of the ambient spaces giving its basis.
struct RestrictedMap {
    QuadraticMap map;
    std::vector<BitVector> basis_w;  // vectors in the ambient W
    std::vector<BitVector> basis_v;  // vectors in the ambient V
};

RestrictedMap kernel(const QuadMorphism& f, const QuadraticMap& q1,
                     const QuadraticMap& q2);
RestrictedMap image(const QuadMorphism& f, const QuadraticMap& q1,
                    const QuadraticMap& q2);

bool is_injective(const QuadMorphism& f, const QuadraticMap& q1,
                  const QuadraticMap& q2);

/// f must be injective; true iff B2(f_W(w1), w2) lies in Im f_V for all basis
/// pairs.
bool is_normal_embedding(const QuadMorphism& f, const QuadraticMap& q1,
                         const QuadraticMap& q2);

/// Cokernel of a normal embedding, on coset representatives chosen as the
/// complement of the pivot columns of f_W / f_V in reduced row echelon form.
/// Throws when f is not a normal embedding.
RestrictedMap cokernel(const QuadMorphism& f, const QuadraticMap& q1,
                       const QuadraticMap& q2);

bool is_frattini(const QuadraticMap& q);
/// Exhaustive over 2^m points; requires m <= 24.
bool is_effective(const QuadraticMap& q);
bool is_two_power_exact(const QuadraticMap& q);

enum class Family { gl, sl, u };

/// Matrix families with Q(A) = A^2 + A; basis is row-major over admissible
/// entries.
QuadraticMap family(Family kind, int size);

}  // namespace qmap
