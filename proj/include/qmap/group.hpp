#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmap/gf2.hpp"
#include "qmap/quadmap.hpp"

namespace qmap {

/// The central extension 1 -> V -> G(Q) -> W -> 1 with factor set
/// f(w_i, w_j) = B(w_i, w_j) for i < j, Q(w_i) for i = j, 0 for i > j,
/// extended bilinearly. Elements are indices with the V bits low and the W
/// bits high: g = v | (w << n). Multiplication:
/// (v, w)(v', w') = (v + v' + f(w, w'), w + w').
class FiniteTwoGroup {
public:
    /// Requires m + n <= 20.
    static FiniteTwoGroup build(const QuadraticMap& q);

    /// Arbitrary factor set on W x W (not necessarily bilinear); used for
    /// negative controls.
    static FiniteTwoGroup from_factor_function(
        int m, int n, std::function<BitVector(const BitVector&, const BitVector&)> f);

    int m() const { return m_; }
    int n() const { return n_; }
    std::size_t order() const { return std::size_t{1} << (m_ + n_); }

    unsigned identity() const { return 0; }
    unsigned mul(unsigned a, unsigned b) const;
    unsigned inverse(unsigned a) const;

    BitVector v_part(unsigned g) const;
    BitVector w_part(unsigned g) const;
    unsigned encode(const BitVector& v, const BitVector& w) const;

    BitVector factor(const BitVector& w, const BitVector& w2) const { return f_(w, w2); }

private:
    int m_ = 0, n_ = 0;
    std::function<BitVector(const BitVector&, const BitVector&)> f_;
};

struct StructureReport {
    bool associative = false;
    bool squares_match = false;     // (0,w)^2 = (Q(w), 0)
    bool commutators_match = false; // [(0,w),(0,w')] = (B(w,w'), 0)
    bool v_central = false;
    bool quotient_elementary = false;  // every square lands in V
    std::optional<std::string> witness;  // first failed identity

    bool ok() const {
        return associative && squares_match && commutators_match && v_central &&
               quotient_elementary;
    }
};

/// Exhaustive dictionary checks; associativity over all W triples (2^{3m},
/// requires m <= 8), the rest over pairs.
StructureReport verify_structure(const FiniteTwoGroup& g, const QuadraticMap& q);

/// Element indices of the center, ascending.
std::vector<unsigned> center(const FiniteTwoGroup& g);

/// Basis (in V) of the Frattini subgroup, which for these groups is the span
/// of all squares and commutators inside the central subgroup V.
std::vector<BitVector> frattini_basis(const FiniteTwoGroup& g);

/// Maximal rank of an elementary abelian subgroup, by recursive search over
/// commuting involutions.
int two_rank(const FiniteTwoGroup& g);

/// Group homomorphism G1 -> G2 as a full value table, together with the
/// correction t: W1 -> V2 solving (delta t)(w,w') = f2(fW w, fW w') + fV(f1(w,w')).
struct GroupHom {
    std::vector<unsigned> table;   // indexed by elements of G1
    std::vector<BitVector> t;      // t[w index], vectors in V2
};

/// Realizes a verified Quad morphism as a homomorphism G(Q1) -> G(Q2).
/// Throws std::logic_error when the linear system is inconsistent (cannot
/// happen for a verified morphism).
GroupHom realize_morphism(const QuadMorphism& phi, const QuadraticMap& q1,
                          const QuadraticMap& q2);

/// Exhaustive check over all pairs; requires |G1|^2 <= 2^{20}.
bool is_homomorphism(const FiniteTwoGroup& g1, const FiniteTwoGroup& g2,
                     const std::vector<unsigned>& table);

/// Matrix over Z/4 with entries 0..3.
using Z4Matrix = std::vector<std::vector<std::uint8_t>>;

/// The Z/4[W]-lattice M with action w -> I + 2 L(w) mod 4.
struct LatticeM {
    int n = 0;
    PolyMatrix l;

    Z4Matrix action(const BitVector& w) const;
    /// (I+2L(w))(I+2L(w')) = I+2L(w+w') mod 4 over all pairs; m <= 12.
    bool multiplicative() const;
};

LatticeM lattice_m(const PolyMatrix& l);

/// One "a b ab" line per pair, for external cross-checking. Order <= 2^8.
std::string multiplication_table_text(const FiniteTwoGroup& g);

}  // namespace qmap
