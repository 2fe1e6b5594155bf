#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qmap/bockstein.hpp"
#include "qmap/ideal.hpp"

namespace qmap {

/// Element of C^p(Q, U) = A^p(Q) (x) U: a column of module_dim polynomials,
/// each reduced to normal form.
struct Cochain {
    int degree = 0;
    std::vector<Poly> entries;

    bool is_zero() const {
        for (auto& e : entries)
            if (!e.is_zero()) return false;
        return true;
    }
    bool operator==(const Cochain&) const = default;
};

struct CohomologyGroup {
    int p = 0;
    int dim = 0;
    std::vector<Cochain> representatives;  // cocycles, independent modulo coboundaries
};

/// The cochain complex C*(Q, U) with differential delta(f) = beta(f) + R f.
/// The module must satisfy the representation condition (delta^2 = 0 depends
/// on it); the constructor rejects modules that fail it.
class CochainComplex {
public:
    CochainComplex(const QuadraticMap& q, QModule mod, const QuotientAlgebra& a);

    const QuadraticMap& quad() const { return *q_; }
    const QModule& module() const { return mod_; }
    const QuotientAlgebra& algebra() const { return *a_; }

    int module_dim() const { return mod_.k; }
    int cochain_dim(int p) const { return a_->dim(p) * mod_.k; }
    /// Largest p for which delta_p is available.
    int max_p() const { return a_->max_degree() - 1; }

    Cochain normalize(int degree, std::vector<Poly> entries) const;
    Cochain zero(int degree) const;

    Cochain differential(const Cochain& c) const;
    const BitMatrix& delta_matrix(int p) const;

    BitVector to_coords(const Cochain& c) const;
    Cochain from_coords(int p, const BitVector& v) const;

    CohomologyGroup cohomology(int p) const;

    bool is_cocycle(const Cochain& c) const;
    /// Solves c = delta(xi); nullopt when c is not a coboundary.
    std::optional<Cochain> coboundary_preimage(const Cochain& c) const;

private:
    const QuadraticMap* q_;
    QModule mod_;
    const QuotientAlgebra* a_;
    mutable std::vector<std::optional<BitMatrix>> delta_cache_;
};

/// Basis of U^Q = {u : rho_W(w) u = 0 for all w}, the joint kernel of the
/// coefficient matrices of R.
std::vector<BitVector> invariants(const QModule& mod, int m);

/// Z(Q)^beta = {sum c_k q_k : beta of it is 0 in F2[x]}, a subspace of
/// span{q_k}; returns one coefficient vector per basis element, so the count
/// is not inflated by linear dependencies among the q_k.
std::vector<BitVector> bockstein_invariants(const QuadraticMap& q);

/// Extension of Q by U built from a 2-cocycle:
/// Qt(u, w) = (u + rho_W(w) u + f(w), Q(w)) on U (+) W -> U (+) V.
/// Throws when f is not a cocycle.
QuadraticMap cocycle_to_extension(const CochainComplex& cx, const Cochain& f);

/// An extension 0 -> U -> total -> Q -> 0 in Quad with abelian kernel U.
struct QuadExtension {
    QuadraticMap total;
    QuadMorphism incl;  // U -> total (with the identity map on U as source)
    QuadMorphism proj;  // total -> Q
};

bool validate_extension(const QuadExtension& e, const QuadraticMap& base);

/// Recovers the module action and the factor set of an extension; the module
/// completion fails (nullopt) only when beta(R)+R^2 escapes the span of q.
std::optional<std::pair<QModule, Cochain>> extension_to_cocycle(
    const QuadExtension& e, const QuadraticMap& base, const QuotientAlgebra& a);

/// Solves f2 + f1 = (1 + rho(w)) a(w) + b(Q(w)) for linear maps a: W -> U and
/// b: V -> U; nullopt means the extensions are inequivalent.
std::optional<std::pair<BitMatrix, BitMatrix>> extensions_equivalent(
    const CochainComplex& cx, const Cochain& f1, const Cochain& f2);

/// All sections of the split extension 0 -> U -> U x| Q -> Q -> 0, one per
/// element of H^1(Q, U) (the trivial section included).
std::vector<QuadMorphism> splittings(const CochainComplex& cx);

/// Cup product for trivial coefficients: [f][g] = [fg]. Throws on a
/// nontrivial module.
Cochain cup(const CochainComplex& cx, const Cochain& f, const Cochain& g);

/// The i-th symmetric power of the module given by L (an n x n matrix of
/// linear forms acting on V).
std::optional<QModule> sym_power_module(const QuadraticMap& q, const PolyMatrix& l,
                                        int i);

enum class ObstructionStatus { NotCocycle, Coboundary, NontrivialClass };

struct ObstructionResult {
    ObstructionStatus status;
    std::optional<Cochain> xi;  // with eta = delta(xi) when Coboundary
};

/// Tests the degree-3 obstruction class [eta] in H^3(Q, L).
ObstructionResult obstruction_test(const CochainComplex& cx, const Cochain& eta);

}  // namespace qmap
