#pragma once

#include <optional>
#include <vector>

#include "qmap/gf2.hpp"
#include "qmap/poly.hpp"
#include "qmap/quadmap.hpp"

namespace qmap {

/// Affine solution set of beta(q) = Lq over matrices of linear forms.
struct LSolution {
    PolyMatrix particular;               // n x n, degree-1 entries
    std::vector<PolyMatrix> kernel;      // K with K q = 0
    bool unique() const { return kernel.empty(); }
};

/// Solves beta(q) = Lq for L by coefficient-wise comparison in degree 3.
/// nullopt means Q is not Bockstein closed.
std::optional<LSolution> solve_l(const QuadraticMap& q);

/// Representation of Q on U: R encodes rho_W (k x k, degree-1 entries in the
/// x's), T encodes rho_V as scalar matrices with T(q) = sum_j T_j q_j.
struct QModule {
    int k = 0;
    PolyMatrix R;
    std::vector<BitMatrix> T;

    static QModule trivial(int k, const QuadraticMap& q);
};

/// True iff beta(R) + R^2 = T(q) exactly in F2[x] (Lemma condition for
/// rho = (rho_W, rho_V) being a representation).
bool check_representation(const QModule& mod, const QuadraticMap& q);

/// Builds the canonical Q-module on V from a solved L: decomposes every entry
/// of beta(L) + L^2 as sum_j T_j q_j. nullopt when some entry is outside the
/// span of the q_j (possible when q is not a regular sequence).
std::optional<QModule> module_from_l(const QuadraticMap& q, const PolyMatrix& l);

/// Completes an arbitrary rho_W matrix to a QModule the same way.
std::optional<QModule> complete_module(const QuadraticMap& q, const PolyMatrix& r);

/// Bilinear map P: V x W -> V stored as matrices P_a with
/// P(v, w)_a = sum_{b,c} P_a[b][c] v_b w_c.
using BilinearP = std::vector<BitMatrix>;

/// Searches for P with P(Q(w), w') = B(w,w') + P(B(w,w'), w) for all w, w'
/// (exhaustive point enumeration; requires m <= 12).
std::optional<BilinearP> check_p(const QuadraticMap& q);

/// Adjoint dictionary Z <-> T with Z(i) e_j = T(j) e_i. Z is k x n with
/// degree-1 entries in z_1..z_k.
PolyMatrix t_to_z(const std::vector<BitMatrix>& t, int k);
std::vector<BitMatrix> z_to_t(const PolyMatrix& z, int n);

/// Verifies Z q = T(q) z in the bigraded ring F2[x_1..x_m, z_1..z_k].
bool adjoint_identity_holds(const PolyMatrix& z, const std::vector<BitMatrix>& t,
                            const QuadraticMap& q);

}  // namespace qmap
