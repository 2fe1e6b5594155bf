#pragma once

#include <vector>

#include "qmap/group.hpp"
#include "qmap/quadmap.hpp"

namespace qmap {

/// Mod-2 Betti numbers b_0..b_max_degree of a finite 2-group, via a minimal
/// free resolution of the trivial module over F2[G]. Generators of each
/// kernel are chosen outside radical * kernel, so ranks equal dim H^i(G; F2).
/// Caps: |G| <= order_cap (default 64), max_degree <= degree_cap (default 5).
std::vector<int> betti_numbers(const FiniteTwoGroup& g, int max_degree,
                               std::size_t order_cap = 64, int degree_cap = 5);

struct PoincareCheck {
    bool match = false;
    std::vector<int> betti;      // from the resolution
    std::vector<int> predicted;  // coefficients of Hilb(A*(Q)) / (1-t^2)^n
};

/// Compares the resolution Betti numbers of G(Q) with the product-form
/// Poincare series prediction, through max_degree.
PoincareCheck poincare_check(const QuadraticMap& q, int max_degree);

}  // namespace qmap
