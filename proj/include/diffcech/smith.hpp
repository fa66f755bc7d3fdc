#pragma once

// Smith normal form over Z and the lattice computations built on it.

#include "diffcech/matrix.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace diffcech {

using IntMatrix = Matrix<mpz_class>;
using IntVector = std::vector<mpz_class>;

struct SmithOptions {
    bool left = true;  // compute U and U^-1
    bool right = true; // compute V and V^-1
};

/// D = U * M * V with D diagonal, d_1 | d_2 | ... | d_rank, all non-negative.
struct SmithForm {
    IntMatrix D, U, V, U_inv, V_inv;
    /// The nonzero diagonal entries d_1 .. d_rank.
    IntVector invariant_factors;
    std::size_t rank = 0;
};

/// Pivot: smallest nonzero magnitude, earliest in row-major order.
/// Runs on checked 64-bit integers and restarts with GMP on overflow.
SmithForm smith_normal_form(const IntMatrix& M, SmithOptions options = {});

/// Basis of {x in Z^cols : M x = 0} as columns.
IntMatrix integer_kernel(const IntMatrix& M);

/// Some x with M x = b over Z.
std::optional<IntVector> integer_solve(const IntMatrix& M, const IntVector& b);

/// Finitely generated abelian group Z^n / diag(orders); order 0 is a free summand.
struct FGAbelian {
    IntVector orders;
    std::size_t size() const { return orders.size(); }
};

/// Whether  G1 --f--> G2 --g--> G3  is exact at G2. Maps act on coordinate columns.
bool is_exact_at(const FGAbelian& g1, const IntMatrix& f, const FGAbelian& g2, const IntMatrix& g, const FGAbelian& g3);

/// Invariant factors (excluding 1) and free rank of Z^n / diag(orders).
struct AbelianInvariants {
    IntVector torsion;
    std::size_t free_rank = 0;
    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};
AbelianInvariants abelian_invariants(const FGAbelian& g);

} // namespace diffcech
