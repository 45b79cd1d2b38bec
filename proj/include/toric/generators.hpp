#pragma once

// Builtin fans: projective space P^d and the pseudo-symmetric Fano
// varieties V~^d and V^d (d = 2n) spanned by
//   x_i = e_i, x_{2n+1} = -(e_1+...+e_{2n}), y_i = -x_i.
// V~^d uses x_1..x_{2n+1}, y_1..y_{2n}; V^d uses all 4n+2 rays.

#include "toric/exact.hpp"
#include "toric/fan.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace toric {

enum class Family { ProjectiveSpace, PseudoDelPezzoTilde, PseudoDelPezzoV };

std::string_view to_string(Family family);
/// Accepts the CLI names "pd", "tilde-v" and "v".
Family parse_family(std::string_view name);

class BuiltinFamily {
public:
    /// Throws OddDimension for the pseudo-symmetric families in odd d, and
    /// DimensionTooSmall for d < 1 (d < 2 for the pseudo-symmetric families).
    BuiltinFamily(Family family, int dim);

    Family family() const { return family_; }
    int dim() const { return dim_; }

private:
    Family family_;
    int dim_;
};

/// Rays in the order x_1..x_{2n+1}, y_1.. (for P^d: e_1..e_d, -sum e_i).
std::vector<LatticeVector> gen_rays(const BuiltinFamily& family);

/// P^d: omit-one-ray simplices. V~^d: face fan of conv(rays). V^d: the
/// explicit cones <x_I, y_J> with |I| = |J| = n and I, J disjoint.
Fan gen_fan(const BuiltinFamily& family);

/// The V^d fan read off from its explicit cone description alone.
Fan v_fan_explicit(int dim);

/// 2 ch2(V^d).S for the surface tau = <x_1..x_{n-1}, y_n..y_{2n-2}>,
/// i.e. -6 + (2n-2)(-2). Throws DimensionTooSmall for n < 2: the surfaces
/// V~^2 and V^2 (del Pezzo of degree 7 and 6) are known not to be
/// ch2-positive, a fact that is taken as given rather than computed.
Integer v_d_closed_form(int n);

/// Ray indices (into gen_rays of V^{2n}) of x_1..x_{n-1}, y_n..y_{2n-2}.
IndexSet v_d_witness_tau(int n);

}  // namespace toric
