#pragma once

#include <string>
#include <vector>

#include "sing/module_syzygy.hpp"
#include "sing/polynomial.hpp"

namespace sing {

/// A k-derivation of the polynomial ring, as the coefficient vector of
/// d/dx_1,...,d/dx_n. Logarithmic for f when eta(f) lies in <f>.
struct Derivation {
    std::vector<Polynomial> coeffs;

    int nvars() const { return static_cast<int>(coeffs.size()); }

    /// eta(f) = sum coeffs[i] * df/dx_i.
    Polynomial apply(const Polynomial& f) const;
};

/// Generators of Derlog_S(f) over the polynomial ring: the images under
/// pi (drop coordinate 0) of the syzygies of (f, f_{x_1},...,f_{x_n})
/// computed under the global order. Each generator is verified
/// logarithmic by exact division.
std::vector<Derivation> derlog_generators(const Polynomial& f);

/// The trivial logarithmic derivations f_i d_j - f_j d_i (i < j) and
/// f d_i.
std::vector<Derivation> koszul_derivations(const Polynomial& f);

/// nu of the module of essential derivations at the origin, computed via
/// Nakayama on the first Koszul homology of (f, f_{x_1},...,f_{x_n})
/// under the local order. Throws NotFiniteLength when the singularity at
/// the origin is not isolated.
int essential_min_gens(const Polynomial& f);

/// The global criterion: I_f = J_f over the polynomial ring. Requires
/// V(f) to have only isolated singularities (I_f zero-dimensional
/// globally); throws NotIsolatedGlobally otherwise.
bool global_quasihomogeneity_test(const Polynomial& f);

/// For homogeneous f of degree >= 1: checks that the syzygies of the
/// gradient together with the Euler derivation generate Derlog_S(f) (and
/// conversely), with the directness witness theta_E(f) = deg(f)*f != 0
/// while the syzygy part annihilates f. Throws NonHomogeneousInput.
bool verify_euler_splitting(const Polynomial& f);

/// Membership of a derivation in the span of a derivation list over the
/// ring determined by ord.
bool derivation_membership(const Derivation& d, const std::vector<Derivation>& gens,
                           const MonomialOrder& ord);

std::string derivation_to_string(const Derivation& d, const std::vector<std::string>& vars);

}  // namespace sing
