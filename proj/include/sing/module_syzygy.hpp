#pragma once

#include <vector>

#include "sing/length.hpp"
#include "sing/polynomial.hpp"

namespace sing {

/// Element of a free module R^rank, as a coordinate vector of polynomials.
using ModuleElement = std::vector<Polynomial>;

/// Columns generating the first syzygy module of an ordered generator
/// list: for every column (a_0,...,a_m), sum a_i * g_i = 0 exactly.
struct SyzygyMatrix {
    std::vector<ModuleElement> columns;
    std::vector<Polynomial> target_gens;

    int rank() const { return static_cast<int>(target_gens.size()); }
};

/// First syzygies of gens over the ring determined by ord, expressed on
/// the original generator list. Computed by completing the generators,
/// lifted with unit tracking components, to a standard basis and reading
/// the traced reductions off the tracking block.
SyzygyMatrix syzygies(const std::vector<Polynomial>& gens, const MonomialOrder& ord);

/// Koszul boundary columns g_j*e_i - g_i*e_j for i < j.
SyzygyMatrix koszul_boundaries(const std::vector<Polynomial>& gens);

/// True iff v lies in the column span of M over the ring determined by ord.
bool module_membership(const ModuleElement& v, const SyzygyMatrix& M, const MonomialOrder& ord);

/// dim_k N/(B + m*N) where N = span(num), B = span(den) and m is the
/// maximal ideal at the origin: the minimal number of generators of N/B
/// over the local ring (Nakayama). Requires den's columns to lie in num's
/// span and N/B of finite length; throws NotFiniteLength otherwise.
int min_gens_finite_length(const SyzygyMatrix& num, const SyzygyMatrix& den,
                           const MonomialOrder& ord);

/// lambda(N/B) for B a submodule of N, via leading modules.
/// Throws NotFiniteLength when the quotient has infinite length.
Length module_quotient_length(const SyzygyMatrix& num, const SyzygyMatrix& den,
                              const MonomialOrder& ord);

/// Entrywise constant parts.
std::vector<std::vector<Rat>> evaluate_at_zero(const SyzygyMatrix& M);

/// Exact rank by fraction-free (Bareiss) elimination.
int rational_rank(const std::vector<std::vector<Rat>>& M);

/// Greedy removal of columns lying in the span of the others.
SyzygyMatrix minimalize_columns(const SyzygyMatrix& M, const MonomialOrder& ord);

/// Searches for a 2-column subset generating all of M's columns; returns
/// the indices, or empty if no pair suffices.
std::vector<int> two_generator_subset(const SyzygyMatrix& M, const MonomialOrder& ord);

}  // namespace sing
