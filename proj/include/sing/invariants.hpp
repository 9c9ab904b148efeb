#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sing/ideal_ops.hpp"
#include "sing/length.hpp"
#include "sing/polynomial.hpp"

namespace sing {

/// Gradient ideal J_f = <df/dx_1,...,df/dx_n> under the local order.
Ideal jacobian_ideal(const Polynomial& f);
/// Tjurina ideal I_f = <f> + J_f under the local order.
Ideal tjurina_ideal(const Polynomial& f);

Length milnor_number(const Polynomial& f);
Length tjurina_number(const Polynomial& f);

/// True iff f is in its gradient ideal over the local ring; the working
/// definition of quasihomogeneity of the singularity. Throws NotIsolated
/// when the Milnor number is infinite.
bool saito_membership(const Polynomial& f);

/// Syzygy-matrix criterion: the syzygies of (f_{x_1},...,f_{x_n}, f),
/// evaluated at the origin, have rank >= N - n (positive rank for the
/// (n+1)-row presentation on the original generators).
bool syzygy_rank_test(const Polynomial& f);

/// Corank form of the criterion for a presentation on an arbitrary
/// generator list with N rows: rank of the evaluated syzygy matrix >= N-n.
bool syzygy_corank_test(const std::vector<Polynomial>& gens);

/// Solves sum_i r_i m_i = 1 over the support of f; returns a witness with
/// 0 < r_i <= 1/2 when one exists. A witness certifies quasihomogeneity in
/// the given coordinates; absence refutes nothing.
std::optional<std::vector<Rat>> find_weights(const Polynomial& f);

/// Smallest d >= 1 with f^d in J_f locally; always <= n.
int briancon_skoda_exponent(const Polynomial& f);

/// beta_f = max{ i >= 0 : <J_f : f^i, f> contained in I_f }. For
/// quasihomogeneous f the chain degenerates and the QH sentinel
/// (std::nullopt) is returned.
std::optional<int> beta_invariant(const Polynomial& f);

/// The e^BS-term length sequence of the telescoping chain:
/// lambda(R/I_f), lambda(R/<J:f,f>), ..., lambda(R/(J:f^{e-1})).
/// The terms sum to mu_f.
std::vector<std::uint64_t> chain_lengths(const Polynomial& f);

/// lambda(delta(I_f)) = [lambda(R/I^2) - lambda(R/I)] - n*tau.
std::uint64_t delta_length(const Polynomial& f);
/// lambda(I^2/JI) = lambda(R/J*I) - lambda(R/I^2).
std::uint64_t i2ji_length(const Polynomial& f);

/// Smallest t <= cap with J*I^t = I^{t+1} and J*I^{t+1} = I^{t+2}
/// (stability probe); nullopt when not found within cap.
std::optional<int> reduction_number(const Polynomial& f, unsigned cap = 6);

struct HilbertFit {
    std::int64_t e0 = 0;
    std::int64_t e1 = 0;
    std::vector<std::uint64_t> values;  // lambda(R/I^m), m = 1..mmax
    bool stable = true;
};

/// Computes lambda(R/I_f^m) for m = 1..mmax and fits the Hilbert-Samuel
/// polynomial by exact finite differences on the top window; flags
/// "unstable" when the two largest windows disagree. mmax defaults to n+3
/// when 0 is passed.
HilbertFit hilbert_samuel_fit(const Polynomial& f, unsigned mmax = 0);

/// lambda of the first Koszul homology of (f, f_{x_1},...,f_{x_n});
/// equals tau_f for isolated singularities.
Length koszul_h1_length(const Polynomial& f);

/// Named verdicts for the identity and bound suite. Bound checks assume a
/// non-quasihomogeneous singularity and are present only then; the same
/// applies to the pairwise agreement of the colon-criterion conditions.
std::map<std::string, bool> identity_checks(const Polynomial& f);

struct QuasihomogeneityVerdict {
    bool saito = false;
    bool syzygy_rank = false;
    std::optional<std::vector<Rat>> weights;
};

struct SingularityReport {
    std::vector<std::string> vars;
    std::string poly_text;
    bool smooth = false;
    Length mu = Length::of(0);
    Length tau = Length::of(0);
    std::optional<QuasihomogeneityVerdict> quasihomogeneous;
    std::optional<int> ebs;
    std::optional<std::optional<int>> beta;  // inner nullopt = QH sentinel
    std::optional<std::uint64_t> delta_len;
    std::optional<std::uint64_t> i2ji_len;
    std::optional<std::optional<int>> reduction_num;
    std::optional<HilbertFit> hilbert;
    std::optional<std::vector<std::uint64_t>> chains;
    std::optional<int> derlog_min_gens;
    std::optional<std::vector<std::string>> derlog_gens_printed;
    std::map<std::string, bool> identities;
    std::optional<std::string> error;  // "NotIsolated" when mu is infinite
};

/// Requested analysis sections.
struct CheckSet {
    bool mu = false, tau = false, quasihomogeneity = false, ebs = false, beta = false,
         delta = false, hilbert = false, derlog = false, identities = false;

    static CheckSet all();
    /// Parses a comma-separated list; throws std::invalid_argument on an
    /// unknown name.
    static CheckSet parse(const std::string& csv);
};

/// Full report generation; never throws NotIsolated (records the verdict
/// in the report instead). Smooth-at-origin inputs take the smooth path
/// with mu = tau = 0 and singularity checks skipped.
SingularityReport analyze(const Polynomial& f, const std::vector<std::string>& vars,
                          const CheckSet& checks);

}  // namespace sing
