#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "szf/exact.hpp"
#include "szf/game.hpp"
#include "szf/sign_pattern.hpp"

namespace szf {

/// Finite grid entries are drawn from: numerator/denominator with
/// numerator in [-max_numerator, max_numerator] and denominator in [1, max_denominator].
struct SamplingConfig {
  int max_numerator = 20;
  int max_denominator = 5;
  /// Sample A = A^T when the pattern is symmetric.
  bool symmetric_when_possible = true;
};

/// Random rational matrix with sign pattern `p`: strict entries take a grid value of that
/// sign, 0 entries are 0, ? entries take any grid value including 0. Deterministic per seed.
ExactMatrix sample_pattern_matrix(const SignPattern& p, std::uint64_t seed,
                                  const SamplingConfig& config = {});

/// True iff sign(A_uw) = P_uw wherever P_uw is not ?.
bool has_sign_pattern(const ExactMatrix& a, const SignPattern& p);

/// True iff the only kernel vector of A vanishing on `s` is zero, i.e. A stacked with the
/// indicator rows of `s` has full column rank.
bool kernel_vanishing_check(const ExactMatrix& a, VertexSet s);

/// Basis of {x in ker A : x|_s = 0}.
std::vector<std::vector<mpq_class>> constrained_kernel(const ExactMatrix& a, VertexSet s);

/// Replays `t` (effects only) and checks, for every constrained-kernel basis vector x and
/// every state along the play: x vanishes on the black set; same-marked white pairs have
/// x_w1 x_w2 >= 0; opposite-marked pairs have x_w1 x_w2 <= 0. Throws ContractViolation when
/// A does not have sign pattern `p`.
bool marker_claim_check(const ExactMatrix& a, const SignPattern& p, const Transcript& t);

struct NullitySearchResult {
  int best_nullity = 0;
  ExactMatrix witness;
  /// "sampled", "completion" or "clique-cover".
  const char* source = "sampled";
};

/// Best-effort lower bound on the maximum nullity over realisations of `p`. Candidates are
/// grid samples and single-entry completions that zero a determinant. For patterns shaped
/// like z_pattern_of_graph the negated clique-cover witness matrix is tried first.
NullitySearchResult nullity_lower_bound_search(const SignPattern& p, int trials, std::uint64_t seed,
                                               const SamplingConfig& config = {});

struct MainTheoremReport {
  int trials = 0;
  int vanishing_failures = 0;
  int marker_failures = 0;
  /// Trials with nullity(A) > |S|.
  int dimension_failures = 0;
  std::vector<std::uint64_t> failing_seeds;

  int failures() const { return vanishing_failures + marker_failures + dimension_failures; }
};

/// Per-trial seed derived from a master seed (splitmix64 of seed and index).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

/// Samples `trials` matrices with pattern `p` and checks kernel vanishing on `t.initial`,
/// the marker claim along `t`, and nullity <= |S|. Trials run on `threads` workers; the
/// report is independent of the thread count.
MainTheoremReport verify_main_theorem(const SignPattern& p, const Transcript& t, int trials,
                                      std::uint64_t seed, int threads = 1,
                                      const SamplingConfig& config = {});

/// Runs signed_forces(p, s) for the transcript and then the trials above. Throws
/// ContractViolation when `s` is not a signed forcing set.
MainTheoremReport verify_main_theorem(const SignPattern& p, VertexSet s, int trials, std::uint64_t seed,
                                      int threads = 1, const SamplingConfig& config = {});

}  // namespace szf
