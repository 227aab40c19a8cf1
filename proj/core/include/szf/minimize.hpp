#pragma once

#include <chrono>
#include <cstdint>
#include <variant>

#include "szf/deadline.hpp"
#include "szf/game.hpp"
#include "szf/search.hpp"

namespace szf {

struct MinimizeOptions {
  /// Worker threads for the subset sweep; values < 1 mean 1.
  int threads = 1;
  const Deadline* deadline = nullptr;
  /// Reuse refuted game states across initial sets within a worker.
  bool prune = false;
};

struct ForcingNumberResult {
  int value = 0;
  /// Colex-smallest forcing set of size `value`.
  VertexSet witness;
  /// Transcript for classical and signed numbers (the classical one is a clause-A play on
  /// z_pattern_of_graph), BranchCertificate for the branched number.
  std::variant<Transcript, BranchCertificate> certificate;
  std::uint64_t subsets_tested = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Z(G) by cardinality-ascending colex sweep with classical_derived.
ForcingNumberResult zero_forcing_number(const Graph& g, const MinimizeOptions& options = {});

/// Z±(P) by cardinality-ascending colex sweep with signed_forces.
ForcingNumberResult signed_zero_forcing_number(const SignPattern& p,
                                               const MinimizeOptions& options = {});

/// Smallest |S| for which branched_forces(P, S, max_splits) succeeds.
ForcingNumberResult branched_number(const SignPattern& p, int max_splits,
                                    const MinimizeOptions& options = {});

/// Visits the k-subsets of {0..n-1} in colex order; stops early when `visit` returns false.
template <typename Visit>
void for_each_k_subset(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    visit(VertexSet{});
    return;
  }
  std::uint64_t s = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit_bit = (n == 64) ? 0 : (std::uint64_t{1} << n);
  while (true) {
    if (!visit(VertexSet(s))) return;
    // Gosper's hack: next larger word with the same popcount.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) return;
    s = (((r ^ s) >> 2) / c) | r;
    if (limit_bit != 0 && s >= limit_bit) return;
  }
}

}  // namespace szf
