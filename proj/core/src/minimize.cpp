#include "szf/minimize.hpp"

#include <atomic>
#include <limits>
#include <mutex>

#include "szf/error.hpp"
#include "szf/parallel.hpp"

namespace szf {

namespace {

constexpr std::size_t kChunk = 2048;

// Cardinality-ascending colex sweep. `test(worker, S)` returns a certificate for forcing
// sets. Within a cardinality the colex-smallest success wins regardless of scheduling.
template <typename Cert, typename Test>
ForcingNumberResult sweep(int n, const MinimizeOptions& options, Test&& test) {
  const auto started = std::chrono::steady_clock::now();
  const int threads = std::max(options.threads, 1);
  std::atomic<std::uint64_t> tested{0};
  std::vector<VertexSet> chunk;
  chunk.reserve(kChunk);

  for (int k = 0; k <= n; ++k) {
    std::optional<std::pair<std::size_t, Cert>> found;
    auto run_chunk = [&] {
      std::mutex found_mutex;
      std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
      parallel_for(chunk.size(), threads, [&](int worker, std::size_t i) {
        if (i > best.load()) return;
        if (options.deadline) options.deadline->check();
        ++tested;
        auto cert = test(worker, chunk[i]);
        if (!cert) return;
        std::lock_guard lock(found_mutex);
        if (!found || i < found->first) {
          found.emplace(i, std::move(*cert));
          best = i;
        }
      });
      chunk.clear();
    };
    for_each_k_subset(n, k, [&](VertexSet s) {
      chunk.push_back(s);
      if (chunk.size() == kChunk) {
        run_chunk();
        if (found) return false;
      }
      return true;
    });
    if (!found && !chunk.empty()) run_chunk();
    if (found) {
      ForcingNumberResult result;
      result.value = k;
      result.witness = found->second.initial;
      result.certificate = std::move(found->second);
      result.subsets_tested = tested.load();
      result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
      return result;
    }
  }
  throw ContractViolation("no forcing set found, not even the full vertex set");
}

void check_cap(int n) {
  if (n > kMaxVertices) throw CapacityError("instance exceeds the vertex cap");
}

}  // namespace

ForcingNumberResult zero_forcing_number(const Graph& g, const MinimizeOptions& options) {
  check_cap(g.order());
  const VertexSet all = g.vertices();
  return sweep<Transcript>(g.order(), options, [&](int, VertexSet s) -> std::optional<Transcript> {
    if (classical_derived(g, s) != all) return std::nullopt;
    Transcript t{s, {}};
    classical_derived(g, s, t.moves);
    return t;
  });
}

ForcingNumberResult signed_zero_forcing_number(const SignPattern& p, const MinimizeOptions& options) {
  check_cap(p.order());
  const SignedGame game(p);
  std::vector<RefutedStates> memos(static_cast<std::size_t>(std::max(options.threads, 1)));
  ForcingSearchOptions search;
  search.deadline = options.deadline;
  return sweep<Transcript>(p.order(), options, [&](int worker, VertexSet s) {
    RefutedStates* memo = options.prune ? &memos[static_cast<std::size_t>(worker)] : nullptr;
    return signed_forces(game, s, search, memo);
  });
}

ForcingNumberResult branched_number(const SignPattern& p, int max_splits, const MinimizeOptions& options) {
  check_cap(p.order());
  const SignedGame game(p);
  ForcingSearchOptions search;
  search.deadline = options.deadline;
  return sweep<BranchCertificate>(p.order(), options, [&](int, VertexSet s) {
    return branched_forces(game, s, max_splits, search);
  });
}

}  // namespace szf
