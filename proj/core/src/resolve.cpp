#include "pgmd/resolve.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <thread>
#include <unordered_set>

#include "pgmd/errors.hpp"
#include "pgmd/parallel.hpp"
#include "pgmd/twins.hpp"

namespace pgmd {

namespace {

constexpr int kMaskLimit = 64;  // subset engine works on uint64_t masks

uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::vector<int> mask_to_vertices(std::uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// For every vertex pair u < v, the set of vertices whose distance to u and
// to v differ. W resolves the graph iff it intersects every such set.
struct PairTable {
  int n = 0;
  std::vector<std::uint64_t> masks;

  static PairTable build(const DistanceMatrix& d) {
    PairTable t;
    t.n = d.vertex_count();
    t.masks.reserve(static_cast<std::size_t>(t.n) * (t.n - 1) / 2);
    for (int u = 0; u < t.n; ++u) {
      for (int v = u + 1; v < t.n; ++v) {
        std::uint64_t m = 0;
        for (int z = 0; z < t.n; ++z)
          if (d.at(u, z) != d.at(v, z)) m |= bit(z);
        t.masks.push_back(m);
      }
    }
    return t;
  }

  bool resolving(std::uint64_t w) const {
    for (std::uint64_t m : masks)
      if (!(m & w)) return false;
    return true;
  }

  // Resolving and every member is the unique hitter of some pair, i.e. no
  // single removal keeps the set resolving.
  bool minimal(std::uint64_t w) const {
    if (masks.empty()) return std::popcount(w) == 1;  // one-vertex graph
    std::uint64_t needed = 0;
    for (std::uint64_t m : masks) {
      const std::uint64_t hit = m & w;
      if (!hit) return false;
      if ((hit & (hit - 1)) == 0) needed |= hit;
    }
    return needed == w;
  }
};

void require_connected(const SimpleGraph& g) {
  if (!g.is_connected())
    throw DisconnectedError("graph is disconnected; resolving sets are only "
                            "defined for connected graphs here");
}

void require_within(const SimpleGraph& g, int cap, const char* flag) {
  const int n = g.vertex_count();
  if (n > std::min(cap, kMaskLimit))
    throw TooLargeError("graph has " + std::to_string(n) +
                        " vertices, above the exact-search cap of " +
                        std::to_string(std::min(cap, kMaskLimit)) +
                        " (raise with " + flag +
                        (cap < kMaskLimit ? " and --unsafe-cap)" : "; hard engine limit 64)"));
}

// Enumerates, in lexicographic order of the sorted vertex tuple, every
// subset that omits at most one vertex per twin class. k < 0 means any size.
template <typename Fn>
void for_each_candidate(int n, int k, const std::vector<int>& class_of,
                        int class_count, Fn&& fn) {
  std::vector<char> class_excluded(class_count, 0);
  std::uint64_t mask = 0;

  auto rec = [&](auto&& self, int v, int chosen) -> void {
    if (v == n) {
      if (k < 0 || chosen == k) fn(mask);
      return;
    }
    if (k >= 0 && chosen + (n - v) < k) return;  // cannot reach size k
    if (k < 0 || chosen < k) {                   // include v
      mask |= bit(v);
      self(self, v + 1, chosen + 1);
      mask &= ~bit(v);
    }
    if (!class_excluded[class_of[v]]) {          // exclude v
      class_excluded[class_of[v]] = 1;
      self(self, v + 1, chosen);
      class_excluded[class_of[v]] = 0;
    }
  };
  rec(rec, 0, 0);
}

// First candidate (by position in `candidates`) that satisfies pred, or -1.
// Chunked scan; the merge keeps the globally first hit, so the result does
// not depend on the worker count.
template <typename Pred>
long long first_match(const std::vector<std::uint64_t>& candidates, Pred pred,
                      int threads) {
  const long long total = static_cast<long long>(candidates.size());
  const int workers = std::min(worker_count(threads),
                               static_cast<int>(std::max<long long>(1, total / 1024)));
  if (workers <= 1) {
    for (long long i = 0; i < total; ++i)
      if (pred(candidates[i])) return i;
    return -1;
  }
  std::atomic<long long> best{total};
  std::vector<std::thread> pool;
  const long long chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long long lo = w * chunk, hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      for (long long i = lo; i < hi && i < best.load(std::memory_order_relaxed);
           ++i) {
        if (pred(candidates[i])) {
          long long cur = best.load(std::memory_order_relaxed);
          while (i < cur &&
                 !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
          break;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  const long long found = best.load();
  return found == total ? -1 : found;
}

}  // namespace

std::vector<int> representation(const DistanceMatrix& dist, int v,
                                const std::vector<int>& landmarks) {
  std::vector<int> coords;
  coords.reserve(landmarks.size());
  for (int w : landmarks) coords.push_back(dist.at(v, w));
  return coords;
}

bool is_resolving(const DistanceMatrix& dist, const std::vector<int>& w) {
  const int n = dist.vertex_count();
  if (w.empty()) return false;
  std::vector<std::vector<int>> reps;
  reps.reserve(n);
  for (int v = 0; v < n; ++v) reps.push_back(representation(dist, v, w));
  std::sort(reps.begin(), reps.end());
  return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

bool is_minimal_resolving(const DistanceMatrix& dist, const std::vector<int>& w) {
  if (!is_resolving(dist, w)) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<int> reduced = w;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_resolving(dist, reduced)) return false;
  }
  return true;
}

MdReport metric_dimension_oracle(const SimpleGraph& g, const DistanceMatrix& dist,
                                 const ResolveOptions& opts) {
  require_connected(g);
  require_within(g, opts.oracle_cap, "--cap-oracle");
  const int n = g.vertex_count();

  const TwinPartition twins = twin_partition(g);
  const PairTable pairs = PairTable::build(dist);
  const int forced = n - twins.class_count();  // sum of (class size - 1)

  std::vector<std::uint64_t> candidates;
  for (int k = std::max(1, forced); k <= n; ++k) {
    candidates.clear();
    for_each_candidate(n, k, twins.class_of, twins.class_count(),
                       [&](std::uint64_t m) { candidates.push_back(m); });
    const long long hit = first_match(
        candidates, [&](std::uint64_t m) { return pairs.resolving(m); },
        opts.threads);
    if (hit >= 0) {
      MdReport report;
      report.beta = k;
      report.witness_basis = mask_to_vertices(candidates[hit]);
      report.method = MdMethod::oracle;
      return report;
    }
  }
  throw Error("no resolving set found; unreachable for a connected graph");
}

std::vector<std::vector<int>> enumerate_minimal_resolving_sets(
    const SimpleGraph& g, const DistanceMatrix& dist, const ResolveOptions& opts,
    std::optional<int> max_size) {
  require_connected(g);
  require_within(g, opts.enum_cap, "--cap-enum");
  const int n = g.vertex_count();

  const TwinPartition twins = twin_partition(g);
  const PairTable pairs = PairTable::build(dist);

  std::vector<std::uint64_t> found;
  for_each_candidate(n, -1, twins.class_of, twins.class_count(),
                     [&](std::uint64_t m) {
                       if (m == 0) return;  // empty set never counted
                       if (max_size && std::popcount(m) > *max_size) return;
                       if (pairs.minimal(m)) found.push_back(m);
                     });

  std::vector<std::vector<int>> out;
  out.reserve(found.size());
  for (std::uint64_t m : found) out.push_back(mask_to_vertices(m));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

ExchangeReport exchange_property(const SimpleGraph& g, const DistanceMatrix& dist,
                                 const ResolveOptions& opts,
                                 ExchangeReading reading) {
  const auto sets = enumerate_minimal_resolving_sets(g, dist, opts);
  std::vector<std::uint64_t> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    std::uint64_t m = 0;
    for (int v : s) m |= bit(v);
    masks.push_back(m);
  }
  std::unordered_set<std::uint64_t> members(masks.begin(), masks.end());

  ExchangeReport report;
  report.minimal_sets_count = static_cast<long long>(sets.size());

  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (reading == ExchangeReading::strict && i == j) continue;
      const std::uint64_t w1 = masks[i];
      for (int u : sets[i]) {
        bool swapped = false;
        for (int v : sets[j]) {
          if (reading == ExchangeReading::strict && (w1 & bit(v))) continue;
          const std::uint64_t candidate = (w1 & ~bit(u)) | bit(v);
          if (members.count(candidate)) {
            swapped = true;
            break;
          }
        }
        if (!swapped) {
          report.holds = false;
          report.counterexample = ExchangeCounterexample{sets[i], sets[j], u};
          return report;
        }
      }
    }
  }
  report.holds = true;
  return report;
}

}  // namespace pgmd
