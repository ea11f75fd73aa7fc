#include "ramsey/search.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "ramsey/errors.hpp"

namespace ramsey {

int default_base_bound(int k) {
  int e = 0;
  while ((std::uint64_t{1} << e) < static_cast<std::uint64_t>(k) && e < 63) ++e;
  return 3 * e;
}

namespace {

bool candidate_passes(int k, int bound, const SampleSpaceSpec& spec, const Seed& seed,
                      SearchOutcome& out) {
  Bits bits = sample_string(spec, seed);
  Graph g = Graph::from_edge_bits(k, bits);
  VerificationReport report = verify_bounds(g, bound, VerifyMode::decision);
  if (!report.passed) return false;
  out.graph = std::move(g);
  out.seed = seed;
  out.report = std::move(report);
  out.method = SearchMethod::enumeration;
  return true;
}

SearchOutcome search_sequential(int k, int bound, const SampleSpaceSpec& spec,
                                std::optional<std::uint64_t> cap) {
  SeedEnumerator en(spec, cap);
  SearchOutcome out;
  while (auto seed = en.next()) {
    if (candidate_passes(k, bound, spec, *seed, out)) {
      out.seeds_tried = en.yielded();
      return out;
    }
  }
  throw SearchExhausted(en.yielded(),
                        "no graph with omega, alpha < " + std::to_string(bound) + " among " +
                            std::to_string(en.yielded()) + " seeds");
}

SearchOutcome search_parallel(int k, int bound, const SampleSpaceSpec& spec,
                              std::optional<std::uint64_t> cap, int threads) {
  // Workers claim fixed-size chunks of the enumeration order. The winner is
  // the lexicographically smallest passing seed, so the outcome matches the
  // sequential run bit for bit.
  constexpr std::uint64_t kChunk = 256;
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> best_rank{~std::uint64_t{0}};
  std::mutex best_mutex;
  SearchOutcome best;
  std::uint64_t space_bits = static_cast<std::uint64_t>(spec.seed_bits);
  std::uint64_t space_size =
      space_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << space_bits);
  std::uint64_t limit = cap ? std::min(*cap, space_size) : space_size;

  auto worker = [&] {
    for (;;) {
      std::uint64_t start = next_chunk.fetch_add(kChunk);
      if (start >= limit || start >= best_rank.load()) return;
      std::uint64_t stop = std::min(start + kChunk, limit);
      // seeds are plain integers, so the chunk start is directly addressable
      Seed seed = Seed::from_value(spec.seed_bits, start);
      for (std::uint64_t rank = start; rank < stop; ++rank) {
        if (rank >= best_rank.load()) return;
        SearchOutcome out;
        if (candidate_passes(k, bound, spec, seed, out)) {
          out.seeds_tried = rank + 1;
          std::scoped_lock lock(best_mutex);
          if (rank < best_rank.load()) {
            best_rank.store(rank);
            best = std::move(out);
          }
          return;
        }
        seed.increment();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  if (best_rank.load() == ~std::uint64_t{0})
    throw SearchExhausted(limit, "no graph with omega, alpha < " + std::to_string(bound) +
                                     " among " + std::to_string(limit) + " seeds");
  return best;
}

}  // namespace

SearchOutcome search_base_graph(int k, int bound, const SampleSpaceSpec& spec,
                                std::optional<std::uint64_t> cap, int threads) {
  if (bound < 2) throw std::invalid_argument("bound must be >= 2");
  if (spec.m != edge_slot_count(static_cast<std::uint64_t>(k)))
    throw std::invalid_argument("sample space length does not match C(k,2)");
  if (threads > 1) return search_parallel(k, bound, spec, cap, threads);
  return search_sequential(k, bound, spec, cap);
}

SearchOutcome prng_base_graph(int k, int bound, std::uint64_t prng_seed, std::uint64_t cap) {
  if (bound < 2) throw std::invalid_argument("bound must be >= 2");
  std::mt19937_64 rng(prng_seed);
  std::uint64_t m = edge_slot_count(static_cast<std::uint64_t>(k));
  for (std::uint64_t attempt = 0; attempt < cap; ++attempt) {
    Bits bits(m);
    for (std::uint64_t i = 0; i < m; ++i)
      if (rng() & 1u) bits.set(i);
    Graph g = Graph::from_edge_bits(k, bits);
    VerificationReport report = verify_bounds(g, bound, VerifyMode::decision);
    if (report.passed) {
      SearchOutcome out;
      out.graph = std::move(g);
      out.seeds_tried = attempt + 1;
      out.report = std::move(report);
      out.method = SearchMethod::prng_fallback;
      return out;
    }
  }
  throw SearchExhausted(cap, "prng fallback exhausted " + std::to_string(cap) + " attempts");
}

}  // namespace ramsey
