#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <numeric>
#include <thread>

#include "hurwitz/oracle.hpp"

namespace hurwitz {

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::ProvenNone:
      return "proven-none";
    case SearchStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

constexpr int kMax = kMaxSearchDegree;
using Perm = std::array<std::uint8_t, kMax>;
using Counts = std::array<std::uint8_t, kMax + 1>;  // cycles of each length

Counts counts_of(const Partition& type) {
  Counts c{};
  for (int part : type.parts()) ++c[static_cast<std::size_t>(part)];
  return c;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t class_size(int d, const Counts& counts) {
  std::uint64_t z = 1;
  for (int len = 1; len <= d; ++len) {
    for (int j = 1; j <= counts[static_cast<std::size_t>(len)]; ++j) z *= static_cast<std::uint64_t>(len * j);
  }
  return factorial(d) / z;
}

Counts cycle_counts(const Perm& p, int d, int* cycles) {
  Counts c{};
  std::uint32_t seen = 0;
  int total = 0;
  for (int x = 0; x < d; ++x) {
    if (seen >> x & 1U) continue;
    int len = 0;
    int y = x;
    do {
      seen |= 1U << y;
      y = p[static_cast<std::size_t>(y)];
      ++len;
    } while (y != x);
    ++c[static_cast<std::size_t>(len)];
    ++total;
  }
  *cycles = total;
  return c;
}

struct UnionFind {
  std::array<std::uint8_t, kMax> parent;
  int components;

  explicit UnionFind(int d) : components(d) {
    for (int x = 0; x < kMax; ++x) parent[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[parent[static_cast<std::size_t>(x)]];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    parent[static_cast<std::size_t>(std::max(x, y))] = static_cast<std::uint8_t>(std::min(x, y));
    --components;
  }
  void add(const Perm& p, int d) {
    for (int x = 0; x < d; ++x) unite(x, p[static_cast<std::size_t>(x)]);
  }
};

// Visits every permutation of one cycle type. A new cycle always starts at
// the smallest unused point; its length runs over the remaining lengths in
// decreasing order and its other points over unused points in increasing
// order. The visitor returns false to stop.
template <class Visit>
class ClassWalk {
 public:
  ClassWalk(int d, const Counts& counts, Visit& visit) : d_(d), counts_(counts), visit_(visit) {}

  bool run() {
    used_ = 0;
    return next_cycle();
  }

 private:
  bool next_cycle() {
    const std::uint32_t full = d_ == 32 ? ~0U : (1U << d_) - 1;
    if (used_ == full) return visit_(img_);
    const int start = std::countr_zero(~used_);
    for (int len = d_; len >= 1; --len) {
      if (counts_[static_cast<std::size_t>(len)] == 0) continue;
      --counts_[static_cast<std::size_t>(len)];
      used_ |= 1U << start;
      const bool more = extend(start, start, len - 1);
      used_ &= ~(1U << start);
      ++counts_[static_cast<std::size_t>(len)];
      if (!more) return false;
    }
    return true;
  }

  bool extend(int start, int last, int remaining) {
    if (remaining == 0) {
      img_[static_cast<std::size_t>(last)] = static_cast<std::uint8_t>(start);
      return next_cycle();
    }
    for (int x = start + 1; x < d_; ++x) {
      if (used_ >> x & 1U) continue;
      img_[static_cast<std::size_t>(last)] = static_cast<std::uint8_t>(x);
      used_ |= 1U << x;
      const bool more = extend(start, x, remaining - 1);
      used_ &= ~(1U << x);
      if (!more) return false;
    }
    return true;
  }

  int d_;
  Counts counts_;
  Visit& visit_;
  Perm img_{};
  std::uint32_t used_ = 0;
};

struct Problem {
  int d = 0;
  std::vector<Counts> types;    // search order
  std::vector<int> branching;   // d - length per level
  std::vector<int> suffix;      // suffix[i] = sum of branching[i..]
  std::vector<std::size_t> input_index;
};

struct Shared {
  std::atomic<std::int64_t> nodes{0};
  std::atomic<bool> budget_hit{false};
  std::atomic<int> best_shard{INT_MAX};
  std::optional<std::int64_t> max_nodes;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

Perm compose(const Perm& p, const Perm& q, int d) {
  Perm r{};
  for (int x = 0; x < d; ++x) r[static_cast<std::size_t>(x)] = p[q[static_cast<std::size_t>(x)]];
  return r;
}

Perm inverse(const Perm& p, int d) {
  Perm r{};
  for (int x = 0; x < d; ++x) r[p[static_cast<std::size_t>(x)]] = static_cast<std::uint8_t>(x);
  return r;
}

class ShardSearch {
 public:
  ShardSearch(const Problem& pb, Shared& shared, int shard, std::uint64_t lo, std::uint64_t hi)
      : pb_(pb), shared_(shared), shard_(shard), lo_(lo), hi_(hi), chosen_(pb.types.size()) {}

  // Returns true iff a witness was found; it is then in witness().
  bool run(const Perm& first) {
    const int d = pb_.d;
    chosen_[0] = first;
    UnionFind uf(d);
    uf.add(first, d);
    const bool found = level(1, first, uf);
    flush();
    return found;
  }

  const std::vector<Perm>& witness() const { return chosen_; }
  bool aborted() const { return aborted_; }

 private:
  bool should_stop() {
    if (shared_.best_shard.load(std::memory_order_relaxed) < shard_) return true;
    return shared_.budget_hit.load(std::memory_order_relaxed);
  }

  void flush() {
    if (local_nodes_ == 0) return;
    const std::int64_t total = shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
    local_nodes_ = 0;
    if (shared_.max_nodes && total > *shared_.max_nodes) shared_.budget_hit = true;
    if (shared_.deadline && std::chrono::steady_clock::now() > *shared_.deadline) shared_.budget_hit = true;
  }

  // True to keep going.
  bool count_node() {
    if (++local_nodes_ >= 1024) {
      flush();
      if (should_stop()) {
        aborted_ = true;
        return false;
      }
    }
    return true;
  }

  // Leaf test on the full product of all but the last permutation.
  bool leaf_ok(const Perm& product, const UnionFind& uf) const {
    if (uf.components != 1) return false;
    int cycles = 0;
    return cycle_counts(product, pb_.d, &cycles) == pb_.types.back();
  }

  bool level(std::size_t i, const Perm& product, const UnionFind& uf) {
    const int d = pb_.d;
    const std::size_t last = pb_.types.size() - 1;
    if (i == last) return leaf_ok(product, uf);

    const int rest = pb_.suffix[i + 1];
    std::uint64_t index = 0;
    bool found = false;
    auto visit = [&](const Perm& g) -> bool {
      if (i == 1) {
        const std::uint64_t k = index++;
        if (k < lo_) return true;
        if (k >= hi_) return false;
      }
      if (!count_node()) return false;
      const Perm next = compose(product, g, d);
      int cycles = 0;
      cycle_counts(next, d, &cycles);
      const int v = d - cycles;
      if (v > rest) return true;
      UnionFind grown = uf;
      grown.add(g, d);
      // The remaining generators and the product form a cover of genus >= 0
      // whose orbits must join the current ones through cycles of the product.
      if (2 * (grown.components - 1) + v > rest) return true;
      chosen_[i] = g;
      if (level(i + 1, next, grown)) {
        found = true;
        return false;
      }
      return !aborted_;
    };
    ClassWalk<decltype(visit)> walk(d, pb_.types[i], visit);
    walk.run();
    return found;
  }

  const Problem& pb_;
  Shared& shared_;
  int shard_;
  std::uint64_t lo_;
  std::uint64_t hi_;
  std::vector<Perm> chosen_;
  std::int64_t local_nodes_ = 0;
  bool aborted_ = false;
};

Perm canonical_representative(const Partition& type) {
  Perm p{};
  int start = 0;
  for (int len : type.parts()) {
    for (int k = 0; k < len; ++k) p[static_cast<std::size_t>(start + k)] = static_cast<std::uint8_t>(start + (k + 1) % len);
    start += len;
  }
  return p;
}

Permutation to_permutation(const Perm& p, int d) {
  std::vector<int> images(static_cast<std::size_t>(d));
  for (int x = 0; x < d; ++x) images[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(x)];
  return Permutation(std::move(images));
}

// perms[k] realizes input partition order[k]; reorders by Hurwitz moves into
// input order.
RealizationTuple in_input_order(int d, std::vector<Permutation> perms, std::vector<std::size_t> order) {
  RealizationTuple t;
  t.degree = d;
  t.perms = std::move(perms);
  t.roles.assign(t.perms.size(), "");
  for (std::size_t pass = 0; pass < order.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      if (order[i] > order[i + 1]) {
        t = hurwitz_move(t, i);
        std::swap(order[i], order[i + 1]);
      }
    }
  }
  for (std::size_t k = 0; k < t.roles.size(); ++k) t.roles[k] = "partition-" + std::to_string(k + 1);
  return t;
}

}  // namespace

SearchResult search_tuples(const BranchData& bd, int target_genus, const SearchBudget& budget) {
  const int d = bd.degree();
  if (d > kMaxSearchDegree) {
    throw std::invalid_argument("search: degree " + std::to_string(d) + " exceeds " + std::to_string(kMaxSearchDegree));
  }
  SearchResult result;
  const CoverGenus genus = cover_genus(bd);
  if (target_genus < 0 || !genus.is_integer() || genus.value() != target_genus) {
    result.status = SearchStatus::ProvenNone;
    return result;
  }

  std::vector<std::size_t> nontrivial;
  std::vector<std::size_t> trivial;
  for (std::size_t k = 0; k < bd.size(); ++k) (bd.partitions()[k].is_trivial() ? trivial : nontrivial).push_back(k);
  std::stable_sort(nontrivial.begin(), nontrivial.end(), [&](std::size_t x, std::size_t y) {
    const Partition& px = bd.partitions()[x];
    const Partition& py = bd.partitions()[y];
    if (px.length() != py.length()) return px.length() < py.length();
    return px > py;
  });

  auto finish = [&](const std::vector<Perm>& perms) {
    std::vector<Permutation> out;
    std::vector<std::size_t> order = nontrivial;
    for (const auto& p : perms) out.push_back(to_permutation(p, d));
    for (std::size_t k : trivial) {
      out.push_back(Permutation::identity(d));
      order.push_back(k);
    }
    result.tuple = in_input_order(d, std::move(out), std::move(order));
    result.status = SearchStatus::Found;
  };

  const std::size_t s = nontrivial.size();
  if (s == 0) {
    if (d == 1 && bd.size() > 0) {
      finish({});
    } else {
      result.status = SearchStatus::ProvenNone;
    }
    return result;
  }
  if (s == 1) {
    result.status = SearchStatus::ProvenNone;
    return result;
  }

  Problem pb;
  pb.d = d;
  pb.input_index = nontrivial;
  for (std::size_t k : nontrivial) {
    const Partition& type = bd.partitions()[k];
    pb.types.push_back(counts_of(type));
    pb.branching.push_back(d - type.length());
  }
  pb.suffix.assign(s + 1, 0);
  for (std::size_t i = s; i-- > 0;) pb.suffix[i] = pb.suffix[i + 1] + pb.branching[i];

  const Perm first = canonical_representative(bd.partitions()[nontrivial[0]]);
  result.nodes = 1;

  if (s == 2) {
    int cycles = 0;
    const bool ok = cycle_counts(first, d, &cycles) == pb.types[1] && cycles == 1;
    if (ok) {
      finish({first, inverse(first, d)});
    } else {
      result.status = SearchStatus::ProvenNone;
    }
    return result;
  }

  Shared shared;
  shared.max_nodes = budget.max_nodes;
  if (budget.time_limit) {
    shared.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(*budget.time_limit));
  }

  const std::uint64_t size = class_size(d, pb.types[1]);
  const int shards = static_cast<int>(std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(1, budget.parallel_shards)), 1, std::max<std::uint64_t>(size, 1)));
  std::vector<std::optional<std::vector<Perm>>> found(static_cast<std::size_t>(shards));
  std::vector<char> aborted(static_cast<std::size_t>(shards), 0);

  auto run_shard = [&](int k) {
    const std::uint64_t lo = size * static_cast<std::uint64_t>(k) / static_cast<std::uint64_t>(shards);
    const std::uint64_t hi = size * static_cast<std::uint64_t>(k + 1) / static_cast<std::uint64_t>(shards);
    ShardSearch search(pb, shared, k, lo, hi);
    const bool hit = search.run(first);
    aborted[static_cast<std::size_t>(k)] = search.aborted() ? 1 : 0;
    if (hit) {
      std::vector<Perm> w = search.witness();
      Perm product = w[0];
      for (std::size_t i = 1; i + 1 < w.size(); ++i) product = compose(product, w[i], d);
      w.back() = inverse(product, d);
      found[static_cast<std::size_t>(k)] = std::move(w);
      int best = shared.best_shard.load();
      while (k < best && !shared.best_shard.compare_exchange_weak(best, k)) {
      }
    }
  };

  if (shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> threads;
    for (int k = 0; k < shards; ++k) threads.emplace_back(run_shard, k);
    for (auto& t : threads) t.join();
  }

  result.nodes += shared.nodes.load();
  for (const auto& w : found) {
    if (w) {
      finish(*w);
      return result;
    }
  }
  const bool incomplete = std::any_of(aborted.begin(), aborted.end(), [](char a) { return a != 0; });
  result.status = incomplete ? SearchStatus::Unknown : SearchStatus::ProvenNone;
  return result;
}

SearchResult search_any_genus(const BranchData& bd, const SearchBudget& budget) {
  const CoverGenus genus = cover_genus(bd);
  if (!genus.is_integer() || genus.value() < 0) return SearchResult{SearchStatus::ProvenNone, std::nullopt, 0};
  return search_tuples(bd, static_cast<int>(genus.value()), budget);
}

}  // namespace hurwitz
