#include "esd/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "esd/automorphism.hpp"
#include "esd/candidates.hpp"
#include "esd/verify.hpp"
#include "esd/weights.hpp"

namespace esd {

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ExhaustedNoneExists: return "exhaustedNoneExists";
    case SearchStatus::Aborted: return "aborted";
  }
  return {};
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::First: return "first";
    case SearchMode::Count: return "count";
    case SearchMode::EnumerateUpToIso: return "enum-iso";
  }
  return {};
}

namespace {

using Clock = std::chrono::steady_clock;

// Limits and cancellation shared by all workers of one solve() call.
struct Control {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> aborted{false};
  std::optional<std::uint64_t> node_limit;
  std::optional<Clock::time_point> deadline;
};

class Explorer {
 public:
  Explorer(const Graph& g, const SearchConfig& cfg, Control& control)
      : g_(g),
        cfg_(cfg),
        control_(control),
        labels_(static_cast<std::size_t>(g.order()) + 1, 0),
        weights_(cfg.pool),
        candidates_(g.order(), cfg.pool),
        free_(g.order()) {
    static_order_.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 1; v <= g.order(); ++v) static_order_[v - 1] = v;
    std::stable_sort(static_order_.begin(), static_order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  // Vertex the search branches on first.
  Vertex root() { return pick(); }

  void run() { descend(); }

  void run_from(Vertex v, Label a) {
    if (!count_node()) return;
    assign(v, a);
    descend();
    undo(v);
  }

  std::uint64_t solutions() const { return solutions_; }
  std::vector<Labeling>& found() { return found_; }

 private:
  bool keep_all() const { return cfg_.mode != SearchMode::First; }

  bool count_node() {
    const std::uint64_t visited = control_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (control_.node_limit && visited > *control_.node_limit) {
      control_.nodes.fetch_sub(1, std::memory_order_relaxed);
      control_.aborted = true;
      control_.stop = true;
      return false;
    }
    if (control_.deadline && (visited & 1023) == 0 && Clock::now() > *control_.deadline) {
      control_.aborted = true;
      control_.stop = true;
      return false;
    }
    return true;
  }

  // Next vertex to branch on, 0 if some free vertex has no candidates left.
  Vertex pick() const {
    Vertex best = 0;
    std::size_t best_count = 0;
    for (Vertex v : static_order_) {
      if (labels_[v] != 0) continue;
      const std::size_t c = candidates_.of(v).count();
      if (c == 0) return 0;
      if (cfg_.ordering == VertexOrdering::StaticDegree) {
        if (best == 0) best = v;
        continue;
      }
      // static_order_ is degree-descending then index-ascending, so the first
      // vertex with the fewest candidates wins ties.
      if (best == 0 || c < best_count) {
        best = v;
        best_count = c;
      }
    }
    return best;
  }

  void descend() {
    if (control_.stop) return;
    if (free_ == 0) {
      record();
      return;
    }
    const Vertex v = pick();
    if (v == 0) return;
    const std::vector<Label> options = candidates_.of(v).to_vector();
    for (Label a : options) {
      if (control_.stop || !count_node()) return;
      assign(v, a);
      descend();
      undo(v);
    }
  }

  void assign(Vertex v, Label a) {
    labels_[v] = a;
    --free_;
    for (Vertex x : g_.neighbors(v)) {
      if (labels_[x] != 0 && x != v) weights_.insert(a + labels_[x], Edge::of(v, x));
    }
    marks_.push_back(trail_.size());
    propagate_assignment(g_, labels_, weights_, v, [&](Vertex u, Label b) {
      if (candidates_.erase(u, b)) trail_.emplace_back(u, b);
    });
  }

  void undo(Vertex v) {
    const std::size_t mark = marks_.back();
    marks_.pop_back();
    while (trail_.size() > mark) {
      candidates_.insert(trail_.back().first, trail_.back().second);
      trail_.pop_back();
    }
    for (Vertex x : g_.neighbors(v)) {
      if (labels_[x] != 0 && x != v) weights_.erase(labels_[v] + labels_[x]);
    }
    labels_[v] = 0;
    ++free_;
  }

  void record() {
    ++solutions_;
    if (!keep_all() || !cfg_.store_limit || found_.size() < *cfg_.store_limit) {
      found_.push_back(Labeling::from_values(cfg_.pool, std::span(labels_).subspan(1)));
    }
    if (!keep_all()) control_.stop = true;
  }

  const Graph& g_;
  const SearchConfig& cfg_;
  Control& control_;
  std::vector<Label> labels_;
  WeightSet weights_;
  CandidateSets candidates_;
  int free_;
  std::vector<Vertex> static_order_;
  std::vector<std::pair<Vertex, Label>> trail_;
  std::vector<std::size_t> marks_;
  std::vector<Labeling> found_;
  std::uint64_t solutions_ = 0;
};

std::vector<Labeling> quotient_by_isomorphism(const Graph& g, const std::vector<Labeling>& all) {
  std::vector<Labeling> reps;
  for (const Labeling& phi : all) {
    const bool known = std::any_of(reps.begin(), reps.end(),
                                   [&](const Labeling& rep) { return labelings_isomorphic(g, rep, phi); });
    if (!known) reps.push_back(phi);
  }
  return reps;
}

void run_parallel(const Graph& g, const SearchConfig& cfg, Control& control, std::uint64_t& solutions,
                  std::vector<Labeling>& found) {
  const Vertex root = Explorer(g, cfg, control).root();
  const auto tasks = static_cast<std::size_t>(cfg.pool);
  std::vector<std::uint64_t> task_solutions(tasks, 0);
  std::vector<std::vector<Labeling>> task_found(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks && !control.stop; t = next++) {
      Explorer explorer(g, cfg, control);
      explorer.run_from(root, static_cast<Label>(t) + 1);
      task_solutions[t] = explorer.solutions();
      task_found[t] = std::move(explorer.found());
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int j = 0; j < cfg.jobs; ++j) pool.emplace_back(worker);
  }
  for (std::size_t t = 0; t < tasks; ++t) {
    solutions += task_solutions[t];
    for (auto& phi : task_found[t]) {
      if (cfg.mode == SearchMode::First && !found.empty()) break;
      if (cfg.store_limit && found.size() >= *cfg.store_limit) break;
      found.push_back(std::move(phi));
    }
  }
}

}  // namespace

SearchOutcome solve(const Graph& g, const SearchConfig& cfg) {
  if (g.order() < 1) throw std::invalid_argument("search needs at least one vertex");
  if (cfg.pool < 1) throw std::invalid_argument("label pool must be positive");
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be positive");

  SearchOutcome out;
  if (cfg.pool < g.order()) {
    out.status = SearchStatus::ExhaustedNoneExists;
    out.certificate_note = "pool smaller than the vertex count: no injective labeling";
    return out;
  }
  const auto available = static_cast<std::size_t>(std::max<Label>(0, 2 * cfg.pool - 3));
  if (cfg.edge_bound_filter && g.size() > available) {
    out.status = SearchStatus::ExhaustedNoneExists;
    out.certificate_note = cfg.pool == g.order()
                               ? "rejected by |E| <= 2n-3"
                               : "rejected: |E| exceeds the 2l-3 available edge-weights";
    return out;
  }

  Control control;
  control.node_limit = cfg.node_limit;
  if (cfg.time_limit) control.deadline = Clock::now() + *cfg.time_limit;

  std::vector<Labeling> found;
  if (cfg.jobs > 1) {
    run_parallel(g, cfg, control, out.solutions, found);
  } else {
    Explorer explorer(g, cfg, control);
    explorer.run();
    out.solutions = explorer.solutions();
    found = std::move(explorer.found());
  }
  out.nodes_visited = control.nodes.load();

  if (out.solutions > 0 && (cfg.mode == SearchMode::First || !control.aborted)) {
    out.status = SearchStatus::Found;
  } else if (control.aborted) {
    out.status = SearchStatus::Aborted;
    out.certificate_note = "node or time limit reached";
  } else {
    out.status = SearchStatus::ExhaustedNoneExists;
    out.certificate_note = "search space exhausted";
  }
  if (control.aborted && out.solutions > 0 && cfg.mode != SearchMode::First) {
    out.certificate_note = "limit reached; counts are partial";
  }

  out.labelings = cfg.mode == SearchMode::EnumerateUpToIso ? quotient_by_isomorphism(g, found) : std::move(found);
  return out;
}

std::vector<Labeling> enumerate_up_to_iso(const Graph& g, Label pool) {
  SearchConfig cfg;
  cfg.pool = pool;
  cfg.mode = SearchMode::EnumerateUpToIso;
  SearchOutcome out = solve(g, cfg);
  if (out.status == SearchStatus::Aborted) throw SearchAborted("enumeration hit the node limit");
  return out.labelings;
}

std::optional<Label> min_pool_size(const Graph& g, Label max_pool, SearchConfig base) {
  if (max_pool < g.order()) throw std::invalid_argument("max_pool must be at least the vertex count");
  base.mode = SearchMode::First;
  for (Label l = std::max<Label>(1, g.order()); l <= max_pool; ++l) {
    base.pool = l;
    const SearchOutcome out = solve(g, base);
    if (out.status == SearchStatus::Found) return l;
    if (out.status == SearchStatus::Aborted) {
      throw SearchAborted("search aborted at pool " + std::to_string(l));
    }
  }
  return std::nullopt;
}

}  // namespace esd
