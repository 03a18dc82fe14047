#include "halfdom/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <limits>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <thread>

#include "simplex.hpp"

namespace halfdom {

namespace {

using Clock = std::chrono::steady_clock;

// Fixed-point scale for certified bounds: multipliers are rounded to
// integers over this denominator before the bound is evaluated exactly.
constexpr std::int64_t kScale = std::int64_t{1} << 30;

class Deadline {
 public:
  explicit Deadline(std::optional<std::chrono::duration<double>> limit) {
    if (limit) {
      end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*limit);
      bounded_ = true;
    }
  }
  [[nodiscard]] bool expired() const { return bounded_ && Clock::now() >= end_; }
  [[nodiscard]] std::optional<std::chrono::duration<double>> remaining() const {
    if (!bounded_) return std::nullopt;
    return std::max(std::chrono::duration<double>(0), std::chrono::duration<double>(end_ - Clock::now()));
  }

 private:
  Clock::time_point end_{};
  bool bounded_ = false;
};

// Flat integer form of the per-vertex system plus incremental feasibility data.
struct Model {
  int size = 0;
  std::vector<int> cap;
  std::vector<int> degree;
  std::vector<int> self;
  std::vector<int> nb_off{0};
  std::vector<int> nb_vertex;
  std::vector<int> nb_mult;
  std::vector<int> row_off{0};
  std::vector<int> row_var;
  std::vector<int> row_coef;
  std::vector<int> rhs;
  std::vector<std::int64_t> weight;
  std::vector<char> pinned;

  Model(const Neighborhoods& nb, std::vector<std::int64_t> weights, const std::vector<int>& forced_zero) {
    size = nb.size();
    weight = std::move(weights);
    pinned.assign(static_cast<std::size_t>(size), 0);
    for (int v : forced_zero) pinned[static_cast<std::size_t>(v)] = 1;
    // Dropping a vertex keeps a selection feasible, so weightless vertices never help.
    for (int v = 0; v < size; ++v) {
      if (weight[static_cast<std::size_t>(v)] == 0) pinned[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < size; ++v) {
      const int d = nb.degree(v);
      int own = 0;
      for (const auto& e : nb.entries(v)) {
        if (e.vertex == v) {
          own += e.multiplicity;
        } else {
          nb_vertex.push_back(e.vertex);
          nb_mult.push_back(e.multiplicity);
        }
      }
      nb_off.push_back(static_cast<int>(nb_vertex.size()));
      cap.push_back(nb.cap(v));
      degree.push_back(d);
      self.push_back(own);
      row_var.push_back(v);
      row_coef.push_back(d - nb.cap(v) + own);
      for (int p = nb_off[static_cast<std::size_t>(v)]; p < nb_off[static_cast<std::size_t>(v) + 1]; ++p) {
        row_var.push_back(nb_vertex[static_cast<std::size_t>(p)]);
        row_coef.push_back(nb_mult[static_cast<std::size_t>(p)]);
      }
      row_off.push_back(static_cast<int>(row_var.size()));
      rhs.push_back(d);
    }
  }

  [[nodiscard]] std::int64_t w(int v) const { return weight[static_cast<std::size_t>(v)]; }
};

// Selection with per-vertex selected-neighbour counts.
class Packing {
 public:
  explicit Packing(const Model& model)
      : model_(&model), count_(static_cast<std::size_t>(model.size), 0), sel_(static_cast<std::size_t>(model.size), 0) {}

  [[nodiscard]] bool can_add(int v) const {
    const auto& M = *model_;
    const auto uv = static_cast<std::size_t>(v);
    if (sel_[uv] || M.pinned[uv]) return false;
    if (count_[uv] + M.self[uv] > M.cap[uv]) return false;
    for (int p = M.nb_off[uv]; p < M.nb_off[uv + 1]; ++p) {
      const auto w = static_cast<std::size_t>(M.nb_vertex[static_cast<std::size_t>(p)]);
      if (sel_[w] && count_[w] + M.nb_mult[static_cast<std::size_t>(p)] > M.cap[w]) return false;
    }
    return true;
  }

  void add(int v) { apply(v, 1); }
  void remove(int v) { apply(v, -1); }

  [[nodiscard]] bool contains(int v) const { return sel_[static_cast<std::size_t>(v)] != 0; }
  [[nodiscard]] std::int64_t value() const { return value_; }
  [[nodiscard]] const std::vector<char>& bits() const { return sel_; }

 private:
  void apply(int v, int sign) {
    const auto& M = *model_;
    const auto uv = static_cast<std::size_t>(v);
    sel_[uv] = sign > 0 ? 1 : 0;
    value_ += sign * M.weight[uv];
    count_[uv] += sign * M.self[uv];
    for (int p = M.nb_off[uv]; p < M.nb_off[uv + 1]; ++p) {
      count_[static_cast<std::size_t>(M.nb_vertex[static_cast<std::size_t>(p)])] +=
          sign * M.nb_mult[static_cast<std::size_t>(p)];
    }
  }

  const Model* model_;
  std::vector<int> count_;
  std::vector<char> sel_;
  std::int64_t value_ = 0;
};

bool feasible_bits(const Model& model, const std::vector<char>& bits) {
  Packing p(model);
  for (int v = 0; v < model.size; ++v) {
    if (!bits[static_cast<std::size_t>(v)]) continue;
    if (!p.can_add(v)) return false;
    p.add(v);
  }
  return true;
}

Selection to_selection(const std::vector<char>& bits) {
  Selection sel(static_cast<int>(bits.size()));
  for (std::size_t v = 0; v < bits.size(); ++v) {
    if (bits[v]) sel.set(static_cast<int>(v));
  }
  return sel;
}

// ---------------------------------------------------------------------------
// Node relaxation: propagation, LP bound, rounding heuristic.

using Fix = std::vector<std::int8_t>;  // -1 free, 0, 1

struct Relaxation {
  bool feasible = true;
  std::int64_t bound = 0;
  double value = 0;       // floating LP optimum, for branching scores
  std::vector<double> x;  // per vertex; fixed vertices carry their value
};

// Fixing to 0 never changes a residual, so one pass reaches the fixpoint.
bool propagate(const Model& M, Fix& fix, std::vector<std::int64_t>& residual) {
  residual.assign(static_cast<std::size_t>(M.size), 0);
  for (int r = 0; r < M.size; ++r) {
    std::int64_t res = M.rhs[static_cast<std::size_t>(r)];
    for (int p = M.row_off[static_cast<std::size_t>(r)]; p < M.row_off[static_cast<std::size_t>(r) + 1]; ++p) {
      if (fix[static_cast<std::size_t>(M.row_var[static_cast<std::size_t>(p)])] == 1) {
        res -= M.row_coef[static_cast<std::size_t>(p)];
      }
    }
    if (res < 0) return false;
    residual[static_cast<std::size_t>(r)] = res;
  }
  for (int r = 0; r < M.size; ++r) {
    const std::int64_t res = residual[static_cast<std::size_t>(r)];
    for (int p = M.row_off[static_cast<std::size_t>(r)]; p < M.row_off[static_cast<std::size_t>(r) + 1]; ++p) {
      const auto v = static_cast<std::size_t>(M.row_var[static_cast<std::size_t>(p)]);
      if (fix[v] == -1 && M.row_coef[static_cast<std::size_t>(p)] > res) fix[v] = 0;
    }
  }
  return true;
}

Relaxation relax(const Model& M, Fix& fix) {
  Relaxation out;
  std::vector<std::int64_t> residual;
  if (!propagate(M, fix, residual)) {
    out.feasible = false;
    return out;
  }
  std::vector<int> col_of(static_cast<std::size_t>(M.size), -1);
  std::vector<int> free_vars;
  std::int64_t fixed_value = 0;
  std::int64_t trivial = 0;
  for (int v = 0; v < M.size; ++v) {
    const auto uv = static_cast<std::size_t>(v);
    if (fix[uv] == 1) fixed_value += M.w(v);
    if (fix[uv] == -1) {
      col_of[uv] = static_cast<int>(free_vars.size());
      free_vars.push_back(v);
      trivial += std::max<std::int64_t>(0, M.w(v));
    }
  }
  std::vector<int> rows;
  for (int r = 0; r < M.size; ++r) {
    std::int64_t free_sum = 0;
    for (int p = M.row_off[static_cast<std::size_t>(r)]; p < M.row_off[static_cast<std::size_t>(r) + 1]; ++p) {
      if (col_of[static_cast<std::size_t>(M.row_var[static_cast<std::size_t>(p)])] >= 0) {
        free_sum += M.row_coef[static_cast<std::size_t>(p)];
      }
    }
    if (free_sum > residual[static_cast<std::size_t>(r)]) rows.push_back(r);
  }

  detail::SimplexProblem<double> lp;
  lp.rows = static_cast<int>(rows.size());
  lp.cols = static_cast<int>(free_vars.size());
  lp.a.assign(static_cast<std::size_t>(lp.rows) * static_cast<std::size_t>(lp.cols), 0.0);
  for (int i = 0; i < lp.rows; ++i) {
    const int r = rows[static_cast<std::size_t>(i)];
    for (int p = M.row_off[static_cast<std::size_t>(r)]; p < M.row_off[static_cast<std::size_t>(r) + 1]; ++p) {
      const int col = col_of[static_cast<std::size_t>(M.row_var[static_cast<std::size_t>(p)])];
      if (col >= 0) {
        lp.a[static_cast<std::size_t>(i) * static_cast<std::size_t>(lp.cols) + static_cast<std::size_t>(col)] +=
            M.row_coef[static_cast<std::size_t>(p)];
      }
    }
    lp.b.push_back(static_cast<double>(residual[static_cast<std::size_t>(r)]));
  }
  for (int v : free_vars) lp.c.push_back(static_cast<double>(M.w(v)));
  lp.upper.assign(static_cast<std::size_t>(lp.cols), 1.0);
  const auto sol = detail::solve_bounded(lp, 1e-9, 100'000);

  // Exact weak-duality bound from the rounded multipliers.
  std::vector<std::int64_t> Y(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double y = sol.y[i];
    if (y > 0 && std::isfinite(y)) Y[i] = std::llround(y * static_cast<double>(kScale));
  }
  std::vector<__int128> aty(free_vars.size(), 0);
  __int128 num = static_cast<__int128>(fixed_value) * kScale;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (Y[i] == 0) continue;
    const int r = rows[i];
    num += static_cast<__int128>(Y[i]) * residual[static_cast<std::size_t>(r)];
    for (int p = M.row_off[static_cast<std::size_t>(r)]; p < M.row_off[static_cast<std::size_t>(r) + 1]; ++p) {
      const int col = col_of[static_cast<std::size_t>(M.row_var[static_cast<std::size_t>(p)])];
      if (col >= 0) aty[static_cast<std::size_t>(col)] += static_cast<__int128>(Y[i]) * M.row_coef[static_cast<std::size_t>(p)];
    }
  }
  for (std::size_t col = 0; col < free_vars.size(); ++col) {
    const __int128 reduced = static_cast<__int128>(M.w(free_vars[col])) * kScale - aty[col];
    if (reduced > 0) num += reduced;
  }
  const auto certified = static_cast<std::int64_t>(num / kScale);  // num >= 0
  out.bound = std::min(certified, fixed_value + trivial);

  out.x.assign(static_cast<std::size_t>(M.size), 0.0);
  for (int v = 0; v < M.size; ++v) {
    if (fix[static_cast<std::size_t>(v)] == 1) out.x[static_cast<std::size_t>(v)] = 1.0;
  }
  for (std::size_t col = 0; col < free_vars.size(); ++col) {
    out.x[static_cast<std::size_t>(free_vars[col])] = std::clamp(sol.x[col], 0.0, 1.0);
    out.value += static_cast<double>(M.w(free_vars[col])) * sol.x[col];
  }
  out.value += static_cast<double>(fixed_value);
  return out;
}

// Fixed ones first, then everything else by decreasing LP value.
Packing round_greedy(const Model& M, const Fix& fix, const std::vector<double>& x) {
  Packing p(M);
  for (int v = 0; v < M.size; ++v) {
    if (fix[static_cast<std::size_t>(v)] == 1) p.add(v);
  }
  std::vector<int> order;
  for (int v = 0; v < M.size; ++v) {
    if (fix[static_cast<std::size_t>(v)] != 1 && !M.pinned[static_cast<std::size_t>(v)] && M.w(v) > 0) {
      order.push_back(v);
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const bool fa = fix[static_cast<std::size_t>(a)] == -1;
    const bool fb = fix[static_cast<std::size_t>(b)] == -1;
    if (fa != fb) return fa;
    return x[static_cast<std::size_t>(a)] > x[static_cast<std::size_t>(b)] + 1e-9;
  });
  for (int v : order) {
    if (p.can_add(v)) p.add(v);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Brute force.

class Brute {
 public:
  Brute(const Model& M, const Deadline& deadline, std::int64_t stop_at)
      : M_(M), deadline_(deadline), stop_at_(stop_at), packing_(M), suffix_(static_cast<std::size_t>(M.size) + 1, 0) {
    for (int v = M.size - 1; v >= 0; --v) {
      suffix_[static_cast<std::size_t>(v)] =
          suffix_[static_cast<std::size_t>(v) + 1] + (M.pinned[static_cast<std::size_t>(v)] ? 0 : M.w(v));
    }
  }

  void run() { dfs(0); }

  std::int64_t best = -1;
  std::vector<char> best_bits;
  long nodes = 0;
  bool aborted = false;
  bool target_hit = false;

 private:
  void dfs(int idx) {
    if (aborted || target_hit) return;
    if ((++nodes & 0xfff) == 0 && deadline_.expired()) {
      aborted = true;
      return;
    }
    if (packing_.value() + suffix_[static_cast<std::size_t>(idx)] <= best) return;
    if (idx == M_.size) {
      best = packing_.value();
      best_bits = packing_.bits();
      if (best >= stop_at_) target_hit = true;
      return;
    }
    if (packing_.can_add(idx)) {
      packing_.add(idx);
      dfs(idx + 1);
      packing_.remove(idx);
    }
    dfs(idx + 1);
  }

  const Model& M_;
  const Deadline& deadline_;
  std::int64_t stop_at_;
  Packing packing_;
  std::vector<std::int64_t> suffix_;
};

// ---------------------------------------------------------------------------
// Best-first branch and bound.

constexpr std::size_t kStrongCandidates = 8;

struct Node {
  std::int64_t bound = 0;
  int depth = 0;
  long seq = 0;
  Fix fix;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

struct SearchOutcome {
  std::int64_t best = 0;
  std::vector<char> bits;
  bool proven = false;
  bool target_hit = false;
  std::int64_t upper = 0;
  long nodes = 0;
};

class BranchAndBound {
 public:
  BranchAndBound(const Model& M, const Deadline& deadline, std::int64_t stop_at, int threads)
      : M_(M), deadline_(deadline), stop_at_(stop_at), threads_(std::max(1, threads)) {}

  void offer(std::int64_t value, const std::vector<char>& bits) {
    if (value > best_) {
      best_ = value;
      bits_ = bits;
    }
  }

  void add_root(Fix fix) {
    std::int64_t trivial = 0;
    for (int v = 0; v < M_.size; ++v) {
      if (fix[static_cast<std::size_t>(v)] != 0) trivial += M_.w(v);
    }
    queue_.push(Node{trivial, 0, seq_++, std::move(fix)});
  }

  SearchOutcome run() {
    if (best_ >= stop_at_) target_hit_ = true;
    if (threads_ == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads_; ++t) pool.emplace_back([this] { worker(); });
      for (auto& th : pool) th.join();
    }
    SearchOutcome out;
    out.best = best_;
    out.bits = bits_;
    out.nodes = nodes_;
    out.target_hit = target_hit_;
    out.proven = !stopped_ && queue_.empty();
    std::int64_t upper = best_;
    if (!out.proven) {
      if (!queue_.empty()) upper = std::max(upper, queue_.top().bound);
      if (!inflight_.empty()) upper = std::max(upper, *inflight_.rbegin());
    }
    out.upper = upper;
    return out;
  }

 private:
  void worker() {
    std::unique_lock lock(mu_);
    for (;;) {
      cv_.wait(lock, [&] { return stopped_ || !queue_.empty() || busy_ == 0; });
      if (stopped_ || (queue_.empty() && busy_ == 0)) break;
      if (deadline_.expired() || target_hit_) {
        stopped_ = true;
        cv_.notify_all();
        break;
      }
      Node node = queue_.top();
      queue_.pop();
      if (node.bound <= best_) continue;
      ++busy_;
      ++nodes_;
      auto handle = inflight_.insert(node.bound);
      const std::int64_t incumbent = best_;
      lock.unlock();

      std::vector<Node> children;
      std::int64_t found = -1;
      std::vector<char> found_bits;
      expand(node, incumbent, children, found, found_bits);

      lock.lock();
      inflight_.erase(handle);
      --busy_;
      if (found > best_) {
        best_ = found;
        bits_ = std::move(found_bits);
        if (best_ >= stop_at_) target_hit_ = true;
      }
      for (auto& child : children) {
        if (child.bound > best_) {
          child.seq = seq_++;
          queue_.push(std::move(child));
        }
      }
      cv_.notify_all();
    }
  }

  void expand(Node& node, std::int64_t incumbent, std::vector<Node>& children, std::int64_t& found,
              std::vector<char>& found_bits) const {
    Relaxation rel = relax(M_, node.fix);
    if (!rel.feasible || rel.bound <= incumbent) return;
    Packing guess = round_greedy(M_, node.fix, rel.x);
    if (guess.value() > incumbent) {
      found = guess.value();
      found_bits = guess.bits();
      incumbent = found;
    }
    if (rel.bound <= incumbent) return;

    std::vector<std::pair<double, int>> ranked;
    for (int v = 0; v < M_.size; ++v) {
      if (node.fix[static_cast<std::size_t>(v)] != -1) continue;
      const double xv = rel.x[static_cast<std::size_t>(v)];
      if (xv <= 1e-6 || xv >= 1 - 1e-6) continue;
      ranked.emplace_back(-xv * M_.degree[static_cast<std::size_t>(v)], v);
    }
    if (ranked.empty()) {
      int branch = -1;
      double score = -1;
      for (int v = 0; v < M_.size; ++v) {
        if (node.fix[static_cast<std::size_t>(v)] != -1) continue;
        const double s = rel.x[static_cast<std::size_t>(v)] * M_.degree[static_cast<std::size_t>(v)];
        if (s > score + 1e-12) {
          score = s;
          branch = v;
        }
      }
      if (branch < 0) return;  // all fixed: the rounding above already took this point
      ranked.emplace_back(0.0, branch);
    }
    std::stable_sort(ranked.begin(), ranked.end());
    if (ranked.size() > kStrongCandidates) ranked.resize(kStrongCandidates);

    // Strong branching: solve both children of each candidate, keep the
    // product of the objective drops. A side that cannot beat the incumbent
    // settles the choice at once.
    struct Side {
      Fix fix;
      std::int64_t bound = -1;
    };
    Side best_one;
    Side best_zero;
    double best_score = -1;
    const double eps = 1e-6;
    for (const auto& [key, v] : ranked) {
      Side sides[2];
      double drop[2] = {0, 0};
      for (int value = 0; value < 2; ++value) {
        sides[value].fix = node.fix;
        sides[value].fix[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(value);
        const Relaxation child = relax(M_, sides[value].fix);
        if (!child.feasible) continue;
        sides[value].bound = std::min(rel.bound, child.bound);
        drop[value] = rel.value - child.value;
        Packing p = round_greedy(M_, sides[value].fix, child.x);
        if (p.value() > incumbent) {
          found = p.value();
          found_bits = p.bits();
          incumbent = found;
        }
      }
      if (rel.bound <= incumbent) return;
      const bool dead0 = sides[0].bound <= incumbent;
      const bool dead1 = sides[1].bound <= incumbent;
      if (dead0 && dead1) return;
      if (dead0 || dead1) {
        Side& keep = dead0 ? sides[1] : sides[0];
        children.push_back(Node{keep.bound, node.depth + 1, 0, std::move(keep.fix)});
        return;
      }
      const double score = std::max(drop[0], eps) * std::max(drop[1], eps);
      if (score > best_score) {
        best_score = score;
        best_zero = std::move(sides[0]);
        best_one = std::move(sides[1]);
      }
    }
    if (best_one.bound > incumbent) children.push_back(Node{best_one.bound, node.depth + 1, 0, std::move(best_one.fix)});
    if (best_zero.bound > incumbent) {
      children.push_back(Node{best_zero.bound, node.depth + 1, 0, std::move(best_zero.fix)});
    }
  }

  const Model& M_;
  const Deadline& deadline_;
  std::int64_t stop_at_;
  int threads_;

  std::mutex mu_;
  std::condition_variable cv_;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> queue_;
  std::multiset<std::int64_t> inflight_;
  std::int64_t best_ = 0;
  std::vector<char> bits_;
  long seq_ = 0;
  long nodes_ = 0;
  int busy_ = 0;
  bool stopped_ = false;
  bool target_hit_ = false;
};

// Smallest optimal witness in x = 1 first id order, given the optimum value.
class LexSearch {
 public:
  LexSearch(const Model& M, const Deadline& deadline, std::int64_t goal)
      : M_(M), deadline_(deadline), goal_(goal), packing_(M), fix_(static_cast<std::size_t>(M.size), -1) {
    for (int v = 0; v < M.size; ++v) {
      if (M.pinned[static_cast<std::size_t>(v)]) fix_[static_cast<std::size_t>(v)] = 0;
    }
  }

  bool run() { return dfs(0); }
  std::vector<char> bits;
  bool aborted = false;

 private:
  bool dfs(int idx) {
    if (deadline_.expired()) {
      aborted = true;
      return false;
    }
    Fix probe = fix_;
    const Relaxation rel = relax(M_, probe);
    if (!rel.feasible || rel.bound < goal_) return false;
    if (packing_.value() >= goal_) {
      bits = packing_.bits();
      return true;
    }
    while (idx < M_.size && probe[static_cast<std::size_t>(idx)] != -1) ++idx;
    if (idx == M_.size) return false;
    if (packing_.can_add(idx)) {
      fix_[static_cast<std::size_t>(idx)] = 1;
      packing_.add(idx);
      if (dfs(idx + 1)) return true;
      packing_.remove(idx);
      if (aborted) return false;
    }
    fix_[static_cast<std::size_t>(idx)] = 0;
    const bool ok = dfs(idx + 1);
    fix_[static_cast<std::size_t>(idx)] = -1;
    return ok;
  }

  const Model& M_;
  const Deadline& deadline_;
  std::int64_t goal_;
  Packing packing_;
  Fix fix_;
};

std::int64_t target_objective(const Rational& target, int vertices) {
  // Smallest objective k with k / vertices >= target.
  const Rational scaled = target * Rational(vertices);
  std::int64_t k = scaled.floor();
  if (Rational(k) < scaled) ++k;
  return std::max<std::int64_t>(k, 0);
}

bool unit_weights(const std::vector<std::int64_t>& w) {
  return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 1; });
}

std::vector<int> divisors(int x) {
  std::vector<int> out;
  for (int d = 1; d <= x; ++d) {
    if (x % d == 0) out.push_back(d);
  }
  return out;
}

constexpr int kLiftMaxVertices = 48;

void try_lifts(const QuotientGraph& graph, const Model& M, Adjacency adjacency, const Deadline& deadline,
               BranchAndBound& search) {
  const int c = cluster_spec(graph.kind()).size();
  for (int mm : divisors(graph.m())) {
    for (int nn : divisors(graph.n())) {
      const int sub_size = mm * nn * c;
      if (sub_size >= graph.size() || sub_size > kLiftMaxVertices) continue;
      if (deadline.expired()) return;
      SolveOptions sub;
      sub.adjacency = adjacency;
      sub.time_limit = deadline.remaining();
      const QuotientGraph small = build_torus(graph.kind(), mm, nn);
      const OptResult res = solve_exact(small, sub);
      std::vector<char> bits(static_cast<std::size_t>(graph.size()), 0);
      for (const auto& rec : graph.vertices()) {
        const int src = cluster_vertex_id(nn, c, rec.i % mm, rec.j % nn, rec.k);
        bits[static_cast<std::size_t>(rec.id)] = res.witness.contains(src) ? 1 : 0;
      }
      if (feasible_bits(M, bits)) {
        search.offer(static_cast<std::int64_t>(std::count(bits.begin(), bits.end(), 1)), bits);
      }
    }
  }
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::automatic:
      return "auto";
    case Method::brute:
      return "brute";
    case Method::bnb:
      return "bnb";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "auto") return Method::automatic;
  if (text == "brute") return Method::brute;
  if (text == "bnb") return Method::bnb;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::string_view to_string(Status s) { return s == Status::optimal ? "optimal" : "lower_bound_only"; }

Status parse_status(std::string_view text) {
  if (text == "optimal") return Status::optimal;
  if (text == "lower_bound_only") return Status::lower_bound_only;
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::aggregated_lp:
      return "aggregated-lp";
    case Provenance::pinned:
      return "pinned";
    case Provenance::weighted_lp:
      return "weighted-lp";
    case Provenance::weighted_ilp:
      return "weighted-ilp";
    case Provenance::solver_exact:
      return "solver-exact";
  }
  return "?";
}

Provenance parse_provenance(std::string_view text) {
  for (auto p : {Provenance::aggregated_lp, Provenance::pinned, Provenance::weighted_lp, Provenance::weighted_ilp,
                 Provenance::solver_exact}) {
    if (to_string(p) == text) return p;
  }
  throw std::invalid_argument("unknown provenance '" + std::string(text) + "'");
}

OptResult solve_exact(const QuotientGraph& graph, const SolveOptions& options) {
  const auto start = Clock::now();
  const Deadline deadline(options.time_limit);
  const int size = graph.size();
  if (size == 0) throw std::invalid_argument("cannot solve an empty graph");

  std::vector<std::int64_t> weights = options.weights;
  if (weights.empty()) weights.assign(static_cast<std::size_t>(size), 1);
  if (static_cast<int>(weights.size()) != size) throw std::invalid_argument("one weight per vertex is required");
  if (std::any_of(weights.begin(), weights.end(), [](std::int64_t w) { return w < 0; })) {
    throw std::invalid_argument("weights must be non-negative");
  }
  for (int v : options.forced_zero) {
    if (v < 0 || v >= size) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
  }

  const Adjacency adjacency = options.adjacency.value_or(default_adjacency(graph));
  const Neighborhoods nb(graph, adjacency);
  const Model M(nb, weights, options.forced_zero);

  Method method = options.method;
  if (method == Method::automatic) method = size <= kAutoBruteLimit ? Method::brute : Method::bnb;
  if (method == Method::brute && size > kBruteLimit) {
    throw std::invalid_argument("brute force is limited to " + std::to_string(kBruteLimit) + " vertices");
  }

  std::int64_t stop_at = std::numeric_limits<std::int64_t>::max();
  if (options.target) stop_at = target_objective(*options.target, size);

  OptResult result;
  result.method_used = method;
  std::vector<char> bits;
  bool proven = false;

  if (method == Method::brute) {
    Brute brute(M, deadline, stop_at);
    brute.run();
    bits = brute.best_bits.empty() ? std::vector<char>(static_cast<std::size_t>(size), 0) : brute.best_bits;
    result.objective = std::max<std::int64_t>(brute.best, 0);
    result.nodes = brute.nodes;
    result.target_reached = brute.target_hit;
    proven = !brute.aborted && !brute.target_hit;
    result.lexicographic = proven;
    if (proven) {
      result.objective_upper_bound = result.objective;
    } else {
      std::int64_t total = 0;
      for (int v = 0; v < size; ++v) {
        if (!M.pinned[static_cast<std::size_t>(v)]) total += M.w(v);
      }
      result.objective_upper_bound = total;
    }
  } else {
    const bool plain = unit_weights(weights) && options.forced_zero.empty();
    const bool torus = graph.quotient() == Quotient::torus;
    BranchAndBound search(M, deadline, stop_at, options.threads);

    Fix all_free(static_cast<std::size_t>(size), -1);
    for (int v = 0; v < size; ++v) {
      if (M.pinned[static_cast<std::size_t>(v)]) all_free[static_cast<std::size_t>(v)] = 0;
    }
    const std::vector<double> flat(static_cast<std::size_t>(size), 0.5);
    const Packing greedy = round_greedy(M, all_free, flat);
    search.offer(greedy.value(), greedy.bits());
    if (plain && torus && options.periodic_lift) try_lifts(graph, M, adjacency, deadline, search);

    if (plain && torus && options.symmetry_breaking) {
      // Translate any non-empty optimum so its smallest tile index k sits in cluster (0, 0).
      const int c = cluster_spec(graph.kind()).size();
      for (int k = 1; k <= c; ++k) {
        Fix fix(static_cast<std::size_t>(size), -1);
        for (const auto& rec : graph.vertices()) {
          if (rec.k < k) fix[static_cast<std::size_t>(rec.id)] = 0;
        }
        fix[static_cast<std::size_t>(cluster_vertex_id(graph.n(), c, 0, 0, k))] = 1;
        search.add_root(std::move(fix));
      }
    } else {
      search.add_root(all_free);
    }
    const SearchOutcome outcome = search.run();
    bits = outcome.bits;
    result.objective = outcome.best;
    result.objective_upper_bound = outcome.upper;
    result.nodes = outcome.nodes;
    result.target_reached = outcome.target_hit;
    proven = outcome.proven;

    if (proven && options.deterministic) {
      LexSearch lex(M, deadline, outcome.best);
      if (outcome.best == 0) {
        bits.assign(static_cast<std::size_t>(size), 0);
        result.lexicographic = true;
      } else if (lex.run()) {
        bits = lex.bits;
        result.lexicographic = true;
      }
    }
  }

  result.status = proven ? Status::optimal : Status::lower_bound_only;
  if (bits.empty()) bits.assign(static_cast<std::size_t>(size), 0);
  if (!feasible_bits(M, bits)) throw std::logic_error("solver produced an infeasible witness");
  result.witness = to_selection(bits);
  result.best_cardinality = result.witness.count();
  result.density = Rational(result.best_cardinality, size);
  result.elapsed = Clock::now() - start;
  return result;
}

BoundReport pinned_density_bound(const QuotientGraph& graph, const std::vector<int>& zero_set,
                                 const SolveOptions& options) {
  std::vector<int> pins = zero_set;
  std::sort(pins.begin(), pins.end());
  pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
  for (int v : pins) {
    if (v < 0 || v >= graph.size()) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
  }
  const int free_count = graph.size() - static_cast<int>(pins.size());
  if (free_count <= 0) throw std::invalid_argument("pinned bound needs at least one unpinned vertex");
  SolveOptions inner_opts = options;
  inner_opts.forced_zero = pins;
  inner_opts.weights.clear();
  OptResult inner = solve_exact(graph, inner_opts);

  BoundReport report;
  report.provenance = Provenance::pinned;
  report.status = inner.status;
  report.value = Rational(inner.objective_upper_bound, free_count);
  if (inner.status != Status::optimal) {
    report.note = "search incomplete: value uses the proven upper bound " +
                  std::to_string(inner.objective_upper_bound) + ", best found " +
                  std::to_string(inner.best_cardinality);
  }
  report.certificate = {Rational(inner.best_cardinality), Rational(free_count)};
  report.certificate_labels = {"inner maximum", "unpinned vertices"};
  report.inner = std::move(inner);
  return report;
}

BoundReport weighted_density_bound(const QuotientGraph& graph, const std::vector<Rational>& weights,
                                   WeightedMode mode, const SolveOptions& options) {
  if (static_cast<int>(weights.size()) != graph.size()) throw std::invalid_argument("one weight per vertex is required");
  Rational total;
  for (const auto& w : weights) {
    if (w.sign() < 0) throw std::invalid_argument("weights must be non-negative");
    total += w;
  }
  if (total.is_zero()) throw std::invalid_argument("weights are all zero");

  BoundReport report;
  const Adjacency adjacency = options.adjacency.value_or(default_adjacency(graph));
  if (mode == WeightedMode::lp) {
    const LpSolution lp = lp_optimum(constraint_system(Neighborhoods(graph, adjacency)), weights);
    report.provenance = Provenance::weighted_lp;
    report.status = Status::optimal;
    report.value = lp.value / total;
    report.certificate = lp.primal;
    return report;
  }

  std::vector<std::int64_t> scaled;
  scaled.reserve(weights.size());
  for (const auto& w : weights) {
    if (!w.is_integer()) throw std::invalid_argument("integer mode needs whole-number weights");
    scaled.push_back(w.floor());
  }
  SolveOptions inner_opts = options;
  inner_opts.weights = std::move(scaled);
  inner_opts.forced_zero.clear();
  if (inner_opts.method == Method::automatic && graph.size() > kAutoBruteLimit) inner_opts.method = Method::bnb;
  OptResult inner = solve_exact(graph, inner_opts);
  report.provenance = Provenance::weighted_ilp;
  report.status = inner.status;
  report.value = Rational(inner.objective_upper_bound) / total;
  if (inner.status != Status::optimal) {
    report.note = "search incomplete: value uses the proven upper bound, best weight found " +
                  std::to_string(inner.objective);
  }
  for (int v = 0; v < graph.size(); ++v) report.certificate.push_back(Rational(inner.witness.contains(v) ? 1 : 0));
  report.inner = std::move(inner);
  return report;
}

std::vector<Rational> interior_weights(const QuotientGraph& graph) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(graph.size()));
  const int n = graph.n();
  for (const auto& rec : graph.vertices()) {
    const bool inside = rec.i >= 1 && rec.i <= n - 2 && rec.j >= 1 && rec.j <= n - 2;
    out.emplace_back(inside ? 1 : 0);
  }
  return out;
}

std::vector<TableCell> density_table(TessKind kind, Quotient quotient, const std::vector<std::pair<int, int>>& sizes,
                                     const SolveOptions& options) {
  std::vector<TableCell> out;
  for (const auto& [m, n] : sizes) {
    const QuotientGraph graph = build_graph(kind, m, n, quotient);
    const OptResult res = solve_exact(graph, options);
    TableCell cell;
    cell.m = m;
    cell.n = n;
    cell.vertices = graph.size();
    cell.cardinality = res.best_cardinality;
    cell.density = res.density;
    cell.status = res.status;
    cell.witness = res.witness;
    cell.elapsed = res.elapsed;
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace halfdom
