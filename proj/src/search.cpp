#include "deltaknot/search.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "deltaknot/invariants.hpp"
#include "deltaknot/rewrite.hpp"

namespace dk {

std::string describe(const Move& move) {
  if (move.kind == Move::Kind::Rewrite) return "rewrite:" + move.rule;
  std::string s = move.end == End::Front ? "technique:front" : "technique:back";
  s += "(anchor=" + std::to_string(move.anchor) + ",delta=" + (move.delta > 0 ? "+" : "") +
       std::to_string(move.delta) + ")";
  return s;
}

std::optional<ConwayWord> apply_technique(const ConwayWord& word, End end, Entry delta) {
  const std::size_t n = word.size();
  if (n < 2 || (delta != 2 && delta != -2)) return std::nullopt;
  const std::size_t anchor = end == End::Front ? 0 : n - 1;
  const std::size_t target = end == End::Front ? 1 : n - 2;
  if (word[anchor] == 0 || word[anchor] % 2 != 0) return std::nullopt;
  ConwayWord out = word;
  out[target] = checked_add(out[target], delta);
  return out;
}

std::vector<TechniqueEdge> technique_moves(const ConwayWord& word) {
  std::vector<TechniqueEdge> edges;
  for (End end : {End::Front, End::Back}) {
    // For n = 2 the back move touches entry 0 anchored at entry 1: a distinct move.
    for (Entry delta : {Entry{-2}, Entry{2}}) {
      auto after = apply_technique(word, end, delta);
      if (!after) continue;
      const Entry anchor = end == End::Front ? word.front() : word.back();
      Move m{Move::Kind::Technique, end, anchor, delta, "exchange"};
      edges.push_back({std::move(*after), std::move(m), (anchor < 0 ? -anchor : anchor) / 2});
    }
  }
  return edges;
}

namespace {

constexpr Entry kInfinity = std::numeric_limits<Entry>::max() / 4;

Entry floor_div(Entry a, Entry b) {
  Entry q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Entry ceil_div(Entry a, Entry b) { return -floor_div(-a, b); }

enum class Strategy { Floor, Ceil, Even };

std::optional<std::vector<Entry>> expand(Entry num, Entry den, Strategy strategy, std::size_t max_len) {
  std::vector<Entry> out;
  while (den != 0) {
    if (out.size() >= max_len) return std::nullopt;
    Entry a = 0;
    if (num % den == 0) {
      a = num / den;
    } else if (strategy == Strategy::Floor) {
      a = floor_div(num, den);
    } else if (strategy == Strategy::Ceil) {
      a = ceil_div(num, den);
    } else {
      // Nearest even integer to num/den.
      a = 2 * floor_div(num + den, 2 * den);
    }
    out.push_back(a);
    const Entry r = num - a * den;
    num = den;
    den = r;
  }
  return out;
}

Entry entry_bound(const SchubertPair& pair, const SearchOptions& options) {
  return std::max(options.entry_factor * std::max<Entry>(pair.p, 1), options.min_entry_bound);
}

bool within(const ConwayWord& w, Entry bound, const SearchOptions& options) {
  return w.size() <= options.max_word_length && w.max_magnitude() <= bound;
}

class RepresentativeSet {
 public:
  RepresentativeSet(Entry bound, const SearchOptions& options) : bound_(bound), options_(options) {}

  bool add(const ConwayWord& w) {
    if (words_.size() >= options_.max_representatives) return false;
    if (!within(w, bound_, options_)) return false;
    if (!seen_.insert(w).second) return false;
    words_.push_back(w);
    return true;
  }

  std::vector<ConwayWord> take() { return std::move(words_); }
  const std::vector<ConwayWord>& words() const { return words_; }

 private:
  Entry bound_;
  const SearchOptions& options_;
  std::set<ConwayWord> seen_;
  std::vector<ConwayWord> words_;
};

}  // namespace

std::vector<ConwayWord> class_representatives(const SchubertPair& pair, const SearchOptions& options) {
  const Entry bound = entry_bound(pair, options);
  RepresentativeSet reps(bound, options);
  if (pair.p <= 1) {
    reps.add(ConwayWord{});
    for (Entry a = 2; a <= bound; a += 2) {
      reps.add(ConwayWord{a, 0});
      reps.add(ConwayWord{-a, 0});
    }
    return reps.take();
  }

  std::vector<ConwayWord> base;
  const auto orbit = q_orbit(pair);
  for (Entry r : orbit) {
    for (Entry den : {r, r - pair.p}) {
      if (den == 0) continue;
      for (Strategy s : {Strategy::Even, Strategy::Floor, Strategy::Ceil}) {
        auto e = expand(pair.p, den, s, options.max_word_length);
        if (e) base.emplace_back(std::move(*e));
      }
    }
  }
  std::vector<ConwayWord> with_splits;
  for (const auto& w : base) {
    with_splits.push_back(w);
    if (w.empty()) continue;
    for (Entry u : {Entry{1}, Entry{-1}}) {
      auto v = w.entries();
      std::vector<Entry> split(v.begin(), v.end());
      split.back() -= u;
      split.push_back(u);
      with_splits.emplace_back(std::move(split));
    }
  }
  for (const auto& w : with_splits) reps.add(w);
  for (const auto& w : with_splits) reps.add(reverse(w));
  return reps.take();
}

namespace {

struct Parent {
  std::size_t node;
  ConwayWord before;
  Move move;
  Entry cost;
  ConwayWord after;
};

struct Node {
  SchubertPair key;
  std::vector<ConwayWord> reps;
  std::set<ConwayWord> seen;
  Entry bound = 0;
  Entry dist = kInfinity;
  Entry a2 = 0;
  std::size_t next_rep = 0;
  std::optional<Parent> parent;
};

class Searcher {
 public:
  Searcher(const SearchOptions& options, const SchubertPair& target)
      : options_(options), target_(canonical(target)) {
    if (target_.p > 1) target_a2_ = a2_skein(first_word(target)).value;
  }

  std::optional<SearchResult> run(const ConwayWord& start) {
    const SchubertPair start_pair = evaluate_fraction(start);
    const std::size_t s = node_for(start_pair, start);
    add_rep(s, start);
    add_rep(s, normalize(start));
    nodes_[s].dist = 0;
    push(s);

    std::optional<std::size_t> reached;
    while (!open_.empty()) {
      const auto [f, g, key, idx] = open_.top();
      open_.pop();
      (void)f;
      (void)key;
      Node& node = nodes_[idx];
      if (g > node.dist) continue;
      if (node.key == target_) {
        reached = idx;
        break;
      }
      if (node.next_rep >= node.reps.size()) continue;
      ++stats_.expansions;
      expand(idx);
      if (stats_.truncated) break;
    }
    if (!reached) return std::nullopt;
    SearchResult result;
    result.certificate = certificate(start, *reached);
    result.cost = result.certificate.total_cost;
    result.stats = stats_;
    return result;
  }

  SearchStats stats() const { return stats_; }

 private:
  using QueueItem = std::tuple<Entry, Entry, SchubertPair, std::size_t>;

  static ConwayWord first_word(const SchubertPair& pair) {
    SearchOptions o;
    o.max_representatives = 1;
    o.min_entry_bound = std::numeric_limits<Entry>::max() / 8;
    o.max_word_length = 4096;
    auto reps = class_representatives(pair, o);
    return reps.front();
  }

  Entry heuristic(const Node& node) const {
    if (!options_.use_heuristic) return 0;
    const Entry d = node.a2 - target_a2_;
    return d < 0 ? -d : d;
  }

  void push(std::size_t idx) {
    const Node& n = nodes_[idx];
    open_.emplace(n.dist + heuristic(n), n.dist, n.key, idx);
  }

  std::size_t node_for(const SchubertPair& pair, const ConwayWord& witness) {
    const SchubertPair key = canonical(pair);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    Node n;
    n.key = key;
    n.bound = entry_bound(key, options_);
    n.a2 = key.p > 1 ? a2_skein(witness).value : 0;
    nodes_.push_back(std::move(n));
    const std::size_t idx = nodes_.size() - 1;
    index_.emplace(key, idx);
    ++stats_.classes_created;
    if (stats_.classes_created >= options_.max_classes) stats_.truncated = true;
    for (const auto& w : class_representatives(key, options_)) add_rep(idx, w);
    return idx;
  }

  bool add_rep(std::size_t idx, const ConwayWord& w) {
    Node& n = nodes_[idx];
    if (n.reps.size() >= options_.max_representatives) return false;
    if (!within(w, n.bound, options_)) return false;
    if (!n.seen.insert(w).second) return false;
    n.reps.push_back(w);
    return true;
  }

  void expand(std::size_t idx) {
    // nodes_ may reallocate while expanding; index, don't hold references.
    while (nodes_[idx].next_rep < nodes_[idx].reps.size()) {
      const ConwayWord w = nodes_[idx].reps[nodes_[idx].next_rep++];
      for (auto& edge : technique_moves(w)) {
        const Entry g = nodes_[idx].dist + edge.cost;
        if (g > options_.budget) continue;
        const SchubertPair pair = evaluate_fraction(edge.after);
        if (!pair.is_knot()) continue;
        if (stats_.truncated && !index_.count(canonical(pair))) continue;
        const std::size_t y = node_for(pair, edge.after);
        const bool new_rep = add_rep(y, edge.after) | add_rep(y, normalize(edge.after));
        Node& ny = nodes_[y];
        if (g + heuristic(ny) > options_.budget) continue;
        if (g < ny.dist) {
          ny.dist = g;
          ny.parent = Parent{idx, w, edge.move, edge.cost, edge.after};
          ny.next_rep = 0;
          push(y);
        } else if (new_rep && ny.dist < kInfinity) {
          push(y);
        }
      }
    }
  }

  MoveSequence certificate(const ConwayWord& start, std::size_t reached) const {
    std::vector<const Parent*> chain;
    for (std::size_t i = reached; nodes_[i].parent; i = nodes_[i].parent->node) {
      chain.push_back(&*nodes_[i].parent);
      if (chain.size() > nodes_.size()) throw std::logic_error("search: parent cycle");
    }
    std::reverse(chain.begin(), chain.end());
    MoveSequence seq;
    ConwayWord current = start;
    for (const Parent* p : chain) {
      if (current != p->before) seq.steps.push_back(rewrite_step(current, p->before));
      seq.steps.push_back({p->before, p->move, p->cost, p->after});
      seq.total_cost += p->cost;
      current = p->after;
    }
    return seq;
  }

  static MoveStep rewrite_step(const ConwayWord& from, const ConwayWord& to) {
    std::string rule = "representative";
    if (normalize(from) == to) {
      rule = "normalize";
    } else if (reverse(from) == to) {
      rule = "half-turn";
    }
    return {from, Move{Move::Kind::Rewrite, End::Front, 0, 0, rule}, 0, to};
  }

  const SearchOptions& options_;
  SchubertPair target_;
  Entry target_a2_ = 0;
  std::vector<Node> nodes_;
  std::map<SchubertPair, std::size_t> index_;
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> open_;
  SearchStats stats_;
};

std::optional<SearchResult> run_search(const ConwayWord& from, const SchubertPair& target,
                                       const SearchOptions& options, SearchStats* stats) {
  if (!evaluate_fraction(from).is_knot() || !target.is_knot()) {
    throw std::invalid_argument("search: both ends must be knots");
  }
  Searcher searcher(options, target);
  auto result = searcher.run(from);
  if (stats) *stats = searcher.stats();
  return result;
}

}  // namespace

std::optional<SearchResult> search_upper_bound(const ConwayWord& word, const SearchOptions& options,
                                               SearchStats* stats) {
  return run_search(word, SchubertPair{1, 0}, options, stats);
}

std::optional<SearchResult> search_distance(const ConwayWord& from, const ConwayWord& to,
                                            const SearchOptions& options, SearchStats* stats) {
  return run_search(from, evaluate_fraction(to), options, stats);
}

ReplayReport replay(const MoveSequence& sequence, const ConwayWord& start, const SchubertPair& target) {
  ReplayReport report;
  ConwayWord current = start;
  for (std::size_t i = 0; i < sequence.steps.size(); ++i) {
    const MoveStep& step = sequence.steps[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    if (step.before != current) {
      report.failure = where + "starts at " + to_string(step.before) + ", expected " + to_string(current);
      return report;
    }
    if (step.move.kind == Move::Kind::Technique) {
      auto after = apply_technique(step.before, step.move.end, step.move.delta);
      if (!after || *after != step.after) {
        report.failure = where + "move does not produce " + to_string(step.after);
        return report;
      }
      const Entry anchor = step.move.end == End::Front ? step.before.front() : step.before.back();
      if (anchor != step.move.anchor || step.cost != (anchor < 0 ? -anchor : anchor) / 2) {
        report.failure = where + "cost is not half the anchor";
        return report;
      }
    } else {
      if (step.cost != 0 || equivalent(step.before, step.after) != Verdict::Same) {
        report.failure = where + "rewrite leaves the class or has nonzero cost";
        return report;
      }
    }
    report.total_cost += step.cost;
    current = step.after;
  }
  if (report.total_cost != sequence.total_cost) {
    report.failure = "total cost " + std::to_string(sequence.total_cost) + " does not match steps (" +
                     std::to_string(report.total_cost) + ")";
    return report;
  }
  if (canonical(evaluate_fraction(current)) != canonical(target)) {
    report.failure = "ends at " + to_string(current) + ", outside the target class";
    return report;
  }
  report.ok = true;
  return report;
}

}  // namespace dk
