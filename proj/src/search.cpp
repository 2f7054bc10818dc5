#include "permdeg/search.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace permdeg {

namespace {

struct CoverState {
  const std::vector<CoverItem>* items;
  std::vector<double> ratio_suffix_min;  // min cost/codim over items[j..]
  std::uint64_t best;
  std::vector<std::size_t> best_pick;
  std::vector<std::size_t> pick;
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes;
  int d;
};

void cover_rec(CoverState& st, const Subgroup& cur, std::uint64_t cost, std::size_t from) {
  if (++st.nodes > st.max_nodes) throw ResourceError("cover search node budget exceeded", st.nodes, st.best);
  if (cur.is_trivial()) {
    if (cost < st.best) {
      st.best = cost;
      st.best_pick = st.pick;
    }
    return;
  }
  const auto& items = *st.items;
  for (std::size_t j = from; j < items.size(); ++j) {
    // Items are sorted by cost, so the bound only grows from here.
    double lb = static_cast<double>(cost) + cur.size() * st.ratio_suffix_min[j];
    if (lb >= static_cast<double>(st.best) - 0.5) return;
    if (cost + items[j].cost >= st.best) return;
    Subgroup next = intersect_normal(cur, items[j].trace);
    if (next.size() == cur.size()) continue;
    st.pick.push_back(j);
    cover_rec(st, next, cost + items[j].cost, j + 1);
    st.pick.pop_back();
  }
}

}  // namespace

std::optional<std::pair<std::uint64_t, std::vector<std::size_t>>> min_cover(const Subgroup& socle,
                                                                           const std::vector<CoverItem>& items,
                                                                           std::uint64_t upper,
                                                                           std::uint64_t max_nodes,
                                                                           std::uint64_t* nodes) {
  for (std::size_t j = 1; j < items.size(); ++j)
    if (items[j].cost < items[j - 1].cost) throw std::logic_error("cover items must be sorted by cost");
  CoverState st;
  st.items = &items;
  st.best = upper;
  st.max_nodes = max_nodes;
  st.d = socle.size();
  st.ratio_suffix_min.assign(items.size() + 1, std::numeric_limits<double>::infinity());
  for (std::size_t j = items.size(); j-- > 0;) {
    int codim = st.d - items[j].trace.size();
    double r = codim > 0 ? static_cast<double>(items[j].cost) / codim : std::numeric_limits<double>::infinity();
    st.ratio_suffix_min[j] = std::min(r, st.ratio_suffix_min[j + 1]);
  }
  cover_rec(st, socle, 0, 0);
  if (nodes) *nodes += st.nodes;
  if (st.best_pick.empty() && !socle.is_trivial()) return std::nullopt;
  return std::make_pair(st.best, st.best_pick);
}

Selection min_faithful_selection(const PcGroup& g, const AcceptFn& accept, const SearchBudget& budget,
                                 SearchStats* stats) {
  SearchStats local;
  SearchStats& s = stats ? *stats : local;
  const Subgroup socle = socle_of_center(g);
  const int p = g.p();

  struct Entry {
    std::uint64_t cost;
    Subgroup trace;
    Subgroup k;
    Subgroup companion;
  };
  // Cheapest accepted subgroup for each trace; first found wins ties.
  std::map<std::string, Entry> pool;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  Selection sel;
  auto fail = [&](const std::string& what, std::uint64_t reached) -> ResourceError {
    return ResourceError(what, reached, best == std::numeric_limits<std::uint64_t>::max() ? g.order() : best);
  };

  SubgroupClassWalker walker(g, budget.max_subgroups);
  ClassLevel level = walker.top();
  std::string zero_key = trivial_subgroup(g).key();
  while (!level.reps.empty()) {
    std::uint64_t idx = level.reps.front().index();
    if (idx >= best) break;
    for (const auto& rep : level.reps) {
      Subgroup trace = intersect_normal(rep, socle);
      if (trace.size() == socle.size()) continue;
      std::string key = trace.key();
      if (pool.count(key)) continue;
      if (auto comp = accept(rep)) {
        pool.emplace(key, Entry{idx, trace, rep, *comp});
        ++s.candidates;
      }
    }
    std::vector<const Entry*> order;
    for (const auto& [key, e] : pool) order.push_back(&e);
    std::stable_sort(order.begin(), order.end(), [](const Entry* a, const Entry* b) { return a->cost < b->cost; });
    std::vector<CoverItem> items;
    for (const auto* e : order) items.push_back({e->cost, e->trace});
    std::optional<std::pair<std::uint64_t, std::vector<std::size_t>>> cover;
    try {
      cover = min_cover(socle, items, best, budget.max_nodes > s.nodes ? budget.max_nodes - s.nodes : 0, &s.nodes);
    } catch (const ResourceError& e) {
      throw fail(e.what(), e.reached());
    }
    if (cover && cover->first < best) {
      best = cover->first;
      sel.cost = best;
      sel.parts.clear();
      for (auto j : cover->second) sel.parts.push_back({order[j]->k, order[j]->companion});
    }
    if (idx * static_cast<std::uint64_t>(p) >= best) break;
    auto zero = pool.find(zero_key);
    auto expand = [&](const Subgroup& h) {
      if (zero == pool.end()) return true;
      return !intersect_normal(h, socle).is_trivial();
    };
    try {
      level = walker.next(level, expand);
    } catch (const ResourceError& e) {
      throw fail(e.what(), e.reached());
    }
    s.subgroups = walker.seen();
  }
  s.subgroups = walker.seen();
  if (best == std::numeric_limits<std::uint64_t>::max()) throw fail("no faithful selection found", s.subgroups);
  return sel;
}

}  // namespace permdeg
