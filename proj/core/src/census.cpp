#include "equilat/census.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "equilat/degree_bound.hpp"
#include "equilat/error.hpp"
#include "equilat/translation.hpp"

namespace equilat {
namespace {

// Partial gluing in breadth-first normal form: darts are paired in increasing
// order, each with a later free dart of an already reached face or with side 0
// of the next new face. Every rooted connected closed surface has exactly one
// such encoding, so each class shows up once per root; the canonical root is
// kept.
struct State {
  std::vector<DartId> gluing;
  int reached = 1;
  DartId cursor = 0;
};

class Search {
 public:
  Search(int t, const SurfaceFilter& filter) : t_(t), filter_(filter) {}

  // Expands `st` until `depth` pairings have been made, collecting the frontier.
  void split(State st, int depth, std::vector<State>& out) const {
    advance(st);
    if (depth == 0 || st.cursor >= 3 * t_) {
      out.push_back(std::move(st));
      return;
    }
    for_each_choice(st, [&](State& next) { split(next, depth - 1, out); });
  }

  void run(State st, std::vector<std::string>& found) {
    advance(st);
    if (st.cursor >= 3 * t_) {
      leaf(st, found);
      return;
    }
    for_each_choice(st, [&](State& next) { run(next, found); });
  }

 private:
  void advance(State& st) const {
    while (st.cursor < 3 * t_ && st.gluing[st.cursor] != kNoDart) ++st.cursor;
  }

  template <class F>
  void for_each_choice(State& st, F&& f) const {
    const DartId d = st.cursor;
    // Every reached face is closed up but faces remain: disconnected, prune.
    if (d >= 3 * st.reached) return;
    for (DartId e = d + 1; e < 3 * st.reached; ++e) {
      if (st.gluing[e] != kNoDart) continue;
      st.gluing[d] = e;
      st.gluing[e] = d;
      f(st);
      st.gluing[d] = kNoDart;
      st.gluing[e] = kNoDart;
    }
    if (st.reached < t_) {
      const DartId e = 3 * st.reached;
      st.gluing[d] = e;
      st.gluing[e] = d;
      ++st.reached;
      f(st);
      --st.reached;
      st.gluing[d] = kNoDart;
      st.gluing[e] = kNoDart;
    }
  }

  void leaf(const State& st, std::vector<std::string>& found) const {
    if (st.reached != t_) return;
    const GluedSurface s(t_, st.gluing);
    const GluedSurface c = canonical_surface(s);
    if (!(c == s)) return;
    if (filter_ && !filter_(s)) return;
    found.push_back(to_tsf(s));
  }

  int t_;
  const SurfaceFilter& filter_;
};

}  // namespace

std::vector<std::string> enumerate_surfaces(int t, const SurfaceFilter& filter, const CensusOptions& options) {
  if (t < 2 || t % 2 != 0) {
    throw PreconditionError("closed surfaces need an even face count >= 2, got T=" + std::to_string(t));
  }
  if (t > options.max_t) {
    throw PreconditionError("T=" + std::to_string(t) + " exceeds the census cap " + std::to_string(options.max_t));
  }
  Search search(t, filter);
  State root;
  root.gluing.assign(static_cast<std::size_t>(3 * t), kNoDart);
  std::vector<State> tasks;
  search.split(root, 3, tasks);

  const int jobs = std::max(1, std::min(options.jobs, static_cast<int>(tasks.size())));
  std::vector<std::vector<std::string>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Search local(t, filter);
    for (std::size_t i = next++; i < tasks.size(); i = next++) local.run(tasks[i], results[i]);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<std::string> out;
  for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  std::sort(out.begin(), out.end());
  return out;
}

bool has_loops_or_multi_edges(const GluedSurface& s) {
  const VertexOrbits orbits(s);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (DartId d = 0; d < s.dart_count(); ++d) {
    const DartId p = s.partner(d);
    if (p != kNoDart && p < d) continue;
    VertexId a = orbits.tail(d);
    VertexId b = orbits.head(d);
    if (a == b) return true;
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) return true;
  }
  return false;
}

std::vector<CensusRow> count_table(int t_max, const SurfaceFilter& filter, const CensusOptions& options) {
  std::map<std::pair<int, int>, CensusRow> rows;
  for (int t = 2; t <= t_max; t += 2) {
    for (const auto& form : enumerate_surfaces(t, filter, options)) {
      const GluedSurface s = load_surface(form);
      const int genus = euler_and_genus(s).genus;
      CensusRow& row = rows[{t, genus}];
      row.t = t;
      row.genus = genus;
      ++row.count;
      if (!detect_structures(s).empty()) ++row.tran_count;
      if (check_tri_lb(s).positive()) ++row.lb_count;
      if (has_loops_or_multi_edges(s)) ++row.degenerate_count;
      ++row.max_degree_histogram[VertexOrbits(s).max_degree()];
    }
  }
  std::vector<CensusRow> out;
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "T,genus,count,tran_count,lb_count\n";
  for (const auto& r : rows) os << r.t << ',' << r.genus << ',' << r.count << ',' << r.tran_count << ',' << r.lb_count << '\n';
  return os.str();
}

}  // namespace equilat
