#include "adfbn/dynamics.hpp"

#include <algorithm>

namespace adfbn {

std::vector<TwoValuedState> successors(const Framework& fr, UpdateDiscipline disc, const TwoValuedState& x) {
  require_same_size(x.size(), fr.size(), "successors");
  const TwoValuedState y = fr.update(x);
  if (disc == UpdateDiscipline::synchronous || y == x) return {y};
  std::vector<TwoValuedState> out;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == y[a]) continue;
    TwoValuedState s = x;
    s.flip(a);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.to_string() < r.to_string(); });
  return out;
}

namespace {

void require_state_scan(const Framework& fr, const Limits& limits) {
  if (fr.size() > limits.max_state_bits || fr.size() > 40)
    throw CapExceeded("2^" + std::to_string(fr.size()) + " states exceed the state cap");
}

/// Iterative Tarjan over an implicit successor function; returns the
/// terminal components.
template <class Succ>
std::vector<Attractor> terminal_sccs(std::uint64_t count, Succ&& succ, const Budget& budget) {
  constexpr std::uint64_t unvisited = UINT64_MAX;
  std::vector<std::uint64_t> index(count, unvisited), low(count, 0);
  std::vector<std::uint8_t> on_stack(count, 0);
  std::vector<std::uint64_t> stack;
  std::vector<std::uint64_t> comp_of(count, unvisited);
  std::vector<Attractor> comps;

  struct Frame {
    std::uint64_t node;
    std::vector<std::uint64_t> succ;
    std::size_t next;
  };
  std::vector<Frame> call;
  std::uint64_t counter = 0;

  for (std::uint64_t root = 0; root < count; ++root) {
    if (index[root] != unvisited) continue;
    if (root % 4096 == 0) budget.check();
    auto push = [&](std::uint64_t v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = 1;
      call.push_back({v, succ(v), 0});
    };
    push(root);
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < f.succ.size()) {
        const std::uint64_t w = f.succ[f.next++];
        if (index[w] == unvisited) {
          push(w);
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const std::uint64_t v = f.node;
      if (low[v] == index[v]) {
        Attractor comp;
        std::uint64_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp_of[w] = comps.size();
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
    }
  }

  std::vector<Attractor> terminal;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    bool closed = true;
    for (auto v : comps[c]) {
      for (auto w : succ(v))
        if (comp_of[w] != c) { closed = false; break; }
      if (!closed) break;
    }
    if (closed) terminal.push_back(std::move(comps[c]));
  }
  std::sort(terminal.begin(), terminal.end());
  return terminal;
}

}  // namespace

StateTransitionGraph build_stg(const Framework& fr, UpdateDiscipline disc, Exec exec, const Limits& limits) {
  require_state_scan(fr, limits);
  const std::uint64_t count = std::uint64_t{1} << fr.size();

  // Pass 1: sync image per state (the data-parallel part).
  auto images = kernels::tabulate<std::uint64_t>(count, [&](std::uint64_t x) { return fr.update_index(x); }, exec);

  StateTransitionGraph g;
  g.bits = fr.size();
  g.discipline = disc;
  g.offsets.assign(count + 1, 0);
  for (std::uint64_t x = 0; x < count; ++x) {
    const std::uint64_t diff = x ^ images[x];
    const std::uint64_t deg =
        (disc == UpdateDiscipline::synchronous || diff == 0) ? 1 : static_cast<std::uint64_t>(__builtin_popcountll(diff));
    g.offsets[x + 1] = g.offsets[x] + deg;
  }
  g.targets.resize(g.offsets[count]);
  auto fill = [&](std::uint64_t x) {
    std::uint64_t pos = g.offsets[x];
    for_each_successor(fr, disc, x, [&](std::uint64_t y) { g.targets[pos++] = y; });
    return 0;
  };
  if (disc == UpdateDiscipline::synchronous) {
    std::copy(images.begin(), images.end(), g.targets.begin());
  } else {
    kernels::tabulate<int>(count, fill, exec);
  }
  return g;
}

std::vector<Attractor> attractors(const StateTransitionGraph& stg) {
  return terminal_sccs(
      stg.state_count(),
      [&](std::uint64_t v) {
        return std::vector<std::uint64_t>(stg.targets.begin() + static_cast<std::ptrdiff_t>(stg.offsets[v]),
                                          stg.targets.begin() + static_cast<std::ptrdiff_t>(stg.offsets[v + 1]));
      },
      Budget{});
}

std::vector<Attractor> attractors(const Framework& fr, UpdateDiscipline disc, Exec exec, const Limits& limits,
                                  const Budget& budget) {
  require_state_scan(fr, limits);
  constexpr std::size_t explicit_limit = 20;
  if (fr.size() <= explicit_limit) {
    const auto stg = build_stg(fr, disc, exec, limits);
    return terminal_sccs(
        stg.state_count(),
        [&](std::uint64_t v) {
          return std::vector<std::uint64_t>(stg.targets.begin() + static_cast<std::ptrdiff_t>(stg.offsets[v]),
                                            stg.targets.begin() + static_cast<std::ptrdiff_t>(stg.offsets[v + 1]));
        },
        budget);
  }
  return terminal_sccs(
      std::uint64_t{1} << fr.size(),
      [&](std::uint64_t v) {
        std::vector<std::uint64_t> out;
        for_each_successor(fr, disc, v, [&](std::uint64_t y) { out.push_back(y); });
        return out;
      },
      budget);
}

bool is_trap_space(const Framework& fr, UpdateDiscipline disc, const Interpretation& v, const Limits& limits) {
  require_same_size(v.size(), fr.size(), "is_trap_space");
  for (const auto& x : completions(v, limits))
    for (const auto& y : successors(fr, disc, x))
      if (!is_completion(v, y)) return false;
  return true;
}

namespace {

/// Synchronous closure of the subcube named by ordinal k, on state indices.
bool closed_subcube(const Framework& fr, std::uint64_t k) {
  const std::size_t n = fr.size();
  std::uint64_t fixed = 0, values = 0, free = 0;
  for (std::size_t i = n; i-- > 0;) {
    const auto digit = k % 3;
    k /= 3;
    const std::uint64_t bit = index_bit(i, n);
    if (digit == 2) free |= bit;
    else {
      fixed |= bit;
      if (digit == 1) values |= bit;
    }
  }
  // enumerate submasks of `free`
  std::uint64_t sub = 0;
  do {
    const std::uint64_t x = values | sub;
    if ((fr.update_index(x) & fixed) != values) return false;
    sub = (sub - free) & free;
  } while (sub != 0);
  return true;
}

std::vector<std::uint64_t> trap_ordinals(const Framework& fr, Exec exec, const Limits& limits, const Budget& budget) {
  require_interpretation_scan(fr.size(), limits);
  if (fr.size() > limits.max_state_bits) throw CapExceeded("state cap exceeded");
  return kernels::select(pow3(fr.size()), [&](std::uint64_t k) { return closed_subcube(fr, k); }, exec, budget);
}

}  // namespace

std::vector<Interpretation> trap_spaces_bruteforce(const Framework& fr, Exec exec, const Limits& limits,
                                                   const Budget& budget) {
  std::vector<Interpretation> out;
  for (auto k : trap_ordinals(fr, exec, limits, budget)) out.push_back(Interpretation::from_ordinal(k, fr.size()));
  sort_interpretations(out);
  return out;
}

std::vector<Interpretation> minimal_trap_spaces_bruteforce(const Framework& fr, Exec exec, const Limits& limits,
                                                           const Budget& budget) {
  std::vector<std::uint8_t> member(pow3(fr.size()), 0);
  for (auto k : trap_ordinals(fr, exec, limits, budget)) member[k] = 1;
  std::vector<Interpretation> out;
  for (auto k : info_maximal_ordinals(fr.size(), member)) out.push_back(Interpretation::from_ordinal(k, fr.size()));
  sort_interpretations(out);
  return out;
}

}  // namespace adfbn
