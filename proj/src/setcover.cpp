#include "lw/setcover.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "lw/errors.hpp"

namespace lw {
namespace setcover {

namespace {

void validate(int n_elems, const std::vector<Mask>& sets) {
  if (n_elems < 1 || n_elems > 32) throw InputError("set cover supports 1..32 elements");
  Mask all = n_elems == 32 ? ~Mask{0} : ((Mask{1} << n_elems) - 1);
  Mask reach = 0;
  for (Mask s : sets) {
    if (s & ~all) throw InputError("set mask mentions an element out of range");
    reach |= s;
  }
  if (reach != all) throw InputError("set family does not cover every element");
}

}  // namespace

std::vector<Mask> keep_maximal(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    return std::popcount(a) > std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b);
  });
  std::vector<Mask> out;
  for (Mask s : sets) {
    bool dominated = false;
    for (Mask t : out) {
      if ((s & t) == s) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

int greedy_cover(int n_elems, const std::vector<Mask>& sets) {
  validate(n_elems, sets);
  Mask all = n_elems == 32 ? ~Mask{0} : ((Mask{1} << n_elems) - 1);
  Mask uncovered = all;
  int used = 0;
  while (uncovered) {
    int best_gain = 0;
    std::size_t best = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      int gain = std::popcount(sets[i] & uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    uncovered &= ~sets[best];
    ++used;
  }
  return used;
}

namespace {

struct BranchState {
  const std::vector<Mask>* sets;
  int best;

  // Lower bound: greedily pick uncovered elements no two of which share a
  // set; each needs its own set in any cover.
  int conflict_bound(Mask uncovered) const {
    int bound = 0;
    Mask rest = uncovered;
    while (rest) {
      int e = std::countr_zero(rest);
      ++bound;
      Mask blocked = 0;
      for (Mask s : *sets) {
        if (s & (Mask{1} << e)) blocked |= s;
      }
      rest &= ~blocked;
      rest &= ~(Mask{1} << e);
    }
    return bound;
  }

  void search(Mask uncovered, int used) {
    if (!uncovered) {
      best = std::min(best, used);
      return;
    }
    if (used + 1 >= best) return;  // even one more set cannot improve
    if (used + conflict_bound(uncovered) >= best) return;
    int e = std::countr_zero(uncovered);
    // Branch over sets containing element e, biggest residual gain first.
    std::vector<std::size_t> choices;
    for (std::size_t i = 0; i < sets->size(); ++i) {
      if ((*sets)[i] & (Mask{1} << e)) choices.push_back(i);
    }
    std::sort(choices.begin(), choices.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount((*sets)[a] & uncovered) > std::popcount((*sets)[b] & uncovered);
    });
    for (std::size_t i : choices) {
      search(uncovered & ~(*sets)[i], used + 1);
    }
  }
};

}  // namespace

int exact_min_cover(int n_elems, const std::vector<Mask>& sets) {
  validate(n_elems, sets);
  std::vector<Mask> family = keep_maximal(sets);
  Mask all = n_elems == 32 ? ~Mask{0} : ((Mask{1} << n_elems) - 1);
  BranchState state{&family, greedy_cover(n_elems, family)};
  state.search(all, 0);
  return state.best;
}

int exhaustive_min_cover(int n_elems, const std::vector<Mask>& sets) {
  validate(n_elems, sets);
  if (n_elems > 20) throw CapacityError("exhaustive cover limited to 20 elements");
  Mask all = (Mask{1} << n_elems) - 1;
  const int INF = std::numeric_limits<int>::max() / 2;
  std::vector<int> dp(static_cast<std::size_t>(all) + 1, INF);
  dp[0] = 0;
  for (Mask m = 1; m <= all; ++m) {
    int e = std::countr_zero(m);
    for (Mask s : sets) {
      if (s & (Mask{1} << e)) {
        int sub = dp[m & ~s];
        if (sub + 1 < dp[m]) dp[m] = sub + 1;
      }
    }
  }
  return dp[all];
}

}  // namespace setcover
}  // namespace lw
