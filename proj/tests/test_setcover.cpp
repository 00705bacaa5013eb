#include <vector>

#include "doctest.h"
#include "lw/rng.hpp"
#include "lw/setcover.hpp"

using namespace lw::setcover;

TEST_CASE("keep_maximal drops dominated and duplicate sets") {
  std::vector<Mask> sets = {0b011, 0b001, 0b110, 0b011, 0b100};
  auto kept = keep_maximal(sets);
  // 0b001 is inside 0b011, 0b100 inside 0b110, one 0b011 is a duplicate
  CHECK(kept.size() == 2);
}

TEST_CASE("tiny instances solved by hand") {
  // elements {0,1,2}, sets {0,1}, {1,2}, {2}: optimum 2
  std::vector<Mask> sets = {0b011, 0b110, 0b100};
  CHECK(exact_min_cover(3, sets) == 2);
  CHECK(exhaustive_min_cover(3, sets) == 2);
  CHECK(greedy_cover(3, sets) >= 2);

  // a single set covering everything
  CHECK(exact_min_cover(3, {0b111}) == 1);

  // disjoint singletons
  CHECK(exact_min_cover(3, {0b001, 0b010, 0b100}) == 3);
}

TEST_CASE("greedy can be fooled but never undercounts") {
  // classic greedy-trap family still yields a valid cover size
  std::vector<Mask> sets = {0b001111, 0b110011, 0b111100, 0b000011, 0b001100, 0b110000};
  int exact = exact_min_cover(6, sets);
  int greedy = greedy_cover(6, sets);
  CHECK(exact <= greedy);
  CHECK(exact == 2);
}

TEST_CASE("branch-and-bound agrees with the exhaustive reference on random instances") {
  lw::Rng rng(77);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + static_cast<int>(rng.next_below(10));  // up to 12 elements
    const int m = 2 + static_cast<int>(rng.next_below(8));
    const Mask full = static_cast<Mask>((1u << n) - 1);
    std::vector<Mask> sets;
    Mask unions = 0;
    for (int s = 0; s < m; ++s) {
      Mask mask = static_cast<Mask>(rng.next_u64()) & full;
      sets.push_back(mask);
      unions |= mask;
    }
    // ensure coverability
    Mask rest = full & ~unions;
    if (rest != 0) sets.push_back(rest);
    CHECK(exact_min_cover(n, sets) == exhaustive_min_cover(n, sets));
    CHECK(exact_min_cover(n, sets) <= greedy_cover(n, sets));
  }
}
