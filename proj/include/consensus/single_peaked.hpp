#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "consensus/preference.hpp"
#include "consensus/profile.hpp"

namespace consensus {

/// True when `ballot` is single-peaked with respect to the left-to-right
/// `axis`: every top-t prefix of the ballot occupies a contiguous interval
/// of axis positions.
inline bool ballot_single_peaked_on_axis(const Preference& ballot,
                                         const std::vector<int>& axis) {
  const int k = ballot.size();
  if (static_cast<int>(axis.size()) != k)
    throw DimensionError("ballot_single_peaked_on_axis: axis length != K");
  std::vector<int> pos(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(axis[static_cast<std::size_t>(i)])] = i;
  int lo = pos[static_cast<std::size_t>(ballot.at(0))];
  int hi = lo;
  for (int t = 1; t < k; ++t) {
    const int p = pos[static_cast<std::size_t>(ballot.at(t))];
    if (p == lo - 1)
      lo = p;
    else if (p == hi + 1)
      hi = p;
    else
      return false;
  }
  return true;
}

/// Finds an axis making every ballot single-peaked, or nullopt if none
/// exists.
///
/// Axis slots are assigned from the outside in. Each ballot, read worst
/// first, must peel alternatives from the ends of its own remaining slot
/// window [a, b]. A ballot whose next-peeled alternative is already placed
/// consumes it (or fails, if it sits strictly inside the window). When every
/// ballot is blocked on an unplaced alternative, each blocked ballot forces
/// that alternative onto a specific frontier slot: onto the right frontier
/// when the ballot's left window end is already placed but unpeeled, onto
/// the left frontier in the mirrored case, and onto either frontier when its
/// window equals the frontier span. Inconsistent demands mean no axis
/// exists; symmetric choices are resolved arbitrarily, which is harmless
/// because at such points the undecided subproblem is mirror-symmetric.
inline std::optional<std::vector<int>> single_peaked_axis(const Profile& profile) {
  const int k = profile.alternative_count();

  std::vector<std::vector<int>> worst_first;  // distinct ballots, worst first
  worst_first.reserve(profile.distinct_count());
  for (const auto& [pref, f] : profile.entries())
    worst_first.emplace_back(pref.ranking().rbegin(), pref.ranking().rend());
  const std::size_t voters = worst_first.size();

  std::vector<int> slot_of(static_cast<std::size_t>(k), -1);
  std::vector<int> occupant(static_cast<std::size_t>(k), -1);
  int next_left = 0, next_right = k - 1;
  int placed = 0;

  auto place = [&](int alt, bool left) {
    const int slot = left ? next_left++ : next_right--;
    occupant[static_cast<std::size_t>(slot)] = alt;
    slot_of[static_cast<std::size_t>(alt)] = slot;
    ++placed;
  };

  std::vector<std::size_t> cursor(voters, 0);
  std::vector<int> win_lo(voters, 0), win_hi(voters, k - 1);

  // Consume already-placed alternatives from every ballot; false on a peel
  // that is strictly inside the ballot's window.
  auto advance_all = [&]() -> bool {
    for (std::size_t v = 0; v < voters; ++v) {
      while (cursor[v] < worst_first[v].size()) {
        const int alt = worst_first[v][cursor[v]];
        const int slot = slot_of[static_cast<std::size_t>(alt)];
        if (slot < 0) break;
        if (slot == win_lo[v])
          ++win_lo[v];
        else if (slot == win_hi[v])
          --win_hi[v];
        else
          return false;
        ++cursor[v];
      }
    }
    return true;
  };

  while (true) {
    if (!advance_all()) return std::nullopt;
    if (placed == k) break;
    if (voters == 0) {
      for (int alt = 0; alt < k; ++alt)
        if (slot_of[static_cast<std::size_t>(alt)] < 0) place(alt, true);
      break;
    }

    int force_left = -1, force_right = -1;
    int either_a = -1, either_b = -1;
    for (std::size_t v = 0; v < voters; ++v) {
      if (cursor[v] >= worst_first[v].size()) continue;
      const int alt = worst_first[v][cursor[v]];
      const bool lo_placed = win_lo[v] < next_left;   // left end decided, unpeeled
      const bool hi_placed = win_hi[v] > next_right;  // right end decided, unpeeled
      if (lo_placed && hi_placed) return std::nullopt;
      if (lo_placed) {  // must next peel the occupant of its right end
        if (force_right != -1 && force_right != alt) return std::nullopt;
        force_right = alt;
      } else if (hi_placed) {
        if (force_left != -1 && force_left != alt) return std::nullopt;
        force_left = alt;
      } else if (alt != either_a && alt != either_b) {
        if (either_a == -1)
          either_a = alt;
        else if (either_b == -1)
          either_b = alt;
        else
          return std::nullopt;  // three alternatives demand two frontier slots
      }
    }
    if (next_left == next_right) {
      // One slot left; the two frontiers coincide, so every demand must name
      // the same alternative.
      int demand = -1;
      for (int alt : {force_left, force_right, either_a, either_b}) {
        if (alt == -1) continue;
        if (demand == -1)
          demand = alt;
        else if (demand != alt)
          return std::nullopt;
      }
      if (demand == -1) return std::nullopt;  // unreachable guard
      place(demand, true);
      continue;
    }
    if (force_left != -1 && force_left == force_right) return std::nullopt;

    // Flexible demands not already satisfied by a forced placement take the
    // remaining frontier slots.
    std::vector<int> flexible;
    for (int alt : {either_a, either_b})
      if (alt != -1 && alt != force_left && alt != force_right) flexible.push_back(alt);
    const int free_slots = (force_left == -1 ? 1 : 0) + (force_right == -1 ? 1 : 0);
    if (static_cast<int>(flexible.size()) > free_slots) return std::nullopt;
    for (int alt : flexible) {
      if (force_left == -1)
        force_left = alt;
      else
        force_right = alt;
    }

    if (force_left == -1 && force_right == -1) return std::nullopt;  // unreachable guard
    if (force_left != -1) place(force_left, true);
    if (force_right != -1) place(force_right, false);
  }

  if (!advance_all()) return std::nullopt;
  return occupant;
}

/// True when some axis makes every ballot in the profile single-peaked.
inline bool is_single_peaked(const Profile& profile) {
  return single_peaked_axis(profile).has_value();
}

}  // namespace consensus
