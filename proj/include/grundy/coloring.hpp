#pragma once

#include <string>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

/// A sequence of distinct vertex ids.
using Ordering = std::vector<int>;

/// An ordered partition into color classes. Canonical form keeps each class
/// sorted ascending; classes compare classwise.
struct ColorClasses {
  std::vector<std::vector<int>> classes;

  int count() const { return static_cast<int>(classes.size()); }
  bool operator==(const ColorClasses&) const = default;
};

// First-fit coloring: every vertex of `order` (a permutation of all of V)
// receives the least color absent among its already-colored neighbors.
ColorClasses first_fit(const Graph& g, const Ordering& order);

// True iff every class is independent and every vertex has a neighbor in
// each earlier class. Classes may cover only part of V. Structural problems
// (empty class, overlap, out-of-range vertex) throw instead of returning
// false; `why` receives the first violated condition when non-null.
bool validate_grundy_coloring(const Graph& g, const ColorClasses& cc, std::string* why = nullptr);

// Concatenates the classes in order, ascending inside each class. Running
// first-fit on the result reproduces the classes exactly; the (g, cc)
// overload asserts that in debug builds.
Ordering sorted_permutation(const ColorClasses& cc);
Ordering sorted_permutation(const Graph& g, const ColorClasses& cc);

// Moves qualifying singleton classes behind every larger class, keeping
// their relative order. All singletons qualify; the `keep` overload leaves
// singletons that intersect `keep` in place. Preserves validity and the
// number of classes.
ColorClasses normalize_singletons_last(const Graph& g, const ColorClasses& cc);
ColorClasses normalize_singletons_last(const Graph& g, const ColorClasses& cc,
                                       const std::vector<int>& keep);

// sorted_permutation(cc) followed by `suffix`; the two must be disjoint.
Ordering classes_to_ordering(const ColorClasses& cc, const Ordering& suffix);

}  // namespace grundy
