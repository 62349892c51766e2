#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "weylcomb/dynkin.hpp"
#include "weylcomb/weyl.hpp"

namespace weylcomb {

/// Brute-force enumeration of a finite (sub)group of a Weyl group: elements in
/// BFS order by right multiplication, lengths as BFS depth, one reduced word
/// per element (the BFS path), and the full Bruhat order computed from the
/// subword property. Independent of the matrix engine's length/descent
/// algorithms, which it exists to cross-check.
struct EnumeratedGroup {
  WeylGroup group;
  NodeSet generators;
  std::vector<WeylElement> elements;       // BFS order
  std::vector<int> lengths;                // BFS depth
  std::vector<std::vector<int>> words;     // BFS reduced word
  std::vector<std::vector<char>> leq;      // leq[u][w]: u <= w in Bruhat order

  int index_of(const WeylElement& w) const;  // -1 if not enumerated
  int size() const { return static_cast<int>(elements.size()); }

  std::map<std::vector<Int>, int> index;
};

/// Enumerate the subgroup generated by K inside W. Throws when the subgroup
/// exceeds `max_size` elements (guard against accidental infinite groups).
EnumeratedGroup enumerate_subgroup(const WeylGroup& W, NodeSet K,
                                   std::size_t max_size = 10000);
/// Whole Weyl group of a finite diagram.
EnumeratedGroup enumerate_group(const DynkinDiagram& finite_d,
                                std::size_t max_size = 10000);

/// Subword-property Bruhat order, precomputed at enumeration time.
bool bruhat_leq(const EnumeratedGroup& G, const WeylElement& u, const WeylElement& w);

struct CrossCheckStats {
  int elements = 0;
  int length_checks = 0;
  int coset_checks = 0;
  int descent_checks = 0;
  int bp_checks = 0;
};

/// Full agreement sweep between the oracle and the matrix engine on one
/// finite group: lengths (BFS depth vs descent stripping vs inversion count),
/// the longest element, minimal coset representatives for every (w, I),
/// coset descent sets (Bruhat definition vs trichotomy), and BP verdicts for
/// all (w, K, I) with w in W^I, I inside K. Throws std::logic_error naming the
/// witness on the first mismatch.
CrossCheckStats cross_check(const DynkinDiagram& finite_d);

}  // namespace weylcomb
