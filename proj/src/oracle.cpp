#include "weylcomb/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "weylcomb/roots.hpp"

namespace weylcomb {

int EnumeratedGroup::index_of(const WeylElement& w) const {
  auto it = index.find(w.matrix().flat());
  return it == index.end() ? -1 : it->second;
}

EnumeratedGroup enumerate_subgroup(const WeylGroup& W, NodeSet K, std::size_t max_size) {
  EnumeratedGroup G{W, K, {}, {}, {}, {}, {}};
  const std::vector<int> gens = K.to_vector();
  G.elements.push_back(W.identity());
  G.lengths.push_back(0);
  G.words.push_back({});
  G.index.emplace(G.elements[0].matrix().flat(), 0);
  for (std::size_t head = 0; head < G.elements.size(); ++head) {
    for (int s : gens) {
      const WeylElement next = W.multiply(G.elements[head], W.simple_reflection(s));
      if (G.index.count(next.matrix().flat())) continue;
      if (G.elements.size() >= max_size)
        throw std::invalid_argument("enumerate_subgroup: group exceeds the size guard");
      G.index.emplace(next.matrix().flat(), static_cast<int>(G.elements.size()));
      G.elements.push_back(next);
      G.lengths.push_back(G.lengths[head] + 1);
      std::vector<int> word = G.words[head];
      word.push_back(s);
      G.words.push_back(std::move(word));
    }
  }

  // Bruhat order by the subword property: u <= w iff some reduced word of u
  // is a subword of one fixed reduced word of w. The scan collects, prefix by
  // prefix, every element reachable by a length-increasing subword product.
  const int n = G.size();
  G.leq.assign(n, std::vector<char>(n, 0));
  for (int w = 0; w < n; ++w) {
    std::vector<char> reach(n, 0);
    reach[0] = 1;
    for (int s : G.words[w]) {
      std::vector<char> next = reach;
      const WeylElement sref = W.simple_reflection(s);
      for (int u = 0; u < n; ++u) {
        if (!reach[u]) continue;
        const int us = G.index_of(W.multiply(G.elements[u], sref));
        if (G.lengths[us] == G.lengths[u] + 1) next[us] = 1;
      }
      reach.swap(next);
    }
    for (int u = 0; u < n; ++u) G.leq[u][w] = reach[u];
  }
  return G;
}

EnumeratedGroup enumerate_group(const DynkinDiagram& finite_d, std::size_t max_size) {
  if (finite_d.kind != DiagramKind::Finite)
    throw std::invalid_argument("enumerate_group: diagram must be finite");
  WeylGroup W(finite_d);
  return enumerate_subgroup(W, finite_d.node_set(), max_size);
}

bool bruhat_leq(const EnumeratedGroup& G, const WeylElement& u, const WeylElement& w) {
  const int iu = G.index_of(u), iw = G.index_of(w);
  if (iu < 0 || iw < 0) throw std::invalid_argument("bruhat_leq: element not enumerated");
  return G.leq[iu][iw] != 0;
}

namespace {

std::string word_str(const std::vector<int>& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  os << "]";
  return os.str();
}

[[noreturn]] void mismatch(const std::string& what) {
  throw std::logic_error("cross_check mismatch: " + what);
}

// Oracle-side minimal coset representative: scan the whole coset w W_I and
// take the unique element of smallest BFS length.
int oracle_min_coset_rep(const EnumeratedGroup& G, const std::vector<int>& subgroup, int w) {
  int best = -1;
  int seen_at_best = 0;
  for (int z : subgroup) {
    const int wz = G.index_of(G.group.multiply(G.elements[w], G.elements[z]));
    if (best < 0 || G.lengths[wz] < G.lengths[best]) {
      best = wz;
      seen_at_best = 1;
    } else if (wz != best && G.lengths[wz] == G.lengths[best]) {
      ++seen_at_best;
    }
  }
  if (seen_at_best != 1) mismatch("coset minimum is not unique");
  return best;
}

std::vector<int> subgroup_indices(const EnumeratedGroup& G, NodeSet I) {
  // BFS words are reduced, so their letter set is the (word-independent) support
  std::vector<int> out;
  for (int i = 0; i < G.size(); ++i) {
    bool inside = true;
    for (int s : G.words[i])
      if (!I.contains(s)) { inside = false; break; }
    if (inside) out.push_back(i);
  }
  return out;
}

NodeSet word_support(const std::vector<int>& word) {
  NodeSet s;
  for (int l : word) s.insert(l);
  return s;
}

std::vector<NodeSet> all_subsets(NodeSet S) {
  const std::vector<int> labels = S.to_vector();
  std::vector<NodeSet> out;
  for (std::uint32_t mask = 0; mask < (1u << labels.size()); ++mask) {
    NodeSet sub;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if ((mask >> i) & 1u) sub.insert(labels[i]);
    out.push_back(sub);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CrossCheckStats cross_check(const DynkinDiagram& finite_d) {
  const EnumeratedGroup G = enumerate_group(finite_d);
  const WeylGroup& W = G.group;
  const NodeSet S = finite_d.node_set();
  CrossCheckStats stats;
  stats.elements = G.size();

  // lengths: BFS depth vs descent stripping vs inversion count
  const RootSet pos = positive_roots(finite_d);
  for (int i = 0; i < G.size(); ++i) {
    const int bfs = G.lengths[i];
    const int strip = W.length(G.elements[i]);
    int inversions = 0;
    for (const AffineRoot& r : pos.roots) {
      const Coeffs img = W.act(G.elements[i], r.coeffs);
      bool neg = true;
      for (Int x : img)
        if (x > 0) { neg = false; break; }
      if (neg) ++inversions;
    }
    if (bfs != strip || bfs != inversions)
      mismatch("lengths disagree on " + word_str(G.words[i]) + ": bfs=" + std::to_string(bfs) +
               " strip=" + std::to_string(strip) + " inv=" + std::to_string(inversions));
    ++stats.length_checks;
  }

  // longest element
  {
    int best = 0;
    for (int i = 1; i < G.size(); ++i)
      if (G.lengths[i] > G.lengths[best]) best = i;
    if (!(W.longest_element(S) == G.elements[best]))
      mismatch("longest element disagrees");
  }

  const std::vector<NodeSet> subsets = all_subsets(S);

  // minimal coset representatives for every (w, I)
  std::map<NodeSet, std::vector<int>> members;
  for (const NodeSet& I : subsets) members[I] = subgroup_indices(G, I);
  for (const NodeSet& I : subsets) {
    const std::vector<int>& WI = members[I];
    for (int w = 0; w < G.size(); ++w) {
      const int om = oracle_min_coset_rep(G, WI, w);
      if (!(W.min_coset_rep(G.elements[w], I) == G.elements[om]))
        mismatch("min_coset_rep disagrees at w=" + word_str(G.words[w]) + " I=" + I.to_string());
      ++stats.coset_checks;
    }
  }

  // coset descent sets: trichotomy vs the Bruhat-order definition
  for (const NodeSet& I : subsets) {
    const std::vector<int>& WI = members[I];
    for (int u = 0; u < G.size(); ++u) {
      if (oracle_min_coset_rep(G, WI, u) != u) continue;  // not in W^I
      NodeSet oracle_D;
      for (int s : S.to_vector()) {
        const int su = G.index_of(W.multiply(W.simple_reflection(s), G.elements[u]));
        const int su_min = oracle_min_coset_rep(G, WI, su);
        if (G.leq[su_min][u]) oracle_D.insert(s);
      }
      if (oracle_D != W.coset_descents(G.elements[u], I))
        mismatch("coset descents disagree at u=" + word_str(G.words[u]) + " I=" + I.to_string());
      ++stats.descent_checks;
    }
  }

  // BP verdicts for all (w, K, I) with I inside K and w in W^I
  for (const NodeSet& I : subsets) {
    const std::vector<int>& WI = members[I];
    for (const NodeSet& K : subsets) {
      if (!I.subset_of(K)) continue;
      const std::vector<int>& WK = members[K];
      for (int w = 0; w < G.size(); ++w) {
        if (oracle_min_coset_rep(G, WI, w) != w) continue;
        const int v = oracle_min_coset_rep(G, WK, w);
        const int u = G.index_of(W.multiply(W.inverse(G.elements[v]), G.elements[w]));
        if (G.lengths[v] + G.lengths[u] != G.lengths[w])
          mismatch("oracle decomposition lengths do not add at w=" + word_str(G.words[w]));
        NodeSet oracle_D;
        for (int s : S.to_vector()) {
          const int su = G.index_of(W.multiply(W.simple_reflection(s), G.elements[u]));
          const int su_min = oracle_min_coset_rep(G, WI, su);
          if (G.leq[su_min][u]) oracle_D.insert(s);
        }
        const bool oracle_bp = (word_support(G.words[v]) & K).subset_of(oracle_D);
        const bool engine_bp = W.is_billey_postnikov(G.elements[w], K, I);
        if (oracle_bp != engine_bp)
          mismatch("BP verdict disagrees at w=" + word_str(G.words[w]) + " K=" + K.to_string() +
                   " I=" + I.to_string());
        ++stats.bp_checks;
      }
    }
  }

  return stats;
}

}  // namespace weylcomb
