#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylcomb/intmat.hpp"

namespace weylcomb {

enum class Family { A, B, C, D, E, F, G };
enum class DiagramKind { Finite, UntwistedAffine, TwistedAffine };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);
std::string kind_name(DiagramKind k);

/// Set of node labels, stored as a bitset. Labels are small (<= 31).
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<int> labels);
  /// Consecutive labels lo..hi inclusive.
  static NodeSet range(int lo, int hi);

  void insert(int label);
  void erase(int label);
  bool contains(int label) const {
    return label >= 0 && label <= 31 && ((bits_ >> label) & 1u) != 0;
  }
  int size() const;
  bool empty() const { return bits_ == 0; }

  NodeSet operator|(const NodeSet& o) const { return NodeSet(bits_ | o.bits_); }
  NodeSet operator&(const NodeSet& o) const { return NodeSet(bits_ & o.bits_); }
  NodeSet operator-(const NodeSet& o) const { return NodeSet(bits_ & ~o.bits_); }
  bool subset_of(const NodeSet& o) const { return (bits_ & ~o.bits_) == 0; }

  bool operator==(const NodeSet& o) const { return bits_ == o.bits_; }
  bool operator!=(const NodeSet& o) const { return bits_ != o.bits_; }
  bool operator<(const NodeSet& o) const { return bits_ < o.bits_; }

  std::vector<int> to_vector() const;  // ascending
  std::string to_string() const;       // "{1,3,4}"

 private:
  explicit NodeSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// A Dynkin diagram with generalized Cartan matrix C[i][j] = <alpha_j, alpha_i^v>,
/// so that s_i(alpha_j) = alpha_j - C[i][j] * alpha_i.
///
/// Finite diagrams carry labels 1..n (E6: chain 1-2-3-4-5 with 6 above 3,
/// E7/E8: chain with the branch node above 3). Affine diagrams append the
/// affine node with label 0. `delta` holds the marks of the basic imaginary
/// root, i.e. the positive generator of the kernel of C; it is empty for
/// finite diagrams.
struct DynkinDiagram {
  DiagramKind kind = DiagramKind::Finite;
  Family family = Family::A;
  int rank = 0;             // rank of the finite part
  std::vector<int> labels;  // ascending
  IntMatrix cartan;         // indexed by position in `labels`
  Coeffs delta;             // affine kinds only

  int num_nodes() const { return static_cast<int>(labels.size()); }
  int index_of(int label) const;  // throws std::invalid_argument on unknown label
  bool has_node(int label) const;
  NodeSet node_set() const;

  /// Smallest positive integers d with d_i C[i][j] = d_j C[j][i];
  /// (alpha_i, alpha_i) = 2 d_i under the symmetrized form.
  std::vector<Int> symmetrizer() const;

  /// "A3", "B~4", "A(2)5", "D(2)5", ...
  std::string name() const;
};

/// An induced subdiagram (possibly disconnected); keeps the original labels.
struct Subdiagram {
  std::vector<int> labels;
  IntMatrix cartan;

  int index_of(int label) const;
  bool operator==(const Subdiagram& o) const;
};

/// Smallest positive integer diagonal d with d_i C[i][j] = d_j C[j][i].
std::vector<Int> cartan_symmetrizer(const IntMatrix& c);

/// Valid types: A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4), E6/E7/E8,
/// F4, G2. Anything else (D2, D3 included) is rejected.
DynkinDiagram build_finite(Family family, int rank);

/// Extended diagram of the untwisted affine algebra: node 0 is attached via
/// the highest root theta, and delta = alpha_0 + theta.
DynkinDiagram affinize_untwisted(const DynkinDiagram& d);

/// Twisted affine diagram for the two families that admit a minuscule,
/// non-cominuscule node: C_n -> A(2)_{2n-1} (nodes 0 and 1 fork into node 2),
/// B_n -> D(2)_{n+1} (chain with double edges at both ends). Here
/// delta = alpha_0 + theta_s with theta_s the highest short root.
DynkinDiagram affinize_twisted(const DynkinDiagram& d);

/// Nodes whose coefficient in the highest root equals 1.
NodeSet cominuscule_nodes(const DynkinDiagram& d);
/// Cominuscule nodes of the dual root system (transposed Cartan matrix).
NodeSet minuscule_nodes(const DynkinDiagram& d);

Subdiagram as_subdiagram(const DynkinDiagram& d);
Subdiagram delete_node(const DynkinDiagram& d, int label);
Subdiagram delete_node(const Subdiagram& d, int label);

/// A label bijection preserving Cartan entries pointwise.
struct NodeBijection {
  std::vector<std::pair<int, int>> map;  // sorted by source label
  int image_of(int label) const;         // throws on unknown label
  std::string to_string() const;         // "1->0 2->2 ..."
};

/// Exhaustive backtracking search (pruned by row signatures) for a bijection
/// sigma with C1[i][j] = C2[sigma(i)][sigma(j)] for all i, j. `pin`, when
/// given, forces sigma(pin.first) = pin.second. When the two diagrams are
/// equal the identity map is found first.
std::optional<NodeBijection> diagram_isomorphism(
    const Subdiagram& d1, const Subdiagram& d2,
    std::optional<std::pair<int, int>> pin = std::nullopt);

/// Graphviz export: edge multiplicities as labels, arrows from long to short.
std::string to_dot(const DynkinDiagram& d);

}  // namespace weylcomb
