#pragma once

#include <string>
#include <vector>

#include "weylcomb/dynkin.hpp"
#include "weylcomb/intmat.hpp"

namespace weylcomb {

enum class RootLength { Short, Long, Imaginary };
std::string root_length_name(RootLength l);

/// A root written in the simple-root basis of its diagram: entry k is the
/// coefficient of the simple root labelled diagram.labels[k]. Finite roots
/// have n entries, affine roots n+1 (the alpha_0 slot first).
struct AffineRoot {
  Coeffs coeffs;
  RootLength length = RootLength::Long;

  bool operator==(const AffineRoot& o) const { return coeffs == o.coeffs; }
  bool operator<(const AffineRoot& o) const { return coeffs < o.coeffs; }
};

enum class RootSetKind { Positive, U0, Um, UmMinus, P0 };
std::string root_set_kind_name(RootSetKind k);

/// A finite set of roots, sorted by coefficient vector.
struct RootSet {
  RootSetKind kind = RootSetKind::Positive;
  std::vector<AffineRoot> roots;

  int size() const { return static_cast<int>(roots.size()); }
  bool contains(const Coeffs& v) const;
  const AffineRoot* find(const Coeffs& v) const;
};

enum class Sign { Plus, Minus };

/// All of R+(g0) by reflection closure from the simple roots, with length tags.
RootSet positive_roots(const DynkinDiagram& d);

/// The unique positive root dominating every root coefficientwise.
AffineRoot highest_root(const DynkinDiagram& d);
/// The unique short root dominating every short root; on simply-laced input
/// this is the highest root.
AffineRoot highest_short_root(const DynkinDiagram& d);

/// Real-root test on an affine diagram. Writing v = a + k*delta with a in the
/// finite root lattice: untwisted kinds admit any k for a in R(g0); twisted
/// kinds admit any k for short a but only even k for long a. Multiples of
/// delta (a = 0) are imaginary and return false.
bool is_real_root(const DynkinDiagram& g, const Coeffs& v);

/// Weights of the nilradical obtained by removing `removed` (0 or m) from the
/// affine diagram, i.e. real roots supported away from `removed` whose
/// coefficient at the complementary special node is +1 (or {+1,+2} on twisted
/// diagrams), negated when sign is Minus:
///   (removed=0, Plus)  -> R(u_0)      positive, a_0 = 0, a_m in {1} / {1,2}
///   (removed=m, Plus)  -> R(u_m)      positive, a_m = 0, a_0 in {1} / {1,2}
///   (removed=m, Minus) -> R(u_m^-)    the negatives of R(u_m)
RootSet nilradical_roots(const DynkinDiagram& g, int m, int removed, Sign sign);

/// R(p_0) = R+(g0) together with the negative roots whose coefficient at m
/// vanishes; finite basis.
RootSet parabolic_roots(const DynkinDiagram& d, int m);

/// Pairing of v with the fundamental coweight dual to alpha_m: reduce v
/// modulo delta into the finite basis and read off the alpha_m coefficient.
Int coweight_pairing(const DynkinDiagram& g, const Coeffs& v, int m);

/// Symmetrized norm (v, v); zero exactly on the delta line for affine kinds.
Int root_norm(const DynkinDiagram& d, const Coeffs& v);
/// Short/Long by norm against the finite root system (Long when all roots
/// share one length); Imaginary when the norm vanishes.
RootLength classify_root_length(const DynkinDiagram& g, const Coeffs& v);

/// Finite root embedded into the affine basis with a_0 = 0.
Coeffs embed_affine(const DynkinDiagram& g, const Coeffs& finite_v);
/// v minus a_0(v) * delta, restricted to the finite labels.
Coeffs reduce_mod_delta(const DynkinDiagram& g, const Coeffs& v);

std::string root_to_string(const Coeffs& v);  // "[a0,a1,...,an]"

}  // namespace weylcomb
