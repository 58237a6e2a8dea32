#pragma once

#include "jumpcalc/lattice.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jumpcalc {

using MemberId = std::size_t;

/// Small set of building-set members (at most 64).
class MemberSet {
 public:
  MemberSet() = default;
  explicit MemberSet(std::uint64_t bits) : bits_(bits) {}
  MemberSet(std::initializer_list<MemberId> ids) {
    for (MemberId id : ids) insert(id);
  }

  void insert(MemberId id) { bits_ |= std::uint64_t{1} << id; }
  void erase(MemberId id) { bits_ &= ~(std::uint64_t{1} << id); }
  bool contains(MemberId id) const { return (bits_ >> id) & 1U; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  std::vector<MemberId> ids() const;

  friend MemberSet operator|(MemberSet a, MemberSet b) { return MemberSet(a.bits_ | b.bits_); }
  friend bool operator==(MemberSet, MemberSet) = default;
  friend auto operator<=>(MemberSet a, MemberSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

enum class BuildingSetKind { full, minimal };

std::string to_string(BuildingSetKind kind);

/// A building-set member. Member 0 is always the distinguished zero subspace.
struct Member {
  std::optional<std::size_t> element;  // lattice index; empty for the zero subspace
  std::size_t codim = 0;               // r(V)
  std::size_t dim = 0;                 // delta(V)
  int s = 0;
  HyperplaneMask hyperplanes = 0;
};

/// G = G' ∪ {0} over a coned lattice. Carries its own copy of the lattice so
/// it can answer intersection queries on its own.
class BuildingSet {
 public:
  static constexpr MemberId zero = 0;

  BuildingSet(Lattice lattice, BuildingSetKind kind, const std::vector<std::size_t>& elements);

  BuildingSetKind kind() const { return kind_; }
  const Lattice& lattice() const { return lattice_; }
  std::size_t ambient_dim() const { return lattice_.ambient_dim(); }
  std::size_t size() const { return members_.size(); }
  const Member& member(MemberId id) const { return members_[id]; }
  const std::vector<Member>& members() const { return members_; }

  /// All members except the zero subspace.
  MemberSet nonzero_members() const;

  std::optional<MemberId> member_of_element(std::size_t element) const;

  /// Member a is a subspace of member b. The zero subspace lies in everything.
  bool contained(MemberId a, MemberId b) const;
  bool strictly_contained(MemberId a, MemberId b) const { return a != b && contained(a, b); }

  /// Member w is a proper subspace of the lattice element `top`
  /// (an empty `top` stands for the ambient space).
  bool strictly_below(MemberId w, std::optional<std::size_t> top) const;

  /// Flat cut out by the intersection of nonzero members.
  std::size_t meet(MemberSet s) const;

  std::string label(MemberId id) const;

 private:
  Lattice lattice_;
  BuildingSetKind kind_;
  std::vector<Member> members_;
  std::vector<std::optional<MemberId>> member_of_element_;
};

BuildingSet full_building_set(const Lattice& l);

/// Irreducible flats plus {0}. A flat is reducible when the normals of the
/// hyperplanes through it split into two nonempty groups whose ranks add up
/// to its codimension (exhaustive search over bipartitions).
BuildingSet minimal_building_set(const Lattice& l);

BuildingSet make_building_set(const Lattice& l, BuildingSetKind kind);

bool is_reducible(const Lattice& l, std::size_t element);

/// True iff no antichain of >= 2 members of `s` intersects to a member of
/// G - {0}. The zero subspace is comparable with everything and is ignored.
bool is_nested(MemberSet s, const BuildingSet& g);

/// One product factor of a nested stratum: the projectivized quotient
/// top / bottom, where `bottom` ranges over S ∪ {0} and `top` is the
/// intersection of the members of S strictly containing `bottom` (the ambient
/// space when there are none). For chains this is the pair (V, V_S).
struct Factor {
  MemberId bottom = 0;
  std::optional<std::size_t> top;  // lattice element; empty = ambient space
  std::size_t top_dim = 0;
};

struct NestedSet {
  MemberSet members;
  std::vector<Factor> factors;
};

/// Throws std::invalid_argument if `s` contains 0 or is not nested.
NestedSet make_nested_set(MemberSet s, const BuildingSet& g);

/// All nonempty nested subsets of `pool` (which must exclude 0), ordered by
/// size and then by member bits.
std::vector<NestedSet> nested_subsets_of(MemberSet pool, const BuildingSet& g);

}  // namespace jumpcalc
