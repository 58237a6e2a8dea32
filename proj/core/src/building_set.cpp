#include "jumpcalc/building_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace jumpcalc {

std::vector<MemberId> MemberSet::ids() const {
  std::vector<MemberId> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<MemberId>(std::countr_zero(b)));
  }
  return out;
}

std::string to_string(BuildingSetKind kind) {
  return kind == BuildingSetKind::full ? "full" : "minimal";
}

BuildingSet::BuildingSet(Lattice lattice, BuildingSetKind kind,
                         const std::vector<std::size_t>& elements)
    : lattice_(std::move(lattice)), kind_(kind), member_of_element_(lattice_.size()) {
  if (elements.size() + 1 > 64) throw InputError("building sets are limited to 64 members");
  const std::size_t n = lattice_.ambient_dim();
  const HyperplaneMask all = lattice_.multiplicities().size() == 64
                                 ? ~HyperplaneMask{0}
                                 : (HyperplaneMask{1} << lattice_.multiplicities().size()) - 1;
  members_.push_back(Member{std::nullopt, n, 0, 0, all});
  for (std::size_t e : elements) {
    member_of_element_[e] = members_.size();
    members_.push_back(Member{e, lattice_.codim(e), lattice_.dim(e), lattice_.s(e),
                              lattice_.element(e).hyperplanes});
  }
}

MemberSet BuildingSet::nonzero_members() const {
  MemberSet s;
  for (MemberId i = 1; i < members_.size(); ++i) s.insert(i);
  return s;
}

std::optional<MemberId> BuildingSet::member_of_element(std::size_t element) const {
  return member_of_element_.at(element);
}

bool BuildingSet::contained(MemberId a, MemberId b) const {
  if (a == zero) return true;
  if (b == zero) return false;
  return lattice_.is_subset(*members_[a].element, *members_[b].element);
}

bool BuildingSet::strictly_below(MemberId w, std::optional<std::size_t> top) const {
  if (!top) return true;
  if (w == zero) return true;
  const std::size_t e = *members_[w].element;
  return e != *top && lattice_.is_subset(e, *top);
}

std::size_t BuildingSet::meet(MemberSet s) const {
  HyperplaneMask mask = 0;
  for (MemberId id : s.ids()) {
    if (id == zero) throw std::invalid_argument("meet: zero member has no lattice element");
    mask |= members_[id].hyperplanes;
  }
  return lattice_.meet(mask);
}

std::string BuildingSet::label(MemberId id) const { return "c" + std::to_string(id); }

bool is_reducible(const Lattice& l, std::size_t element) {
  const auto& flat = l.element(element);
  std::vector<std::size_t> through;
  for (std::size_t h = 0; h < l.multiplicities().size(); ++h) {
    if (flat.hyperplanes & (HyperplaneMask{1} << h)) through.push_back(h);
  }
  const std::size_t k = through.size();
  if (k < 2) return false;
  auto rank_of = [&](std::uint64_t pick) {
    Matrix normals(0, l.ambient_dim());
    for (std::size_t i = 0; i < k; ++i) {
      if (pick & (std::uint64_t{1} << i)) {
        normals.append_row(l.element(l.hyperplane_ids()[through[i]]).subspace.equations().row(0));
      }
    }
    return rank(normals);
  };
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  // The first hyperplane always sits in part one, so each bipartition is seen once.
  for (std::uint64_t part = 1; part < full; part += 2) {
    if (rank_of(part) + rank_of(full & ~part) == flat.subspace.codim()) return true;
  }
  return false;
}

BuildingSet full_building_set(const Lattice& l) {
  std::vector<std::size_t> all(l.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return BuildingSet(l, BuildingSetKind::full, all);
}

BuildingSet minimal_building_set(const Lattice& l) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (!is_reducible(l, i)) keep.push_back(i);
  }
  return BuildingSet(l, BuildingSetKind::minimal, keep);
}

BuildingSet make_building_set(const Lattice& l, BuildingSetKind kind) {
  return kind == BuildingSetKind::full ? full_building_set(l) : minimal_building_set(l);
}

bool is_nested(MemberSet s, const BuildingSet& g) {
  s.erase(BuildingSet::zero);
  const auto ids = s.ids();
  const std::size_t k = ids.size();
  if (k < 2) return true;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
    if (std::popcount(pick) < 2) continue;
    MemberSet chosen;
    bool antichain = true;
    for (std::size_t i = 0; i < k && antichain; ++i) {
      if (!(pick & (std::uint64_t{1} << i))) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!(pick & (std::uint64_t{1} << j))) continue;
        if (g.contained(ids[i], ids[j]) || g.contained(ids[j], ids[i])) {
          antichain = false;
          break;
        }
      }
      chosen.insert(ids[i]);
    }
    if (!antichain) continue;
    if (g.member_of_element(g.meet(chosen))) return false;
  }
  return true;
}

NestedSet make_nested_set(MemberSet s, const BuildingSet& g) {
  if (s.contains(BuildingSet::zero)) throw std::invalid_argument("nested sets exclude the zero member");
  if (!is_nested(s, g)) throw std::invalid_argument("member set is not nested");
  NestedSet out{s, {}};
  std::vector<MemberId> bottoms{BuildingSet::zero};
  for (MemberId id : s.ids()) bottoms.push_back(id);
  for (MemberId u : bottoms) {
    MemberSet above;
    for (MemberId v : s.ids()) {
      if (g.strictly_contained(u, v)) above.insert(v);
    }
    Factor f{u, std::nullopt, g.ambient_dim()};
    if (!above.empty()) {
      f.top = g.meet(above);
      f.top_dim = g.lattice().dim(*f.top);
    }
    out.factors.push_back(f);
  }
  return out;
}

namespace {

void extend(const BuildingSet& g, const std::vector<MemberId>& pool, std::size_t from, MemberSet current,
            std::vector<MemberSet>& out) {
  for (std::size_t i = from; i < pool.size(); ++i) {
    MemberSet next = current;
    next.insert(pool[i]);
    // Subsets of nested sets are nested, so pruning here loses nothing.
    if (!is_nested(next, g)) continue;
    out.push_back(next);
    extend(g, pool, i + 1, next, out);
  }
}

}  // namespace

std::vector<NestedSet> nested_subsets_of(MemberSet pool, const BuildingSet& g) {
  if (pool.contains(BuildingSet::zero)) throw std::invalid_argument("pool must exclude the zero member");
  std::vector<MemberSet> sets;
  extend(g, pool.ids(), 0, MemberSet{}, sets);
  std::sort(sets.begin(), sets.end(), [](MemberSet a, MemberSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<NestedSet> out;
  out.reserve(sets.size());
  for (MemberSet s : sets) out.push_back(make_nested_set(s, g));
  return out;
}

}  // namespace jumpcalc
