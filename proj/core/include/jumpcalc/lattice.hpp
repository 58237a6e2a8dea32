#pragma once

#include "jumpcalc/arrangement.hpp"
#include "jumpcalc/matrix.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace jumpcalc {

/// Linear subspace of Q^n stored as the rref of its annihilator, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;

  static Subspace from_equations(const Matrix& equations);
  static Subspace zero(std::size_t n);
  static Subspace whole(std::size_t n);

  std::size_t ambient() const { return ambient_; }
  std::size_t codim() const { return equations_.rows(); }
  std::size_t dim() const { return ambient_ - codim(); }
  const Matrix& equations() const { return equations_; }

  /// True iff `other` is a subspace of *this.
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    return a.equations_ <=> b.equations_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix equations_;
};

/// Bit i set iff input hyperplane i contains the flat.
using HyperplaneMask = std::uint64_t;

inline bool mask_contains(HyperplaneMask outer, HyperplaneMask inner) {
  return (outer & inner) == inner;
}

struct Flat {
  Subspace subspace;
  HyperplaneMask hyperplanes = 0;
  int s = 0;  // sum of multiplicities of the hyperplanes containing the flat
};

/// Intersection lattice of a coned arrangement in C^n, without C^n itself.
/// Elements are ordered by decreasing codimension, then by their equations.
class Lattice {
 public:
  Lattice(std::size_t ambient_n, std::vector<Flat> elements, std::vector<int> multiplicities);

  std::size_t ambient_dim() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Flat>& elements() const { return elements_; }
  const Flat& element(std::size_t i) const { return elements_[i]; }

  std::size_t codim(std::size_t i) const { return elements_[i].subspace.codim(); }
  std::size_t dim(std::size_t i) const { return elements_[i].subspace.dim(); }
  int s(std::size_t i) const { return elements_[i].s; }
  int d_total() const { return d_; }
  const std::vector<int>& multiplicities() const { return mults_; }

  /// Element index of each input hyperplane, in input order.
  const std::vector<std::size_t>& hyperplane_ids() const { return hyperplane_ids_; }

  /// elements[i] is a subspace of elements[j].
  bool is_subset(std::size_t i, std::size_t j) const {
    return mask_contains(elements_[i].hyperplanes, elements_[j].hyperplanes);
  }

  std::optional<std::size_t> find(const Subspace& v) const;

  /// The flat cut out by the hyperplanes in `mask` (mask must be nonzero).
  std::size_t meet(HyperplaneMask mask) const;

 private:
  std::size_t n_;
  std::vector<Flat> elements_;
  std::vector<int> mults_;
  std::vector<std::size_t> hyperplane_ids_;
  int d_ = 0;
};

/// Embeds the affine forms into C^n (n = affine_dim + 1, zero coefficient on
/// the new coordinate) and closes the hyperplanes under intersection.
Lattice cone(const ArrangementInput& a);

}  // namespace jumpcalc
