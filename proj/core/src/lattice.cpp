#include "jumpcalc/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace jumpcalc {

Subspace Subspace::from_equations(const Matrix& equations) {
  Subspace s;
  s.ambient_ = equations.cols();
  s.equations_ = rref(equations);
  return s;
}

Subspace Subspace::zero(std::size_t n) { return from_equations(Matrix::identity(n)); }

Subspace Subspace::whole(std::size_t n) { return from_equations(Matrix(0, n)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspaces of different spaces");
  // other ⊆ this  iff  every equation of this vanishes on other.
  for (std::size_t i = 0; i < equations_.rows(); ++i) {
    if (!in_row_space(other.equations_, equations_.row(i))) return false;
  }
  return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspaces of different spaces");
  Subspace s = from_equations(equations_.stacked(other.equations_));
  s.ambient_ = ambient_;
  return s;
}

Lattice::Lattice(std::size_t ambient_n, std::vector<Flat> elements, std::vector<int> multiplicities)
    : n_(ambient_n), elements_(std::move(elements)), mults_(std::move(multiplicities)) {
  for (int m : mults_) d_ += m;
  hyperplane_ids_.assign(mults_.size(), 0);
  for (std::size_t h = 0; h < mults_.size(); ++h) {
    const HyperplaneMask bit = HyperplaneMask{1} << h;
    bool found = false;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i].hyperplanes == bit && elements_[i].subspace.codim() == 1) {
        hyperplane_ids_[h] = i;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("lattice is missing an input hyperplane");
  }
}

std::optional<std::size_t> Lattice::find(const Subspace& v) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].subspace == v) return i;
  }
  return std::nullopt;
}

std::size_t Lattice::meet(HyperplaneMask mask) const {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!mask_contains(elements_[i].hyperplanes, mask)) continue;
    if (!best || dim(i) > dim(*best)) best = i;
  }
  if (!best) throw std::logic_error("meet: no flat contains the given hyperplanes");
  return *best;
}

Lattice cone(const ArrangementInput& a) {
  validate(a);
  if (a.hyperplanes.size() > 64) throw InputError("at most 64 hyperplanes are supported");
  const auto n = static_cast<std::size_t>(a.affine_dim) + 1;

  std::vector<Subspace> hyperplanes;
  std::vector<int> mults;
  for (const auto& h : a.hyperplanes) {
    Matrix eq(1, n);
    for (std::size_t k = 0; k < h.form.size(); ++k) eq(0, k) = h.form[k];
    hyperplanes.push_back(Subspace::from_equations(eq));
    mults.push_back(h.mult);
  }

  std::map<Subspace, HyperplaneMask> found;
  std::deque<Subspace> work(hyperplanes.begin(), hyperplanes.end());
  while (!work.empty()) {
    Subspace v = std::move(work.front());
    work.pop_front();
    if (found.contains(v)) continue;
    HyperplaneMask mask = 0;
    for (std::size_t h = 0; h < hyperplanes.size(); ++h) {
      if (hyperplanes[h].contains(v)) mask |= HyperplaneMask{1} << h;
    }
    found.emplace(v, mask);
    for (const auto& h : hyperplanes) {
      if (h.contains(v)) continue;
      Subspace w = v.intersect(h);
      if (!found.contains(w)) work.push_back(std::move(w));
    }
  }

  std::vector<Flat> elements;
  for (const auto& [v, mask] : found) {
    if (v.dim() == 0) throw std::logic_error("coned lattice cannot contain the zero subspace");
    int s = 0;
    for (std::size_t h = 0; h < mults.size(); ++h) {
      if (mask & (HyperplaneMask{1} << h)) s += mults[h];
    }
    elements.push_back(Flat{v, mask, s});
  }
  std::stable_sort(elements.begin(), elements.end(), [](const Flat& x, const Flat& y) {
    if (x.subspace.codim() != y.subspace.codim()) return x.subspace.codim() > y.subspace.codim();
    return x.subspace < y.subspace;
  });
  return Lattice(n, std::move(elements), std::move(mults));
}

}  // namespace jumpcalc
