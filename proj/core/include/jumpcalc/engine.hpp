#pragma once

// Jumping numbers and inner jumping multiplicities at the cone point, read
// off from intersection numbers on the wonderful model.

#include "jumpcalc/arrangement.hpp"
#include "jumpcalc/building_set.hpp"
#include "jumpcalc/oracle.hpp"
#include "jumpcalc/ring.hpp"
#include "jumpcalc/series.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace jumpcalc {

struct JumpConstants {
  int n = 0;
  int d = 0;
  int a0 = 0;
  std::vector<int> s;  // per member; 0 for the zero subspace
  std::vector<int> r;
  std::vector<int> delta;
};

/// a_0 = max{d - n + 1, sum over G - {0} of max(0, s - r)}.
JumpConstants constants(const BuildingSet& g);

struct Candidate {
  Rational c;
  MemberSet s_c;                   // members V != 0 with c*s(V) integral
  std::vector<Rational> a_values;  // per member, -a_0 at the zero subspace
};

/// a_V(c) for a nonzero member: r - c*s when that is integral, else r - 1 - floor(c*s).
Rational a_value(const Rational& c, int r, int s);

Candidate make_candidate(const Rational& c, const JumpConstants& k);

/// Every c = k/s(V) in (0,1] over V in G - {0}, sorted; c = 1 comes last.
std::vector<Candidate> candidates(const JumpConstants& k);

/// P_W for one factor (bottom, top) of a nested set: the Todd-class
/// contribution of W with bottom ⊆ W ⊊ top. `nested_with[w]` tells whether
/// {w} ∪ S is nested.
TruncatedPoly p_series(const Factor& f, MemberId w, const BuildingSet& g, const std::vector<bool>& nested_with,
                       const UnivariateSeries& q);

class JumpEngine {
 public:
  explicit JumpEngine(BuildingSet g, Type1Mode mode = Type1Mode::minimal);

  const BuildingSet& building_set() const { return g_; }
  const JumpConstants& constants() const { return k_; }
  const RingPresentation& presentation() const { return presentation_; }
  const TopSlice& slice() const { return slice_; }
  int top_degree() const { return k_.n - 1; }

  std::vector<bool> nested_with(MemberSet s) const;

  /// Full truncated product T^S (degrees 0..n-1). Cached; thread-safe.
  TruncatedPoly t_series(const NestedSet& s) const;

  /// Sum over nested nonempty S ⊆ S_c and j of
  /// (-1)^{|S|+1}/j! * l^j * T^S_{n-1-|S|-j} * prod_{V in S} c_V, with
  /// l = sum a_V(c) c_V over all of G.
  TruncatedPoly criterion_poly(const Candidate& c) const;
  bool is_jumping(const Candidate& c) const;

  /// The member of dimension one (the cone over the origin), if present.
  std::optional<MemberId> apex() const;

  /// Degree n-1 class whose top evaluation is the inner multiplicity of c.
  /// Requires an apex; zero when c*d is not an integer.
  TruncatedPoly inner_poly(const Rational& c) const;

  /// 0 without an apex or when c*d is not an integer. Throws
  /// std::logic_error if the intersection number is not a nonnegative integer.
  Integer inner_multiplicity(const Rational& c) const;

 private:
  TruncatedPoly linear_form(const std::vector<Rational>& a, bool include_zero) const;

  BuildingSet g_;
  JumpConstants k_;
  RingPresentation presentation_;
  TopSlice slice_;
  UnivariateSeries q_;
  mutable std::mutex cache_mutex_;
  mutable std::map<MemberSet, TruncatedPoly> t_cache_;
};

struct CandidateResult {
  Rational c;
  MemberSet s_c;
  bool verdict = false;  // c = 1 is always true
  std::optional<bool> oracle;
  TruncatedPoly criterion;  // zero polynomial at c = 1
  Rational criterion_value;
};

struct JumpReport {
  BuildingSetKind building_set = BuildingSetKind::full;
  BuildingSetKind inner_building_set = BuildingSetKind::full;
  int n = 0;
  int d = 0;
  int a0 = 0;
  std::vector<Member> members;  // of the building set used for the verdicts
  std::vector<Rational> jumping_numbers;                         // in (0,1)
  std::vector<std::pair<Rational, Integer>> inner_multiplicities;  // every k/d, k = 1..d
  std::vector<std::pair<Rational, Integer>> spectrum_part;         // nonzero entries only
  std::vector<CandidateResult> candidates;
  bool oracle_run = false;

  std::size_t oracle_agreements() const;
  bool oracle_agrees() const;
};

struct AnalyzeOptions {
  BuildingSetKind building_set = BuildingSetKind::full;
  bool with_oracle = false;
};

JumpReport analyze(const ArrangementInput& a, const AnalyzeOptions& options = {});

}  // namespace jumpcalc
