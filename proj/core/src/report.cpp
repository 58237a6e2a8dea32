#include "jumpcalc/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace jumpcalc {

using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> member_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("c" + std::to_string(i));
  return names;
}

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& c : values) out.push_back(to_string(c));
  return out;
}

Json pair_list(const std::vector<std::pair<Rational, Integer>>& pairs) {
  Json out = Json::array();
  for (const auto& [c, m] : pairs) out.push_back(Json::array({to_string(c), to_long(m)}));
  return out;
}

Json flat_profile(const std::vector<Member>& members, MemberSet s) {
  std::vector<std::pair<std::size_t, int>> profile;
  for (MemberId v : s.ids()) profile.emplace_back(members[v].codim, members[v].s);
  std::sort(profile.begin(), profile.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  Json out = Json::array();
  for (const auto& [codim, s] : profile) out.push_back(Json{{"codim", codim}, {"s", s}});
  return out;
}

Json member_table(const std::vector<Member>& members) {
  Json out = Json::array();
  for (std::size_t i = 0; i < members.size(); ++i) {
    out.push_back(Json{{"id", "c" + std::to_string(i)},
                       {"codim", members[i].codim},
                       {"dim", members[i].dim},
                       {"s", members[i].s}});
  }
  return out;
}

Json id_list(MemberSet s) {
  Json out = Json::array();
  for (MemberId v : s.ids()) out.push_back("c" + std::to_string(v));
  return out;
}

std::string rational_join(const std::vector<Rational>& values) {
  if (values.empty()) return "none";
  std::string out;
  for (const auto& c : values) out += (out.empty() ? "" : ", ") + to_string(c);
  return out;
}

}  // namespace

std::string format_pairs(const std::vector<std::pair<Rational, Integer>>& pairs) {
  if (pairs.empty()) return "none";
  std::string out;
  for (const auto& [c, m] : pairs) {
    if (!out.empty()) out += ",";
    out += "(" + to_string(c) + "," + m.get_str() + ")";
  }
  return out;
}

std::string report_to_json(const JumpReport& r, bool diagnostics) {
  Json j;
  j["building_set"] = to_string(r.building_set);
  j["inner_building_set"] = to_string(r.inner_building_set);
  j["n"] = r.n;
  j["d"] = r.d;
  j["a0"] = r.a0;
  j["jumping_numbers"] = rational_list(r.jumping_numbers);
  j["trivial_jumping_number"] = "1";
  j["inner_multiplicities"] = pair_list(r.inner_multiplicities);
  j["spectrum_part"] = pair_list(r.spectrum_part);
  const auto names = member_names(r.members.size());
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json e;
    e["c"] = to_string(c.c);
    e["S_c"] = flat_profile(r.members, c.s_c);
    e["verdict"] = c.verdict;
    e["oracle"] = c.oracle ? Json(*c.oracle) : Json(nullptr);
    if (diagnostics) {
      e["S_c_members"] = id_list(c.s_c);
      e["criterion"] = c.criterion.to_string(names);
      e["criterion_value"] = to_string(c.criterion_value);
    }
    cands.push_back(std::move(e));
  }
  j["candidates"] = std::move(cands);
  if (r.oracle_run) {
    j["oracle_agreement"] = Json{{"agree", r.oracle_agreements()}, {"total", r.candidates.size()}};
  } else {
    j["oracle_agreement"] = nullptr;
  }
  if (diagnostics) j["members"] = member_table(r.members);
  return j.dump(2) + "\n";
}

std::string report_to_table(const JumpReport& r, bool diagnostics) {
  std::ostringstream out;
  out << "jumping numbers in (0,1): " << rational_join(r.jumping_numbers)
      << "; spectrum part: " << format_pairs(r.spectrum_part) << "\n";
  out << "building set: " << to_string(r.building_set) << " (" << r.members.size() << " members)";
  if (r.inner_building_set != r.building_set) {
    out << ", inner multiplicities from the " << to_string(r.inner_building_set) << " set";
  }
  out << "; n = " << r.n << ", d = " << r.d << ", a0 = " << r.a0 << "\n";
  out << "inner multiplicities: " << format_pairs(r.inner_multiplicities) << "\n";
  out << "candidates:\n";
  const auto names = member_names(r.members.size());
  for (const auto& c : r.candidates) {
    out << "  c = " << to_string(c.c) << ": " << (c.c == 1 ? "trivially jumping" : c.verdict ? "jumping" : "not jumping");
    if (c.oracle) out << (*c.oracle == c.verdict ? " (oracle agrees)" : " (ORACLE DISAGREES)");
    out << "\n";
    if (diagnostics && c.c < 1) {
      std::string ids;
      for (MemberId v : c.s_c.ids()) ids += (ids.empty() ? "" : " ") + names[v];
      out << "      S_c = {" << ids << "}\n";
      out << "      criterion = " << c.criterion.to_string(names) << "\n";
      out << "      top value = " << to_string(c.criterion_value) << "\n";
    }
  }
  if (diagnostics) {
    out << "members:\n";
    for (std::size_t i = 0; i < r.members.size(); ++i) {
      out << "  " << names[i] << ": codim " << r.members[i].codim << ", s " << r.members[i].s << "\n";
    }
  }
  if (r.oracle_run) {
    if (r.oracle_agrees()) {
      out << "oracle: agree on " << r.oracle_agreements() << "/" << r.candidates.size() << " candidates\n";
    } else {
      out << "oracle: DISAGREE on " << r.candidates.size() - r.oracle_agreements() << "/" << r.candidates.size()
          << " candidates\n";
    }
  }
  return out.str();
}

namespace {

Json ring_info(const JumpEngine& engine) {
  const auto& g = engine.building_set();
  const auto& p = engine.presentation();
  Json j;
  j["building_set"] = to_string(g.kind());
  j["variables"] = member_names(g.size());
  j["members"] = member_table(g.members());
  j["nested_sets"] = nested_subsets_of(g.nonzero_members(), g).size();
  Json gens = Json::array();
  for (const auto& gen : p.generators()) {
    gens.push_back(Json{{"type", gen.type},
                        {"support", id_list(gen.support)},
                        {"w", gen.w ? Json("c" + std::to_string(*gen.w)) : Json(nullptr)},
                        {"degree", gen.degree}});
  }
  j["generators"] = std::move(gens);
  j["top_degree"] = p.top_degree();
  j["quotient_dimensions"] = quotient_dimensions(p);
  j["top_quotient_dimension"] = engine.slice().slice().quotient_dimension();
  Exponents e(g.size(), 0);
  e[0] = static_cast<std::uint8_t>(p.top_degree());
  const Rational sign = p.top_degree() % 2 == 0 ? 1 : -1;
  j["top_class_value"] = to_string(engine.slice().evaluate_top(TruncatedPoly::monomial(p.top_degree(), e, sign)));
  return j;
}

}  // namespace

std::string ring_info_to_json(const JumpEngine& engine) { return ring_info(engine).dump(2) + "\n"; }

std::string ring_info_to_table(const JumpEngine& engine) {
  const Json j = ring_info(engine);
  std::ostringstream out;
  out << "building set: " << j["building_set"].get<std::string>() << " (" << j["variables"].size()
      << " variables)\n";
  out << "nested subsets of G - {0}: " << j["nested_sets"].get<std::size_t>() << "\n";
  out << "generators: " << j["generators"].size() << "\n";
  out << "quotient dimensions by degree:";
  for (const auto& d : j["quotient_dimensions"]) out << " " << d.get<std::size_t>();
  out << "\nquotient dimension at degree " << j["top_degree"].get<int>() << ": "
      << j["top_quotient_dimension"].get<std::size_t>() << "\n";
  return out.str();
}

std::vector<Rational> OracleRun::jumping_numbers() const {
  std::vector<Rational> out;
  for (const auto& [c, v] : results) {
    if (v.jumping) out.push_back(c);
  }
  return out;
}

OracleRun run_oracle(const ArrangementInput& a) {
  const AffineOracle oracle(a);
  OracleRun run{oracle.degree_bound(), {}, oracle.flats()};
  for (const auto& c : oracle.candidates()) run.results.emplace_back(c, oracle.check(c));
  return run;
}

std::string oracle_to_json(const OracleRun& run, bool diagnostics) {
  Json j;
  j["jumping_numbers"] = rational_list(run.jumping_numbers());
  j["degree_bound"] = run.degree_bound;
  if (diagnostics) {
    Json witnesses = Json::array();
    for (const auto& [c, v] : run.results) {
      if (!v.witness) continue;
      const auto& w = *v.witness;
      Json terms = Json::array();
      for (const auto& [e, coeff] : w.polynomial.terms()) {
        terms.push_back(Json::array({std::vector<int>(e.begin(), e.end()), to_string(coeff)}));
      }
      witnesses.push_back(Json{{"c", to_string(c)},
                               {"flat", Json{{"codim", run.flats[w.flat].r_prime}, {"s", run.flats[w.flat].s_prime}}},
                               {"m", w.m},
                               {"degree", w.degree},
                               {"polynomial", std::move(terms)}});
    }
    j["witnesses"] = std::move(witnesses);
  }
  return j.dump(2) + "\n";
}

std::string oracle_to_table(const OracleRun& run, bool diagnostics) {
  std::ostringstream out;
  out << "oracle jumping numbers in (0,1): " << rational_join(run.jumping_numbers()) << "\n";
  out << "degree bound: " << run.degree_bound << "\n";
  if (diagnostics) {
    std::vector<std::string> xs;
    const std::size_t dim = run.flats.empty() ? 0 : run.flats.front().flat.ambient();
    for (std::size_t i = 0; i < dim; ++i) {
      xs.push_back("x" + std::to_string(i + 1));
    }
    for (const auto& [c, v] : run.results) {
      out << "  c = " << to_string(c) << ": ";
      if (v.witness) {
        out << "witness " << v.witness->polynomial.to_string(xs) << " (m = " << v.witness->m << ")\n";
      } else {
        out << "no witness\n";
      }
    }
  }
  return out.str();
}

}  // namespace jumpcalc
