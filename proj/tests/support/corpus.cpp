#include "corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jumpcalc::testkit {

ArrangementInput make_arrangement(int affine_dim, const std::vector<std::vector<int>>& forms,
                                  const std::vector<int>& mults) {
  ArrangementInput a;
  a.affine_dim = affine_dim;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Hyperplane h;
    for (int x : forms[i]) h.form.emplace_back(x);
    h.mult = mults.at(i);
    a.hyperplanes.push_back(std::move(h));
  }
  validate(a);
  return a;
}

std::vector<NamedArrangement> line_corpus() {
  const std::vector<std::vector<int>> menu{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}};
  const std::vector<std::string> names{"x", "y", "x+y", "x-y", "x+2y"};
  std::vector<NamedArrangement> out;
  for (unsigned subset = 1; subset < 32; ++subset) {
    std::vector<std::vector<int>> forms;
    std::string label;
    for (unsigned i = 0; i < 5; ++i) {
      if (subset & (1U << i)) {
        forms.push_back(menu[i]);
        label += (label.empty() ? "" : ",") + names[i];
      }
    }
    std::vector<int> mults(forms.size(), 1);
    while (true) {
      std::string mlabel;
      for (int m : mults) mlabel += std::to_string(m);
      out.push_back({label + " mults " + mlabel, make_arrangement(2, forms, mults)});
      std::size_t i = 0;
      while (i < mults.size() && mults[i] == 3) mults[i++] = 1;
      if (i == mults.size()) break;
      ++mults[i];
    }
  }
  return out;
}

std::vector<NamedArrangement> plane_corpus() {
  return {
      {"pencil (x^2-y^2)(x+z)(x+2z)", make_arrangement(3, {{1, -1, 0}, {1, 1, 0}, {1, 0, 1}, {1, 0, 2}}, {1, 1, 1, 1})},
      {"pencil (x^2-y^2)(x^2-z^2)", make_arrangement(3, {{1, -1, 0}, {1, 1, 0}, {1, 0, -1}, {1, 0, 1}}, {1, 1, 1, 1})},
      {"coordinate planes 1,2,3", make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 2, 3})},
      {"x,y,z,x+y+z 2,1,1,1", make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, {2, 1, 1, 1})},
      {"x,y,x+y,z 1,1,1,2", make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}, {1, 1, 1, 2})},
      {"braid x-y,y-z,x-z", make_arrangement(3, {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}}, {1, 1, 1})},
      {"x,y,z,x+y,x+y+z", make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}}, {1, 1, 1, 1, 1})},
      {"x,y,x+y,x-y 1,2,1,1", make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}}, {1, 2, 1, 1})},
  };
}

std::vector<NamedArrangement> full_corpus() {
  auto out = line_corpus();
  for (auto& p : plane_corpus()) out.push_back(std::move(p));
  return out;
}

std::vector<NamedArrangement> sampled_corpus() {
  std::vector<NamedArrangement> out;
  const auto lines = line_corpus();
  for (std::size_t i = 0; i < lines.size(); i += 4) out.push_back(lines[i]);
  for (auto& p : plane_corpus()) out.push_back(std::move(p));
  return out;
}

ArrangementInput load_fixture(const std::string& file) {
  const std::string path = std::string(JUMPCALC_FIXTURE_DIR) + "/" + file;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_arrangement(text.str());
}

ArrangementInput with_scaled_multiplicities(ArrangementInput a, int k) {
  for (auto& h : a.hyperplanes) h.mult *= k;
  return a;
}

ArrangementInput reversed(ArrangementInput a) {
  std::reverse(a.hyperplanes.begin(), a.hyperplanes.end());
  return a;
}

}  // namespace jumpcalc::testkit
