// Copyright 2026 The l2alex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seminorm and dual unit ball of a two- or three-component link.

#include <iostream>
#include <string>

#include "l2alex/l2alex.hpp"

int main(int argc, char** argv) {
  using namespace l2alex;
  std::string text = argc > 1 ? argv[1] : "torus_in_thick(1,2,1)";
  try {
    TorsionClass t = torsion(build_link(parse(text).link)).torsion;
    if (t.is_zero()) {
      std::cout << text << ": torsion is zero\n";
      return 0;
    }
    const ExponentExpr& e = t.exponent();
    std::cout << "E(n) = " << e.str() << "\n";
    SeminormReport r = seminorm_report(e);
    std::cout << "seminorm: " << (r.is_seminorm ? "yes" : "no") << ", kernel rank "
              << r.degenerate_directions.size() << "\n";
    if (!r.is_seminorm) return 0;
    Zonotope z = dual_ball(e);
    std::cout << "dual ball vertices:\n";
    for (const auto& v : z.vertices) {
      std::cout << "  (";
      for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i];
      std::cout << ")\n";
    }
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return 1;
  }
}
