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

// Builds an iterated cable of the trefoil, then prints its derivation and
// the same class obtained by gluing Seifert pieces.

#include <iostream>
#include <string>

#include "l2alex/l2alex.hpp"

namespace {

void show(const l2alex::TraceStep& s, int depth) {
  std::cout << std::string(2 * depth, ' ') << to_string(s.rule) << "  " << s.subject << "  ->  "
            << s.result.str() << "\n";
  for (const auto& c : s.children) show(c, depth + 1);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace l2alex;
  std::string text = argc > 1 ? argv[1] : "cable(cable(torus(2,3),1,1,2,3),1,2,3,1)";
  try {
    LinkObject obj = build_link(parse(text).link);
    TorsionResult direct = torsion(obj);
    TorsionResult glued = torsion_via_gluing(obj);
    show(direct.trace, 0);
    std::cout << "\ngluing route:\n";
    show(glued.trace, 0);
    std::cout << "\nroutes agree: " << (direct.torsion == glued.torsion ? "yes" : "NO") << "\n";
    for (const auto& w : direct.warnings) std::cout << "warning: " << w << "\n";
    return direct.torsion == glued.torsion ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return 1;
  }
}
