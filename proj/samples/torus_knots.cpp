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

// Torsion exponents and genera of the torus knots T(p,q), 2 <= p < q <= 9.

#include <cstdio>

#include "l2alex/l2alex.hpp"

int main() {
  using namespace l2alex;
  std::printf("%-8s %-10s %s\n", "knot", "exponent", "genus");
  for (Int p = 2; p <= 9; ++p)
    for (Int q = p + 1; q <= 9; ++q) {
      if (gcd_int(p, q) != 1) continue;
      TorsionResult r = torsion(build_link(torus_from_mn(p, q)));
      Int e = knot_invariant_exponent(r.torsion);
      char name[32];
      std::snprintf(name, sizeof name, "T(%lld,%lld)", static_cast<long long>(p),
                    static_cast<long long>(q));
      std::printf("%-8s %-10s %lld\n", name, r.torsion.exponent().str().c_str(),
                  static_cast<long long>(e / 2));
    }
}
