// Copyright 2026 The divlab Authors
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

// Prints the region label of Psi_{p,q,s} on a (p, q) grid at fixed s as CSV,
// ready for any plotting tool. Usage: phase_diagram [s] [steps]

#include <cstdio>
#include <cstdlib>

#include "divlab/convexity.hpp"

int main(int argc, char** argv) {
  const double s = argc > 1 ? std::atof(argv[1]) : 1.0;
  const int steps = argc > 2 ? std::atoi(argv[2]) : 25;
  if (s == 0.0 || steps < 2) {
    std::fprintf(stderr, "usage: phase_diagram [s != 0] [steps >= 2]\n");
    return 1;
  }
  std::printf("p,q,s,label,citation\n");
  for (int i = 0; i < steps; ++i)
    for (int j = 0; j < steps; ++j) {
      const double p = -2.0 + 5.0 * i / (steps - 1), q = -2.0 + 5.0 * j / (steps - 1);
      const divlab::RegionLabel l = divlab::classify(p, q, s);
      std::printf("%s,%s,%s,%s,%s\n", divlab::format_double(p).c_str(), divlab::format_double(q).c_str(),
                  divlab::format_double(s).c_str(), divlab::to_string(l.kind), l.citation.c_str());
    }
  return 0;
}
