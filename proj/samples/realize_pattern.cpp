/*
 * Copyright 2026 The cyclepat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Builds a small pattern by hand, realizes it, then shows a pattern that has no realization.

#include "cyclepat/cyclepat.hpp"

#include <iostream>

using namespace cyclepat;

int main()
{
    Digraph g;
    for (auto v : {"a", "b", "c"}) g.add_vertex(v);
    g.add_edge("ab", "a", "b");
    g.add_edge("ba", "b", "a");
    g.add_edge("bc", "b", "c");
    g.add_edge("cb", "c", "b");

    // ab+ba positive, bc+cb negative.
    std::map<CycleKey, Sign> signs;
    signs[Cycle::from_ids(g, {"ab", "ba"}).key] = Sign::Plus;
    signs[Cycle::from_ids(g, {"bc", "cb"}).key] = Sign::Minus;
    auto pat = CyclePattern::table(g, signs);

    auto res = check_realizable(pat);
    if (auto *r = std::get_if<Realization>(&res)) {
        for (EdgeIndex e = 0; e < g.num_edges(); ++e) std::cout << g.edge_id(e) << " = " << to_string(r->w[e]) << "\n";
        auto best = minimal_linf(build_cone(pat));
        std::cout << "smallest max |w(e)|: " << to_string(best.k) << "\n";
    }

    auto four = instances::four_cycle_pattern();
    auto res4 = check_realizable(four);
    if (auto *nr = std::get_if<NotRealizable>(&res4))
        std::cout << "four-cycle pattern: not realizable, witness size " << nr->witness.size()
                  << (verify_witness(four.graph(), four, nr->witness) ? " (verified)" : " (rejected)") << "\n";
    return 0;
}
