#pragma once

#include <optional>
#include <string>

#include "idb/graph.hpp"

namespace idb {

enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    friendship,
    gen_friendship,
    book,
    tri_chain,
    para_square_chain,
    ortho_square_chain,
};

// Parameters: every family takes n; complete_bipartite also takes m,
// gen_friendship also takes q (cycle length, >= 3).
struct FamilySpec {
    Family name = Family::path;
    int n = 0;
    int m = 0;
    int q = 0;
};

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);

// Canonical labelings (published so edge witnesses are reproducible):
//   path/cycle: consecutive 0..n-1, cycle closes n-1 -> 0
//   star K_{1,n}: hub 0, leaves 1..n
//   friendship F_n: hub 0, triangle i on {1+2i, 2+2i}
//   gen_friendship F_{q,n}: hub 0, cycle i on 1+(q-1)i .. (q-1)(i+1)
//   book B_n: spine {0,1}; page i has u_i = 2i, w_i = 2i+1 (i = 1..n)
//   tri_chain T_n: cut vertices at even labels, apex of triangle i at 2i-1
//   para/ortho square chains: cut vertices at labels divisible by 3,
//     square i adds 3i-2 and 3i-1; ortho squares keep their two cut
//     vertices adjacent, para squares keep them opposite
Graph make_family(const FamilySpec& spec); // ParamOutOfRangeError

} // namespace idb
