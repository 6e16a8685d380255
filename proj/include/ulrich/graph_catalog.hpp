#pragma once

#include <string>
#include <vector>

#include "ulrich/dualgraph.hpp"

namespace ulrich {

/// Graph tags:
///   `A:l,m,n`, `B:m,n`, `C:m,n`, `D:n`, `F:n`, `H:n`, `G1`, `G2`, `G3`
///       rational triple points;
///   `G<i>:b` for 1 <= i <= 15, the star-shaped quotient graphs Gamma_i(b);
///   `cyclic:b1,...,bn` a path with the given self-intersections -b_k;
///   `T22:b,b1,...,bn` a path -b_n ... -b_1 ending in a -b vertex that
///       carries two -2 leaves;
///   `RDP-A:n`, `RDP-D:n`, `RDP-E6`, `RDP-E7`, `RDP-E8`;
///   `EX-5.3` the graph Gamma_10(2).
/// Vertices run left to right along the main chain, each branch right after
/// the vertex it hangs from. A unique -3 vertex of a triple point and the
/// centre of a star are called E0, the marked vertex of Gamma_i(b) is F and
/// the remaining ones are E1, E2, ... in order.
DualGraph graph_catalog(const std::string& tag);

/// True when the tag names a graph from the triple point list.
bool is_rtp_graph_tag(const std::string& tag);

/// Every quotient graph of the sweep: all Gamma_i(b) with 2 <= b <= b_max,
/// cyclic paths of length <= cyclic_len with weights in [2, b_max], and
/// type (2,2,n) graphs with chain length <= t22_len and weights in [2, b_max].
/// Tags that fail negative definiteness are left out.
std::vector<std::string> quotient_sweep_tags(int b_max, int cyclic_len, int t22_len);

}  // namespace ulrich
