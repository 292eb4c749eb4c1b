#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "prodint/ast.hpp"

namespace prodint {

struct cfg_edge {
  enum class kind { statement, guard };
  int from = 0;
  int to = 0;
  kind k = kind::statement;
  std::optional<stmt> st;   // atomic statement edges
  std::optional<cond> g;    // guard edges

  std::string label() const;
};

// Proof obligation attached to a node (evaluated on the state flowing into
// the array store or assert).
struct obligation_site {
  enum class kind { lower, upper, assertion };
  int node = 0;
  source_pos pos;
  kind k = kind::lower;
  cond c = cond::truth(true);

  std::string kind_str() const {
    switch (k) {
    case kind::lower:
      return "lower";
    case kind::upper:
      return "upper";
    default:
      return "assert";
    }
  }
};

struct cfg {
  int entry = 0;
  int exit = 0;
  int num_nodes = 0;
  std::vector<cfg_edge> edges;
  std::set<int> loop_heads;
  std::map<int, source_pos> node_pos; // source position that created the node
  std::vector<obligation_site> obligations;
  std::vector<std::vector<int>> out_edges; // node -> edge indexes, in order

  // Reverse post-order from the entry; ties broken by node index.
  std::vector<int> reverse_post_order() const;

  // Position-independent structural rendering, for CFG equality tests.
  std::string signature() const;
};

// Desugars for-loops, then builds the graph. Every while-loop contributes
// exactly one loop head; branch nodes carry complementary guards; every
// array store yields a lower and an upper bounds obligation at its node.
cfg build_cfg(const program &p);

} // namespace prodint
