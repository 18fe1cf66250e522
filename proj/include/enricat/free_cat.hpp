// Free V-categories via the path/tensor-algebra construction, truncated at a
// word-length bound. Stabilization is certified when the next stage would add
// only initial (or in-window zero) path values; otherwise the result is a
// flagged partial record of the free category.

#pragma once

#include <optional>

#include "enricat/vcat.hpp"

namespace enricat {

struct FreePath {
    std::vector<std::size_t> nodes;  // x = nodes[0], ..., y = nodes.back()
    std::size_t length() const { return nodes.size() - 1; }
};

struct FreeCategoryResult {
    VGraph input;
    int word_bound = 0;
    bool stabilized = false;
    // filtration of underlying graphs by word length 0..word_bound
    std::vector<VGraph> stage_graphs;
    // per pair (x,y): paths of length <= bound, ordered by length then nodes
    std::vector<std::vector<FreePath>> paths;
    std::vector<Coproduct> hom_cp;  // per pair, coproduct over the path values
    // unit of the adjunction (length-1 legs); absent when word_bound == 0
    std::optional<GraphMap> unit;
    // present when composition closes without dropping non-initial words
    // (always for Fdch, where dropping means the window quotient)
    std::optional<VCategory> category;
};

FreeCategoryResult free_category(const VGraph& m, int word_bound);

// Word letters of a path, composition order (last edge first).
Word path_word(const VGraph& m, const FreePath& p);

// Adjunction converters on stabilized results:
// restrict an identity-on-objects functor T_S(M) -> H to generators,
GraphMap adjunction_restrict(const FreeCategoryResult& t, const VCategory& h, const VFunctor& phi);
// and extend a graph map M -> UH to the free category.
VFunctor adjunction_extend(const FreeCategoryResult& t, const VCategory& h, const GraphMap& psi);

}  // namespace enricat
