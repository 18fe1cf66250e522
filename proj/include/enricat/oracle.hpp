// Independent oracle for push-outs along free attachments over FinSet and
// Bool: alternating words (category elements interleaved with attached
// generators) closed under substitution along gbar and collapse through the
// composition table, with union-find on the word set. Deliberately a separate
// implementation path from the stage engine.

#pragma once

#include <map>

#include "enricat/engine.hpp"

namespace enricat {

// Alternating word: h_k * v_k * h_{k-1} * ... * v_1 * h_0 read right to left,
// h_i elements of H (by hom element index), v_i elements of V.
struct OracleWord {
    // letters left to right: elem[0] is the outermost (last applied) H element
    // h_k; gens[i] sits between elem[i] and elem[i+1].
    std::vector<std::size_t> elems;  // size k+1
    std::vector<std::size_t> gens;   // size k
    std::size_t src = 0, dst = 0;    // object indices

    bool operator<(const OracleWord& o) const {
        return std::tie(src, dst, elems, gens) < std::tie(o.src, o.dst, o.elems, o.gens);
    }
    bool operator==(const OracleWord& o) const = default;
};

struct OracleCategory {
    std::vector<std::string> objects;
    std::vector<std::size_t> hom_count;                    // per pair
    std::vector<std::vector<OracleWord>> reps;             // class representatives per pair
    std::vector<std::vector<std::size_t>> comp_table;      // as in Pi0Category
    std::vector<std::size_t> id_elem;
    std::vector<std::vector<std::size_t>> h_image;         // per pair: H element -> class
    std::vector<std::size_t> v_image;                      // V element -> class in (a,b)

    std::size_t n() const { return objects.size(); }
    std::size_t count(std::size_t x, std::size_t y) const { return hom_count[x * n() + y]; }
};

// Enumerates alternating words with at most max_gens generator letters.
// f_table : U -> V and gbar_table : U -> H(a,b) drive the identifications.
OracleCategory oracle_pushout_finset(const VCategory& h, std::size_t a, std::size_t b,
                                     std::size_t v_card, const std::vector<std::size_t>& f_table,
                                     const std::vector<std::size_t>& gbar_table, int max_gens);

// Bool: reachability closure over the H edges plus the attached edge a -> b
// (present when v is true).
VCategory oracle_pushout_bool(const VCategory& h, std::size_t a, std::size_t b, bool v);

// Compare a stabilized engine trace with the oracle via the canonical functor
// (interpret each oracle word through phi and g'). Exact: bijective on every
// hom and compatible with composition, identities, phi and g'.
PropertyReport oracle_compare(const PushoutTrace& tr);

}  // namespace enricat
