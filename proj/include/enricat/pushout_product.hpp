// n-ary push-out products over the punctured cube, computed by iterated
// binary push-outs in a fixed factor order. Sources, targets and corner
// injections are kept in canonical left-fold form; the corner cocone recursion
// (maps out of the punctured-cube colimit) is exposed for the stage engine.

#pragma once

#include "enricat/words.hpp"

namespace enricat {

// One (.)-factor: a map between flat word values. Nested products enter as a
// factor whose src word is the single opaque colimit letter.
struct PPFactor {
    Word src;
    Word tgt;
    BaseMap map;  // word_value(src) -> word_value(tgt)
};

struct PushoutProduct {
    std::vector<PPFactor> factors;
    BaseValue source;  // colimit over the punctured cube
    BaseValue target;  // word_value(t_1 ++ ... ++ t_n)
    BaseMap map;       // f_1 (.) ... (.) f_n
    // kappa_i : word_value(t_1..s_i..t_n) -> source, with map . kappa_i the
    // evident id (x) f_i (x) id.
    std::vector<BaseMap> corners;
    std::vector<Word> corner_words;

    struct Step {
        Pushout po;   // Q_k = po.obj glued from Q_{k-1} (x) s_k
        BaseMap m;    // Q_k -> word_value(t_1..t_k)
        Word tpref;   // t_1..t_k
        BaseValue q;  // Q_k
    };
    std::vector<Step> steps;  // k = 1..n (step 1 is synthetic: q = flat(s_1))
};

PushoutProduct pushout_product(std::vector<PPFactor> factors);

// Map out of (flat(L) (x) source) (x) flat(R) induced by the corner cocone
// p_i : word_value(L ++ t_1..s_i..t_n ++ R) -> z. For empty L and R this is
// the plain universal property of the punctured-cube colimit. Commutation of
// the cocone is checked at every gluing step.
BaseMap pp_induced(const PushoutProduct& pp, const Word& L, const Word& R,
                   const std::vector<BaseMap>& corner_maps, const BaseValue& z);

// f (.) g for plain maps, with the explicit corner legs.
struct BinaryPP {
    Pushout po;
    BaseValue source;
    BaseMap map;           // source -> tgt_f (x) tgt_g
    BaseMap corner_fsrc;   // src_f (x) tgt_g -> source
    BaseMap corner_gsrc;   // tgt_f (x) src_g -> source
};
BinaryPP binary_pp(const BaseMap& f, const BaseMap& g);

// Does (b2d, c2d) exhibit d as the push-out of the span (f: a->b, g: a->c)?
// FinSet/Bool: decided by an element-level quotient comparison; Fdch: the
// canonical comparison map from the computed push-out must be an isomorphism.
bool verify_base_pushout_square(const BaseMap& f, const BaseMap& g, const BaseMap& b2d,
                                const BaseMap& c2d);

}  // namespace enricat
