// Tensor words: finite lists of base values with a canonical left-fold value
// ((x1 (x) x2) (x) x3) ... . FinSet/Bool tensors are strictly associative;
// Fdch only up to basis permutation, so cross-bracketing comparisons go
// through the explicit regrouping isomorphisms built here.

#pragma once

#include "enricat/base.hpp"

namespace enricat {

struct Word {
    BaseDescriptor base;
    std::vector<BaseValue> letters;

    static Word of(const BaseDescriptor& b, std::vector<BaseValue> ls) {
        return Word{b, std::move(ls)};
    }
    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
};

Word concat(const Word& a, const Word& b);
Word subword(const Word& w, std::size_t pos, std::size_t len);

// Left fold value; tensor unit for the empty word.
BaseValue word_value(const Word& w);

// Canonical iso word_value(a) (x) word_value(b) -> word_value(a ++ b).
BaseMap word_merge(const Word& a, const Word& b);

// Left fold of per-letter maps (same letter count both sides).
BaseMap word_map(const Word& src, const Word& dst, const std::vector<BaseMap>& per_letter);

// Replace w[pos..pos+len) by the target of seg_map (a map from the flat value
// of that segment to a single letter); returns the new word and the flat map.
struct SegmentResult {
    Word word;
    BaseMap map;  // word_value(w) -> word_value(result)
};
SegmentResult word_apply_segment(const Word& w, std::size_t pos, std::size_t len,
                                 const BaseMap& seg_map);

// Replace letter at pos by an arbitrary map letter -> letters' (one to one).
SegmentResult word_apply_letter(const Word& w, std::size_t pos, const BaseMap& letter_map);

}  // namespace enricat
