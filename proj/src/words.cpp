#include "enricat/words.hpp"

namespace enricat {

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

Word subword(const Word& w, std::size_t pos, std::size_t len) {
    Word out{w.base, {}};
    for (std::size_t i = 0; i < len; ++i) out.letters.push_back(w.letters[pos + i]);
    return out;
}

BaseValue word_value(const Word& w) {
    if (w.letters.empty()) return unit_value(w.base);
    BaseValue v = w.letters[0];
    for (std::size_t i = 1; i < w.letters.size(); ++i) v = tensor(v, w.letters[i]);
    return v;
}

BaseMap word_merge(const Word& a, const Word& b) {
    BaseValue va = word_value(a);
    if (b.empty()) {
        // va (x) 1 == va strictly
        return identity_map(va);
    }
    if (a.empty()) {
        return identity_map(word_value(b));  // 1 (x) vb == vb strictly
    }
    if (b.size() == 1) {
        return identity_map(tensor(va, b.letters[0]));  // already the left fold
    }
    // a (x) (b' (x) x)  --assoc^-1-->  (a (x) b') (x) x  --merge (x) id-->  flat
    Word bp = subword(b, 0, b.size() - 1);
    const BaseValue& x = b.letters.back();
    BaseMap as = assoc(va, word_value(bp), x);
    auto inv = invert(as);
    if (!inv) throw BaseError("word_merge: associator not invertible");
    BaseMap rec = word_merge(a, bp);
    return compose(tensor_map(rec, identity_map(x)), *inv);
}

BaseMap word_map(const Word& src, const Word& dst, const std::vector<BaseMap>& per_letter) {
    if (src.size() != dst.size() || per_letter.size() != src.size())
        throw BaseError("word_map: letter counts differ");
    if (src.empty()) return identity_map(unit_value(src.base));
    BaseMap m = per_letter[0];
    for (std::size_t i = 1; i < per_letter.size(); ++i) m = tensor_map(m, per_letter[i]);
    return m;
}

SegmentResult word_apply_segment(const Word& w, std::size_t pos, std::size_t len,
                                 const BaseMap& seg_map) {
    if (pos + len > w.size()) throw BaseError("word_apply_segment: out of range");
    Word left = subword(w, 0, pos);
    Word mid = subword(w, pos, len);
    Word right = subword(w, pos + len, w.size() - pos - len);
    if (!(word_value(mid) == seg_map.src)) throw BaseError("word_apply_segment: segment mismatch");
    Word out = left;
    out.letters.push_back(seg_map.dst);
    out.letters.insert(out.letters.end(), right.letters.begin(), right.letters.end());

    // flat(w) -> (flat(left) (x) flat(mid)) (x) flat(right) -> apply -> flat(out)
    BaseMap split_lm = word_merge(left, mid);  // flat(left)(x)flat(mid) -> flat(left++mid)
    auto split_lm_inv = invert(split_lm);
    Word lm = concat(left, mid);
    BaseMap split_all = word_merge(lm, right);
    auto split_all_inv = invert(split_all);
    if (!split_lm_inv || !split_all_inv) throw BaseError("word_apply_segment: merge not invertible");

    BaseMap step1 = compose(tensor_map(*split_lm_inv, identity_map(word_value(right))), *split_all_inv);
    // now at (flat(left) (x) flat(mid)) (x) flat(right)
    BaseMap applied = tensor_map(tensor_map(identity_map(word_value(left)), seg_map),
                                 identity_map(word_value(right)));
    // target: (flat(left) (x) letter) (x) flat(right); fold back
    Word left_letter = left;
    left_letter.letters.push_back(seg_map.dst);
    BaseMap fold1 = word_merge(left, Word::of(w.base, {seg_map.dst}));  // identity by convention
    BaseMap fold2 = word_merge(left_letter, right);
    BaseMap total = compose(fold2, compose(tensor_map(fold1, identity_map(word_value(right))),
                                           compose(applied, step1)));
    return SegmentResult{std::move(out), std::move(total)};
}

SegmentResult word_apply_letter(const Word& w, std::size_t pos, const BaseMap& letter_map) {
    return word_apply_segment(w, pos, 1, letter_map);
}

}  // namespace enricat
