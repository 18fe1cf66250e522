#include "enricat/pushout_product.hpp"

#include <numeric>

namespace enricat {

namespace {

BaseMap inverted(const BaseMap& f, const char* what) {
    auto inv = invert(f);
    if (!inv) throw BaseError(std::string("not invertible: ") + what);
    return *inv;
}

}  // namespace

PushoutProduct pushout_product(std::vector<PPFactor> factors) {
    if (factors.empty()) throw BaseError("pushout_product: empty factor list");
    PushoutProduct pp;
    pp.factors = std::move(factors);
    const std::size_t n = pp.factors.size();

    // step 1
    PushoutProduct::Step s1;
    s1.q = word_value(pp.factors[0].src);
    s1.m = pp.factors[0].map;
    s1.tpref = pp.factors[0].tgt;
    pp.steps.push_back(s1);
    pp.corners.push_back(identity_map(s1.q));
    pp.corner_words.push_back(pp.factors[0].src);

    for (std::size_t k = 2; k <= n; ++k) {
        const PPFactor& fk = pp.factors[k - 1];
        const PushoutProduct::Step& prev = pp.steps[k - 2];
        BaseValue flat_sk = word_value(fk.src);
        BaseValue flat_tk = word_value(fk.tgt);
        BaseValue A = tensor(prev.q, flat_sk);
        // f : A -> flat(T_{k-1} ++ s_k)
        Word Ts = concat(prev.tpref, fk.src);
        BaseMap f = compose(word_merge(prev.tpref, fk.src),
                            tensor_map(prev.m, identity_map(flat_sk)));
        // g : A -> Q_{k-1} (x) flat(t_k)
        BaseMap g = tensor_map(identity_map(prev.q), fk.map);
        PushoutProduct::Step st;
        st.po = pushout(f, g);
        st.q = st.po.obj;
        st.tpref = concat(prev.tpref, fk.tgt);
        // m_k out of the pushout
        BaseMap hb = compose(word_merge(prev.tpref, fk.tgt),
                             compose(tensor_map(identity_map(word_value(prev.tpref)), fk.map),
                                     inverted(word_merge(prev.tpref, fk.src), "merge T,s")));
        BaseMap hc = compose(word_merge(prev.tpref, fk.tgt),
                             tensor_map(prev.m, identity_map(flat_tk)));
        st.m = pushout_induced(st.po, hb, hc);
        // corners
        std::vector<BaseMap> new_corners;
        std::vector<Word> new_words;
        for (std::size_t i = 0; i < pp.corners.size(); ++i) {
            Word wi = concat(pp.corner_words[i], fk.tgt);
            BaseMap kappa = compose(
                st.po.from_c,
                compose(tensor_map(pp.corners[i], identity_map(flat_tk)),
                        inverted(word_merge(pp.corner_words[i], fk.tgt), "merge corner,t")));
            new_corners.push_back(std::move(kappa));
            new_words.push_back(std::move(wi));
        }
        new_corners.push_back(st.po.from_b);
        new_words.push_back(Ts);
        pp.corners = std::move(new_corners);
        pp.corner_words = std::move(new_words);
        pp.steps.push_back(std::move(st));
    }
    pp.source = pp.steps.back().q;
    pp.target = word_value(pp.steps.back().tpref);
    pp.map = pp.steps.back().m;

    // map . kappa_i must be id (x) f_i (x) id on the flat corner value
    for (std::size_t i = 0; i < n; ++i) {
        Word pre, post;
        pre.base = pp.factors[0].src.base;
        post.base = pre.base;
        for (std::size_t j = 0; j < i; ++j) pre = concat(pre, pp.factors[j].tgt);
        for (std::size_t j = i + 1; j < n; ++j) post = concat(post, pp.factors[j].tgt);
        // flat(pre ++ s_i ++ post) -> flat(pre ++ t_i ++ post)
        BaseMap seg = compose(
            word_merge(concat(pre, pp.factors[i].tgt), post),
            compose(
                tensor_map(compose(word_merge(pre, pp.factors[i].tgt),
                                   tensor_map(identity_map(word_value(pre)), pp.factors[i].map)),
                           identity_map(word_value(post))),
                compose(tensor_map(inverted(word_merge(pre, pp.factors[i].src), "corner split"),
                                   identity_map(word_value(post))),
                        inverted(word_merge(concat(pre, pp.factors[i].src), post), "corner split2"))));
        if (!(compose(pp.map, pp.corners[i]) == seg))
            throw BaseError("pushout_product: corner identity violated");
    }
    return pp;
}

namespace {

// Recursive worker: map out of (flat(L) (x) Q_k) (x) flat(R).
BaseMap induced_rec(const PushoutProduct& pp, std::size_t k, const Word& L, const Word& R,
                    const std::vector<BaseMap>& corner_maps, const BaseValue& z) {
    BaseValue lv = word_value(L);
    BaseValue rv = word_value(R);
    if (k == 1) {
        const Word& s1 = pp.factors[0].src;
        BaseMap regroup = compose(word_merge(concat(L, s1), R),
                                  tensor_map(word_merge(L, s1), identity_map(rv)));
        return compose(corner_maps[0], regroup);
    }
    const PushoutProduct::Step& st = pp.steps[k - 1];
    const PushoutProduct::Step& prev = pp.steps[k - 2];
    const PPFactor& fk = pp.factors[k - 1];
    BaseValue flat_sk = word_value(fk.src);
    BaseValue flat_tk = word_value(fk.tgt);

    auto ctx = [&](const BaseMap& m) {  // (id_L (x) m) (x) id_R
        return tensor_map(tensor_map(identity_map(lv), m), identity_map(rv));
    };
    // Rebuild the defining span of Q_k in context; tensoring preserves the
    // push-out, witnessed by an explicit comparison isomorphism.
    BaseMap f = compose(word_merge(prev.tpref, fk.src),
                        tensor_map(prev.m, identity_map(flat_sk)));
    BaseMap g = tensor_map(identity_map(prev.q), fk.map);
    Pushout po2 = pushout(ctx(f), ctx(g));
    BaseMap comparison =
        pushout_induced(po2, ctx(st.po.from_b), ctx(st.po.from_c));  // po2.obj -> (L(x)Q_k)(x)R
    BaseMap comp_inv = inverted(comparison, "pp_induced comparison");

    // u on (L (x) flat(T_{k-1} ++ s_k)) (x) R : corner k in outer context.
    Word tsw = concat(prev.tpref, fk.src);
    BaseMap u = compose(corner_maps[k - 1],
                        compose(word_merge(concat(L, tsw), R),
                                tensor_map(word_merge(L, tsw), identity_map(rv))));
    // v on (L (x) (Q_{k-1} (x) flat(t_k))) (x) R : recurse with R' = t_k ++ R.
    Word Rp = concat(fk.tgt, R);
    std::vector<BaseMap> sub(corner_maps.begin(), corner_maps.begin() + static_cast<long>(k - 1));
    BaseMap w = induced_rec(pp, k - 1, L, Rp, sub, z);
    // regroup (L (x) (Q (x) tk)) (x) R -> ((L (x) Q) (x) flat(t_k ++ R))
    BaseMap a1 = inverted(assoc(lv, prev.q, flat_tk), "assoc L,Q,tk");  // L(x)(Q(x)tk) -> (L(x)Q)(x)tk
    BaseValue lq = tensor(lv, prev.q);
    BaseMap a2 = assoc(lq, flat_tk, rv);  // ((L(x)Q)(x)tk)(x)R -> (L(x)Q)(x)(tk(x)R)
    BaseMap mg = tensor_map(identity_map(lq), word_merge(fk.tgt, R));
    BaseMap regroup = compose(mg, compose(a2, tensor_map(a1, identity_map(rv))));
    BaseMap v = compose(w, regroup);

    BaseMap out_of_po2 = pushout_induced(po2, u, v);
    return compose(out_of_po2, comp_inv);
}

}  // namespace

BaseMap pp_induced(const PushoutProduct& pp, const Word& L, const Word& R,
                   const std::vector<BaseMap>& corner_maps, const BaseValue& z) {
    if (corner_maps.size() != pp.factors.size()) throw BaseError("pp_induced: corner count");
    for (std::size_t i = 0; i < corner_maps.size(); ++i) {
        if (!(corner_maps[i].dst == z)) throw BaseError("pp_induced: corner target mismatch");
        Word full = concat(concat(L, pp.corner_words[i]), R);
        if (!(corner_maps[i].src == word_value(full)))
            throw BaseError("pp_induced: corner source mismatch");
    }
    return induced_rec(pp, pp.factors.size(), L, R, corner_maps, z);
}

BinaryPP binary_pp(const BaseMap& f, const BaseMap& g) {
    BinaryPP out;
    BaseMap span_b = tensor_map(identity_map(f.src), g);  // src_f (x) src_g -> src_f (x) tgt_g
    BaseMap span_c = tensor_map(f, identity_map(g.src));  // src_f (x) src_g -> tgt_f (x) src_g
    out.po = pushout(span_b, span_c);
    out.source = out.po.obj;
    out.corner_fsrc = out.po.from_b;
    out.corner_gsrc = out.po.from_c;
    BaseMap hb = tensor_map(f, identity_map(g.dst));
    BaseMap hc = tensor_map(identity_map(f.dst), g);
    out.map = pushout_induced(out.po, hb, hc);
    return out;
}

bool verify_base_pushout_square(const BaseMap& f, const BaseMap& g, const BaseMap& b2d,
                                const BaseMap& c2d) {
    if (!(f.src == g.src) || !(b2d.src == f.dst) || !(c2d.src == g.dst) || !(b2d.dst == c2d.dst))
        return false;
    if (!(compose(b2d, f) == compose(c2d, g))) return false;
    switch (f.src.base.kind) {
        case BaseKind::Bool:
        case BaseKind::FinSet: {
            // Element-level: d must be (b + c) / (f(a) ~ g(a)) via (b2d, c2d).
            // Decided with a self-contained union-find.
            std::size_t nb = f.dst.base.kind == BaseKind::Bool ? (f.dst.truth ? 1 : 0) : f.dst.card;
            std::size_t nc = g.dst.base.kind == BaseKind::Bool ? (g.dst.truth ? 1 : 0) : g.dst.card;
            std::size_t na = f.src.base.kind == BaseKind::Bool ? (f.src.truth ? 1 : 0) : f.src.card;
            std::size_t nd = b2d.dst.base.kind == BaseKind::Bool ? (b2d.dst.truth ? 1 : 0) : b2d.dst.card;
            if (f.src.base.kind == BaseKind::Bool) {
                // thin case: classes collapse to a single point when inhabited
                bool d_expect = f.dst.truth || g.dst.truth;
                return b2d.dst.truth == d_expect;
            }
            std::vector<std::size_t> parent(nb + nc);
            std::iota(parent.begin(), parent.end(), std::size_t{0});
            auto find = [&](std::size_t x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            auto unite = [&](std::size_t x, std::size_t y) {
                x = find(x);
                y = find(y);
                if (x != y) parent[std::max(x, y)] = std::min(x, y);
            };
            for (std::size_t a = 0; a < na; ++a) unite(f.table[a], nb + g.table[a]);
            auto to_d = [&](std::size_t x) { return x < nb ? b2d.table[x] : c2d.table[x - nb]; };
            // well-defined on classes
            for (std::size_t x = 0; x < nb + nc; ++x)
                if (to_d(x) != to_d(find(x))) return false;
            // bijective on classes
            std::vector<int> hit(nd, 0);
            std::size_t classes = 0;
            for (std::size_t x = 0; x < nb + nc; ++x)
                if (find(x) == x) {
                    ++classes;
                    if (hit[to_d(x)]++) return false;  // not injective
                }
            if (classes != nd) return false;  // not surjective
            return true;
        }
        case BaseKind::Fdch: {
            Pushout po = pushout(f, g);
            BaseMap cmp = pushout_induced(po, b2d, c2d);
            return invert(cmp).has_value();
        }
    }
    return false;
}

}  // namespace enricat
