#include "enricat/engine.hpp"

#include <algorithm>

namespace enricat {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw BaseError(msg);
}

constexpr int kInf = 1000000;  // beyond any computed stage but addable

int min_degree(const BaseValue& v) {
    if (v.is_initial()) return kInf;
    for (int n = v.base.deg_lo; n <= v.base.deg_hi; ++n)
        if (v.dim_at(n) > 0) return n;
    return kInf;
}

}  // namespace

int stage_trivial_from(const BaseDescriptor& base, const BaseValue& hby, const BaseValue& hxa,
                       const BaseValue& hba, const BaseValue& u, const BaseValue& v) {
    if (hby.is_initial() || hxa.is_initial() || (u.is_initial() && v.is_initial())) return 0;
    int best = INT_MAX;
    if (hba.is_initial()) best = 1;
    if (base.kind == BaseKind::Bool) best = std::min(best, 2);
    if (base.kind == BaseKind::Fdch) {
        // L(t) lower-bounds the min degree of every punctured-cube vertex at
        // stage t; once L(t) > hi for all later t the stages vanish in-window.
        long mby = min_degree(hby), mxa = min_degree(hxa), mba = min_degree(hba);
        long mf = std::min(min_degree(u), min_degree(v));
        long slope = mba + mf;
        if (slope >= 1) {
            for (int t = 1; t < 64; ++t) {
                long L = mby + mxa + static_cast<long>(t - 1) * mba + static_cast<long>(t) * mf;
                if (L > base.deg_hi) {
                    best = std::min(best, t - 1);
                    break;
                }
            }
        }
    }
    return best;
}

Word stage_word(const VCategory& h, std::size_t a, std::size_t b, const BaseValue& v,
                std::size_t x, std::size_t y, int t) {
    Word w{h.graph.base, {}};
    w.letters.push_back(h.hom(b, y));
    for (int i = 1; i <= t; ++i) {
        w.letters.push_back(v);
        if (i < t)
            w.letters.push_back(h.hom(b, a));
        else
            w.letters.push_back(h.hom(x, a));
    }
    return w;
}

BaseValue PushoutTrace::stage_value(std::size_t x, std::size_t y, int t) const {
    const PairTrace& p = pair(x, y);
    int idx = std::min<long>(t, static_cast<long>(p.stages.size()) - 1);
    return p.stages[static_cast<std::size_t>(idx)];
}

BaseMap PushoutTrace::stage_bonding(std::size_t x, std::size_t y, int t) const {
    const PairTrace& p = pair(x, y);
    if (t >= 1 && t <= static_cast<int>(p.squares.size())) return p.squares[t - 1].bonding;
    require(t > p.trivial_from, "stage_bonding: stage not computed and not certified trivial");
    return identity_map(stage_value(x, y, t));
}

namespace {

struct EngineCtx {
    const VCategory& h;
    std::size_t a, b;
    const BaseMap& f;
    const BaseMap& gbar;
    int stage_bound;
    std::size_t n;
};

// Corner map p_i of stage t for pair (x, y): substitute the i-th V by U, push
// it into H(a,b) along gbar, collapse with both neighbours by composition in
// H, then apply the previous attachment (identity into K_0 when t == 1).
BaseMap stage_corner_map(const EngineCtx& ec, std::size_t x, std::size_t y, int t, int i,
                         const Word& corner_word, const PairTrace& pt) {
    std::size_t slot = static_cast<std::size_t>(2 * i - 1);
    SegmentResult s1 = word_apply_letter(corner_word, slot, ec.gbar);
    // right neighbour H(v, a): v = x for the last slot, else b
    std::size_t v = (i == t) ? x : ec.b;
    SegmentResult s2 = word_apply_segment(s1.word, slot, 2, ec.h.comp_at(v, ec.a, ec.b));
    // left neighbour H(b, w): w = y for the first slot, else a
    std::size_t w = (i == 1) ? y : ec.a;
    SegmentResult s3 = word_apply_segment(s2.word, slot - 1, 2, ec.h.comp_at(v, ec.b, w));
    BaseMap composite = compose(s3.map, compose(s2.map, s1.map));
    if (t == 1) {
        require(composite.dst == pt.stages[0], "stage_corner_map: t=1 target mismatch");
        return composite;
    }
    const StageSquare& prev = pt.squares[static_cast<std::size_t>(t - 2)];
    require(composite.dst == word_value(prev.tgt_word), "stage_corner_map: word mismatch");
    return compose(prev.attach, composite);
}

std::vector<PPFactor> stage_factors(const EngineCtx& ec, std::size_t x, std::size_t y, int t) {
    const BaseDescriptor& base = ec.h.graph.base;
    const BaseValue& U = ec.f.src;
    const BaseValue& V = ec.f.dst;
    std::vector<PPFactor> fs;
    if (t == 1) {
        Word s{base, {ec.h.hom(ec.b, y), U, ec.h.hom(x, ec.a)}};
        Word tg{base, {ec.h.hom(ec.b, y), V, ec.h.hom(x, ec.a)}};
        BaseMap m = tensor_map(tensor_map(identity_map(ec.h.hom(ec.b, y)), ec.f),
                               identity_map(ec.h.hom(x, ec.a)));
        fs.push_back(PPFactor{s, tg, m});
        return fs;
    }
    {
        Word s{base, {ec.h.hom(ec.b, y), U, ec.h.hom(ec.b, ec.a)}};
        Word tg{base, {ec.h.hom(ec.b, y), V, ec.h.hom(ec.b, ec.a)}};
        BaseMap m = tensor_map(tensor_map(identity_map(ec.h.hom(ec.b, y)), ec.f),
                               identity_map(ec.h.hom(ec.b, ec.a)));
        fs.push_back(PPFactor{s, tg, m});
    }
    for (int i = 2; i < t; ++i) {
        Word s{base, {U, ec.h.hom(ec.b, ec.a)}};
        Word tg{base, {V, ec.h.hom(ec.b, ec.a)}};
        fs.push_back(PPFactor{s, tg, tensor_map(ec.f, identity_map(ec.h.hom(ec.b, ec.a)))});
    }
    {
        Word s{base, {U, ec.h.hom(x, ec.a)}};
        Word tg{base, {V, ec.h.hom(x, ec.a)}};
        fs.push_back(PPFactor{s, tg, tensor_map(ec.f, identity_map(ec.h.hom(x, ec.a)))});
    }
    return fs;
}

PairTrace compute_pair(const EngineCtx& ec, std::size_t x, std::size_t y, int depth) {
    PairTrace pt;
    pt.stages.push_back(ec.h.hom(x, y));
    pt.trivial_from = stage_trivial_from(ec.h.graph.base, ec.h.hom(ec.b, y), ec.h.hom(x, ec.a),
                                         ec.h.hom(ec.b, ec.a), ec.f.src, ec.f.dst);
    int upto = std::min(depth, pt.trivial_from == INT_MAX ? depth : pt.trivial_from);
    for (int t = 1; t <= upto; ++t) {
        StageSquare sq;
        sq.tgt_word = stage_word(ec.h, ec.a, ec.b, ec.f.dst, x, y, t);
        sq.pp = pushout_product(stage_factors(ec, x, y, t));
        std::vector<BaseMap> corner_maps;
        for (int i = 1; i <= t; ++i)
            corner_maps.push_back(
                stage_corner_map(ec, x, y, t, i, sq.pp.corner_words[static_cast<std::size_t>(i - 1)], pt));
        Word empty{ec.h.graph.base, {}};
        sq.psi = pp_induced(sq.pp, empty, empty, corner_maps, pt.stages.back());
        sq.po = pushout(sq.psi, sq.pp.map);
        sq.bonding = sq.po.from_b;
        sq.attach = sq.po.from_c;
        pt.stages.push_back(sq.po.obj);
        pt.squares.push_back(std::move(sq));
    }
    pt.stabilized = pt.trivial_from <= depth;
    pt.result_stage = std::min(depth, pt.trivial_from == INT_MAX ? depth : pt.trivial_from);
    pt.result_stage = std::min<int>(pt.result_stage, static_cast<int>(pt.stages.size()) - 1);
    return pt;
}

// Attachment map flat(stage word s+t) -> K(x,z)_{target} when the stage might
// exceed the computed range; certified-trivial stages have initial (or Bool
// subsumed) words.

// c_{s,t} for a triple, given all lower ladder entries.
BaseMap ladder_entry(const EngineCtx& ec, const PushoutTrace& tr, std::size_t x, std::size_t y,
                     std::size_t z, int s, int t,
                     const std::vector<std::vector<std::optional<BaseMap>>>& lad) {
    const PairTrace& pyz = tr.pair(y, z);
    const PairTrace& pxy = tr.pair(x, y);
    if (s == 0 && t == 0) return ec.h.comp_at(x, y, z);
    int tgt_stage = std::min<long>(s + t, tr.pair(x, z).result_stage);
    BaseValue tgt = tr.stage_value(x, z, s + t);

    // junction collapse flat(word_s ++ word_t) -> flat(word_{s+t}), then attach
    auto wing_v = [&](const Word& left, const Word& right) -> BaseMap {
        Word joined = concat(left, right);
        std::size_t pos = left.size() - 1;
        std::size_t vsrc, vmid, vtgt;
        if (s == 0 && t > 0) {
            vsrc = ec.b; vmid = y; vtgt = z;  // H(y,z) (x) H(b,y) -> H(b,z)
        } else if (t == 0 && s > 0) {
            vsrc = x; vmid = y; vtgt = ec.a;  // H(y,a) (x) H(x,y) -> H(x,a)
        } else {
            vsrc = ec.b; vmid = y; vtgt = ec.a;  // H(y,a) (x) H(b,y) -> H(b,a)
        }
        SegmentResult seg = word_apply_segment(joined, pos, 2, ec.h.comp_at(vsrc, vmid, vtgt));
        BaseMap att = trace_attach(tr, x, z, s + t);
        require(att.src == word_value(seg.word), "ladder wing: word mismatch");
        // domain is flat(left) (x) flat(right); regroup to the joined flat
        return compose(att, compose(seg.map, word_merge(left, right)));
    };

    if (s == 0 || t == 0) {
        // one-sided: tensor the other pair's stage square by the fixed hom
        bool left_fixed = (s == 0);
        const PairTrace& pvar = left_fixed ? pxy : pyz;
        int st = left_fixed ? t : s;
        const StageSquare& sq = pvar.squares[static_cast<std::size_t>(st - 1)];
        BaseValue fixed = left_fixed ? ec.h.hom(y, z) : ec.h.hom(x, y);
        auto ctx = [&](const BaseMap& m) {
            return left_fixed ? tensor_map(identity_map(fixed), m)
                              : tensor_map(m, identity_map(fixed));
        };
        // recompute the span in context
        Pushout po2 = pushout(ctx(sq.psi), ctx(sq.pp.map));
        BaseMap cmp = pushout_induced(po2, ctx(sq.bonding), ctx(sq.attach));
        auto cmp_inv = invert(cmp);
        require(cmp_inv.has_value(), "ladder: tensored stage comparison not invertible");
        // wing on fixed (x) K_{st-1}: previous ladder entry then bonding
        const std::optional<BaseMap>& prev =
            left_fixed ? lad[0][static_cast<std::size_t>(t - 1)] : lad[static_cast<std::size_t>(s - 1)][0];
        require(prev.has_value(), "ladder: missing lower entry");
        int prev_tgt = std::min<long>(s + t - 1, tr.pair(x, z).result_stage);
        BaseMap u = compose(trace_bondings(tr, x, z, prev_tgt, tgt_stage), *prev);
        // wing on fixed (x) flat(word_st)
        Word fixed_word{ec.h.graph.base, {fixed}};
        BaseMap v = left_fixed ? wing_v(fixed_word, sq.tgt_word) : wing_v(sq.tgt_word, fixed_word);
        BaseMap out = pushout_induced(po2, u, v);
        return compose(out, *cmp_inv);
    }

    // s, t >= 1: Lemma 5.2 presentation of K(y,z)_s (x) K(x,y)_t
    const StageSquare& sqs = pyz.squares[static_cast<std::size_t>(s - 1)];
    const StageSquare& sqt = pxy.squares[static_cast<std::size_t>(t - 1)];
    // W = K_{s-1} (x) K_t  u_{K_{s-1} (x) K_{t-1}}  K_s (x) K_{t-1}
    BaseValue ks1 = pyz.stages[static_cast<std::size_t>(s - 1)];
    BaseValue kt1 = pxy.stages[static_cast<std::size_t>(t - 1)];
    BaseValue ks = pyz.stages[static_cast<std::size_t>(s)];
    BaseValue kt = pxy.stages[static_cast<std::size_t>(t)];
    Pushout W = pushout(tensor_map(identity_map(ks1), sqt.bonding),
                        tensor_map(sqs.bonding, identity_map(kt1)));
    // source of gamma_s (.) gamma_t
    BinaryPP gg = binary_pp(sqs.pp.map, sqt.pp.map);
    // left vertical: source -> W
    BaseMap lv = pushout_induced(
        gg.po, compose(W.from_b, tensor_map(sqs.psi, sqt.attach)),
        compose(W.from_c, tensor_map(sqs.attach, sqt.psi)));
    // P = pushout(W <- src -> T_s (x) T_t); compare with K_s (x) K_t
    Pushout P = pushout(lv, gg.map);
    BaseMap wmap = pushout_induced(W, tensor_map(sqs.bonding, identity_map(kt)),
                                   tensor_map(identity_map(ks), sqt.bonding));
    BaseMap cmp = pushout_induced(P, wmap, tensor_map(sqs.attach, sqt.attach));
    auto cmp_inv = invert(cmp);
    require(cmp_inv.has_value(), "ladder: lemma 5.2 comparison not invertible");
    // u out of W
    const std::optional<BaseMap>& cl = lad[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t)];
    const std::optional<BaseMap>& cr = lad[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - 1)];
    require(cl.has_value() && cr.has_value(), "ladder: missing lower entries");
    int prev_tgt = std::min<long>(s + t - 1, tr.pair(x, z).result_stage);
    BaseMap up = trace_bondings(tr, x, z, prev_tgt, tgt_stage);
    BaseMap u = pushout_induced(W, compose(up, *cl), compose(up, *cr));
    // v out of T_s (x) T_t
    BaseMap v = wing_v(sqs.tgt_word, sqt.tgt_word);
    BaseMap out = pushout_induced(P, u, v);
    (void)tgt;
    return compose(out, *cmp_inv);
}

}  // namespace

BaseMap trace_attach(const PushoutTrace& tr, std::size_t x, std::size_t y, int t) {
    const PairTrace& pt = tr.pair(x, y);
    if (t >= 1 && t <= static_cast<int>(pt.squares.size())) return pt.squares[t - 1].attach;
    if (!(t > pt.trivial_from)) throw BaseError("trace_attach: stage not computed nor certified");
    Word w = stage_word(tr.h, tr.a, tr.b, tr.f.dst, x, y, t);
    TruncationScope scope;
    BaseValue flat = word_value(w);
    BaseValue tgt = tr.stage_value(x, y, t);
    if (flat.is_initial()) return initial_map(tgt);
    if (flat.base.kind != BaseKind::Bool)
        throw BaseError("trace_attach: non-initial stage beyond certificate");
    return bool_map(flat, tgt);
}

BaseMap trace_bondings(const PushoutTrace& tr, std::size_t x, std::size_t y, int from, int to) {
    BaseMap m = identity_map(tr.stage_value(x, y, from));
    for (int t = from + 1; t <= to; ++t) m = compose(tr.stage_bonding(x, y, t), m);
    return m;
}

bool verify_stage_square(const StageSquare& sq) {
    return verify_base_pushout_square(sq.psi, sq.pp.map, sq.bonding, sq.attach);
}

PushoutTrace pushout_along_free(const VCategory& h, std::size_t a, std::size_t b, const BaseMap& f,
                                const BaseMap& gbar, int stage_bound) {
    require(gbar.src == f.src, "pushout_along_free: gbar source must be U");
    require(gbar.dst == h.hom(a, b), "pushout_along_free: gbar target must be H(a,b)");
    require(stage_bound >= 0, "pushout_along_free: negative bound");
    TruncationScope scope;
    PushoutTrace tr;
    tr.h = h;
    tr.a = a;
    tr.b = b;
    tr.f = f;
    tr.gbar = gbar;
    tr.stage_bound = stage_bound;
    std::size_t n = h.n();
    EngineCtx ec{h, a, b, f, gbar, stage_bound, n};

    if (auto finv = invert(f)) {
        // push-out along an isomorphism: K = H up to the evident translation
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                PairTrace pt;
                pt.stages.push_back(h.hom(x, y));
                pt.trivial_from = 0;
                pt.stabilized = true;
                pt.result_stage = 0;
                tr.pairs.push_back(std::move(pt));
            }
        tr.stabilized = true;
        tr.result = h;
        tr.phi = identity_functor(h);
        tr.g_prime_adjoint = compose(gbar, *finv);
        tr.fdch_dropped = TruncationScope::dropped();
        return tr;
    }

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) tr.pairs.push_back(compute_pair(ec, x, y, stage_bound));
    tr.stabilized = std::all_of(tr.pairs.begin(), tr.pairs.end(),
                                [](const PairTrace& p) { return p.stabilized; });

    // ladder
    tr.ladder.resize(n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const PairTrace& pyz = tr.pair(y, z);
                const PairTrace& pxy = tr.pair(x, y);
                const PairTrace& pxz = tr.pair(x, z);
                int smax = pyz.result_stage;
                int tmax = pxy.result_stage;
                auto& lad = tr.ladder[(x * n + y) * n + z];
                lad.assign(static_cast<std::size_t>(smax + 1),
                           std::vector<std::optional<BaseMap>>(static_cast<std::size_t>(tmax + 1)));
                for (int s = 0; s <= smax; ++s)
                    for (int t = 0; t <= tmax; ++t) {
                        if (pxz.trivial_from == INT_MAX && s + t > static_cast<int>(pxz.squares.size()))
                            continue;  // target stage unavailable
                        lad[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
                            ladder_entry(ec, tr, x, y, z, s, t, lad);
                    }
            }

    if (tr.stabilized) {
        std::vector<BaseValue> hom;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                hom.push_back(tr.stage_value(x, y, tr.pair(x, y).result_stage));
        VGraph g = make_graph(h.graph.base, h.graph.objects, std::move(hom));
        std::vector<BaseMap> comp;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    const auto& lad = tr.ladder[(x * n + y) * n + z];
                    const auto& entry = lad[static_cast<std::size_t>(tr.pair(y, z).result_stage)]
                                           [static_cast<std::size_t>(tr.pair(x, y).result_stage)];
                    require(entry.has_value(), "engine: missing final ladder entry");
                    comp.push_back(*entry);
                }
        std::vector<BaseMap> phi_comps;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                phi_comps.push_back(trace_bondings(tr, x, y, 0, tr.pair(x, y).result_stage));
        std::vector<BaseMap> idm;
        for (std::size_t x = 0; x < n; ++x)
            idm.push_back(compose(phi_comps[x * n + x], h.idm[x]));
        VCategory k = make_category(std::move(g), std::move(comp), std::move(idm));
        tr.result = k;
        std::vector<std::size_t> om(n);
        for (std::size_t i = 0; i < n; ++i) om[i] = i;
        GraphMap gm{h.graph, k.graph, std::move(om), std::move(phi_comps)};
        tr.phi = VFunctor{h, *tr.result, std::move(gm)};
        // adjoint of g': V = 1 (x) V (x) 1 -> H(b,b) (x) V (x) H(a,a) -> K(a,b)
        const PairTrace& pab = tr.pair(a, b);
        if (f.dst.is_initial()) {
            tr.g_prime_adjoint = initial_map(tr.stage_value(a, b, pab.result_stage));
        } else {
            Word unit_word{h.graph.base, {unit_value(h.graph.base), f.dst, unit_value(h.graph.base)}};
            Word hw{h.graph.base, {h.hom(b, b), f.dst, h.hom(a, a)}};
            BaseMap emb = word_map(unit_word, hw, {h.idm[b], identity_map(f.dst), h.idm[a]});
            require(pab.result_stage >= 1, "engine: expected a stage-1 attachment at (a,b)");
            BaseMap att = pab.squares[0].attach;
            require(att.src == word_value(hw), "engine: g' word mismatch");
            BaseMap up = trace_bondings(tr, a, b, 1, pab.result_stage);
            tr.g_prime_adjoint = compose(up, compose(att, emb));
        }
    }
    tr.fdch_dropped = TruncationScope::dropped();
    return tr;
}

}  // namespace enricat
