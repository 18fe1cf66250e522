#include "enricat/free_cat.hpp"

#include <algorithm>

namespace enricat {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw BaseError(msg);
}

// All paths x -> y of exactly the given length, nodes lexicographic.
void paths_of_length(std::size_t n, std::size_t x, std::size_t y, std::size_t len,
                     std::vector<FreePath>& out) {
    std::vector<std::size_t> nodes{x};
    std::function<void()> rec = [&]() {
        if (nodes.size() == len + 1) {
            if (nodes.back() == y) out.push_back(FreePath{nodes});
            return;
        }
        for (std::size_t z = 0; z < n; ++z) {
            nodes.push_back(z);
            rec();
            nodes.pop_back();
        }
    };
    rec();
}

}  // namespace

Word path_word(const VGraph& m, const FreePath& p) {
    Word w{m.base, {}};
    for (std::size_t e = p.length(); e >= 1; --e)
        w.letters.push_back(m.at(p.nodes[e - 1], p.nodes[e]));
    return w;
}

FreeCategoryResult free_category(const VGraph& m, int word_bound) {
    require(word_bound >= 0, "free_category: negative bound");
    TruncationScope scope;
    FreeCategoryResult out;
    out.input = m;
    out.word_bound = word_bound;
    std::size_t n = m.n();

    out.paths.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t len = 0; len <= static_cast<std::size_t>(word_bound); ++len)
                paths_of_length(n, x, y, len, out.paths[x * n + y]);

    // stage graphs by word length
    for (int bound = 0; bound <= word_bound; ++bound) {
        std::vector<BaseValue> hom;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                std::vector<BaseValue> parts;
                for (const FreePath& p : out.paths[x * n + y])
                    if (p.length() <= static_cast<std::size_t>(bound))
                        parts.push_back(word_value(path_word(m, p)));
                hom.push_back(coproduct(m.base, parts).obj);
            }
        out.stage_graphs.push_back(make_graph(m.base, m.objects, std::move(hom)));
    }
    std::vector<BaseValue> hom;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<BaseValue> parts;
            for (const FreePath& p : out.paths[x * n + y]) parts.push_back(word_value(path_word(m, p)));
            Coproduct cp = coproduct(m.base, parts);
            hom.push_back(cp.obj);
            out.hom_cp.push_back(std::move(cp));
        }
    VGraph tg = out.stage_graphs.back();

    // stabilization: every path of length bound+1 has initial value
    out.stabilized = true;
    {
        std::vector<FreePath> next;
        for (std::size_t x = 0; x < n && out.stabilized; ++x)
            for (std::size_t y = 0; y < n && out.stabilized; ++y) {
                next.clear();
                paths_of_length(n, x, y, static_cast<std::size_t>(word_bound) + 1, next);
                for (const FreePath& p : next)
                    if (!word_value(path_word(m, p)).is_initial()) {
                        out.stabilized = false;
                        break;
                    }
            }
    }

    // unit: legs at length-1 paths
    if (word_bound >= 1) {
        std::vector<std::size_t> om(n);
        for (std::size_t i = 0; i < n; ++i) om[i] = i;
        std::vector<BaseMap> comps;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const auto& ps = out.paths[x * n + y];
                std::size_t idx = 0;
                while (idx < ps.size() && ps[idx].length() != 1) ++idx;
                require(idx < ps.size(), "free_category: length-1 path missing");
                comps.push_back(out.hom_cp[x * n + y].legs[idx]);
            }
        out.unit = GraphMap{m, tg, std::move(om), std::move(comps)};
    }

    // composition by concatenation
    bool lossy = false;
    std::vector<BaseMap> comp;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const auto& qs = out.paths[y * n + z];
                const auto& ps = out.paths[x * n + y];
                const Coproduct& qcp = out.hom_cp[y * n + z];
                const Coproduct& pcp = out.hom_cp[x * n + y];
                // distribute (+q Q) (x) (+p P) as +(q,p) Q (x) P
                std::vector<BaseValue> parts;
                for (std::size_t qi = 0; qi < qs.size(); ++qi)
                    for (std::size_t pi = 0; pi < ps.size(); ++pi)
                        parts.push_back(tensor(qcp.legs[qi].src, pcp.legs[pi].src));
                Coproduct dist = coproduct(m.base, parts);
                std::vector<BaseMap> dist_arms;
                for (std::size_t qi = 0; qi < qs.size(); ++qi)
                    for (std::size_t pi = 0; pi < ps.size(); ++pi)
                        dist_arms.push_back(tensor_map(qcp.legs[qi], pcp.legs[pi]));
                BaseValue tt = tensor(tg.at(y, z), tg.at(x, y));
                BaseMap dist_map = cotuple(dist, dist_arms, tt);
                auto dist_inv = invert(dist_map);
                require(dist_inv.has_value(), "free_category: distributivity not invertible");
                std::vector<BaseMap> arms;
                for (std::size_t qi = 0; qi < qs.size(); ++qi)
                    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
                        const FreePath& q = qs[qi];
                        const FreePath& p = ps[pi];
                        Word qw = path_word(m, q);
                        Word pw = path_word(m, p);
                        BaseMap merge = word_merge(qw, pw);
                        if (q.length() + p.length() <= static_cast<std::size_t>(word_bound)) {
                            FreePath cat;
                            cat.nodes = p.nodes;
                            cat.nodes.insert(cat.nodes.end(), q.nodes.begin() + 1, q.nodes.end());
                            auto& cps = out.paths[x * n + z];
                            std::size_t ci = 0;
                            while (ci < cps.size() && cps[ci].nodes != cat.nodes) ++ci;
                            require(ci < cps.size(), "free_category: concatenated path missing");
                            arms.push_back(compose(out.hom_cp[x * n + z].legs[ci], merge));
                        } else {
                            BaseValue src = tensor(qcp.legs[qi].src, pcp.legs[pi].src);
                            if (src.is_initial()) {
                                arms.push_back(initial_map(tg.at(x, z)));
                            } else if (m.base.kind == BaseKind::Fdch) {
                                // window quotient: above-window content is zero
                                arms.push_back(zero_map(src, tg.at(x, z)));
                                lossy = true;
                            } else {
                                lossy = true;
                                arms.push_back(BaseMap{});  // unusable; category omitted
                            }
                        }
                    }
                if (!lossy || m.base.kind == BaseKind::Fdch) {
                    BaseMap arm_total = cotuple(dist, arms, tg.at(x, z));
                    comp.push_back(compose(arm_total, *dist_inv));
                } else {
                    comp.push_back(BaseMap{});
                }
            }
    if (!lossy || m.base.kind == BaseKind::Fdch) {
        std::vector<BaseMap> idm;
        for (std::size_t x = 0; x < n; ++x) {
            const auto& ps = out.paths[x * n + x];
            std::size_t ei = 0;
            while (ei < ps.size() && ps[ei].length() != 0) ++ei;
            BaseMap leg = out.hom_cp[x * n + x].legs[ei];
            // leg source is the unit value already
            idm.push_back(leg);
        }
        VCategory cat = make_category(tg, std::move(comp), std::move(idm));
        cat.truncated = !out.stabilized;
        out.category = std::move(cat);
    }
    return out;
}

GraphMap adjunction_restrict(const FreeCategoryResult& t, const VCategory& h, const VFunctor& phi) {
    require(t.unit.has_value(), "adjunction_restrict: no unit at bound 0");
    require(phi.src.graph == t.stage_graphs.back(), "adjunction_restrict: functor source mismatch");
    (void)h;
    return compose(phi.gm, *t.unit);
}

VFunctor adjunction_extend(const FreeCategoryResult& t, const VCategory& h, const GraphMap& psi) {
    TruncationScope trunc_scope;
    require(t.category.has_value() && t.stabilized, "adjunction_extend: needs a stabilized result");
    require(psi.src == t.input && psi.dst == h.graph, "adjunction_extend: psi shape");
    for (std::size_t i = 0; i < psi.object_map.size(); ++i)
        require(psi.object_map[i] == i, "adjunction_extend: identity on objects required");
    std::size_t n = t.input.n();
    std::vector<BaseMap> comps;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<BaseMap> arms;
            const auto& ps = t.paths[x * n + y];
            for (const FreePath& p : ps) {
                if (p.length() == 0) {
                    arms.push_back(h.idm[x]);
                    continue;
                }
                // image word in H, then collapse by composition left to right
                Word hw{h.graph.base, {}};
                std::vector<BaseMap> letters;
                for (std::size_t e = p.length(); e >= 1; --e) {
                    hw.letters.push_back(h.hom(p.nodes[e - 1], p.nodes[e]));
                    letters.push_back(psi.at(p.nodes[e - 1], p.nodes[e]));
                }
                BaseMap mp = word_map(path_word(t.input, p), hw, letters);
                // fold: repeatedly compose the two leftmost letters
                Word cur = hw;
                std::vector<std::size_t> ends;  // object chain: cur letter i is H(ends[i+1], ends[i])
                // reconstruct targets: letters are H(z_{e-1}, z_e) for e = len..1
                std::vector<std::size_t> chain;
                for (std::size_t e = p.length(); e >= 1; --e) chain.push_back(p.nodes[e]);
                chain.push_back(p.nodes[0]);
                // chain[i] -> letter i = H(chain[i+1], chain[i])
                while (cur.size() > 1) {
                    std::size_t zty = chain[0];          // target of letter 0
                    std::size_t mid = chain[1];
                    std::size_t src = chain[2];
                    BaseMap c = h.comp_at(src, mid, zty);
                    SegmentResult seg = word_apply_segment(cur, 0, 2, c);
                    mp = compose(seg.map, mp);
                    cur = seg.word;
                    chain.erase(chain.begin() + 1);
                }
                arms.push_back(mp);
            }
            comps.push_back(cotuple(t.hom_cp[x * n + y], arms, h.hom(x, y)));
        }
    std::vector<std::size_t> om(n);
    for (std::size_t i = 0; i < n; ++i) om[i] = i;
    GraphMap gm{t.category->graph, h.graph, std::move(om), std::move(comps)};
    return make_functor(*t.category, h, std::move(gm));
}

}  // namespace enricat
