#include "enricat/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace enricat {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw BaseError(msg);
}

std::size_t compose_elems_finset(const VCategory& h, std::size_t x, std::size_t y, std::size_t z,
                                 std::size_t g, std::size_t f) {
    // comp(x,y,z) : H(y,z) (x) H(x,y) -> H(x,z); pairs indexed g * |H(x,y)| + f
    return h.comp_at(x, y, z).table[g * h.hom(x, y).card + f];
}

struct WordUniverse {
    std::vector<OracleWord> words;
    std::map<OracleWord, std::size_t> index;
    std::vector<std::size_t> parent;

    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(std::size_t i, std::size_t j) {
        i = find(i);
        j = find(j);
        if (i != j) parent[std::max(i, j)] = std::min(i, j);
    }
};

// Collapse gens[pos] of w into the H element e (already in H(a,b)); the chain
// shrinks by one generator.
OracleWord substitute(const VCategory& h, std::size_t a, std::size_t b, const OracleWord& w,
                      std::size_t pos, std::size_t e) {
    // neighbours: elems[pos] in H(b, wdst), elems[pos+1] in H(vsrc, a)
    std::size_t k = w.gens.size();
    std::size_t vsrc = (pos + 1 == k) ? w.src : b;
    std::size_t wdst = (pos == 0) ? w.dst : a;
    std::size_t inner = compose_elems_finset(h, vsrc, a, b, e, w.elems[pos + 1]);
    std::size_t merged = compose_elems_finset(h, vsrc, b, wdst, w.elems[pos], inner);
    OracleWord out;
    out.src = w.src;
    out.dst = w.dst;
    out.elems.assign(w.elems.begin(), w.elems.begin() + static_cast<long>(pos));
    out.elems.push_back(merged);
    out.elems.insert(out.elems.end(), w.elems.begin() + static_cast<long>(pos) + 2, w.elems.end());
    out.gens.assign(w.gens.begin(), w.gens.begin() + static_cast<long>(pos));
    out.gens.insert(out.gens.end(), w.gens.begin() + static_cast<long>(pos) + 1, w.gens.end());
    return out;
}

}  // namespace

OracleCategory oracle_pushout_finset(const VCategory& h, std::size_t a, std::size_t b,
                                     std::size_t v_card, const std::vector<std::size_t>& f_table,
                                     const std::vector<std::size_t>& gbar_table, int max_gens) {
    require(h.graph.base.kind == BaseKind::FinSet, "oracle: FinSet category required");
    std::size_t n = h.n();
    WordUniverse uni;

    // enumerate alternating words, k generators, chain x -> a (-> b -> a)* -> y
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t e = 0; e < h.hom(x, y).card; ++e) {
                OracleWord w;
                w.src = x;
                w.dst = y;
                w.elems = {e};
                uni.index.emplace(w, uni.words.size());
                uni.words.push_back(w);
            }
            for (int k = 1; k <= max_gens; ++k) {
                // elems: h_k in H(b,y), h_{k-1..1} in H(b,a), h_0 in H(x,a); gens in V
                std::vector<std::size_t> caps;
                caps.push_back(h.hom(b, y).card);
                for (int i = 1; i < k; ++i) caps.push_back(h.hom(b, a).card);
                caps.push_back(h.hom(x, a).card);
                for (int i = 0; i < k; ++i) caps.push_back(v_card);
                if (std::any_of(caps.begin(), caps.end(), [](std::size_t c) { return c == 0; }))
                    continue;
                std::vector<std::size_t> pick(caps.size(), 0);
                while (true) {
                    OracleWord w;
                    w.src = x;
                    w.dst = y;
                    w.elems.assign(pick.begin(), pick.begin() + k + 1);
                    w.gens.assign(pick.begin() + k + 1, pick.end());
                    uni.index.emplace(w, uni.words.size());
                    uni.words.push_back(w);
                    std::size_t i = 0;
                    for (; i < pick.size(); ++i) {
                        if (++pick[i] < caps[i]) break;
                        pick[i] = 0;
                    }
                    if (i == pick.size()) break;
                }
            }
        }
    uni.parent.resize(uni.words.size());
    std::iota(uni.parent.begin(), uni.parent.end(), std::size_t{0});

    // identifications: substitute f(u) -> gbar(u) at every position
    for (std::size_t wi = 0; wi < uni.words.size(); ++wi) {
        const OracleWord w = uni.words[wi];
        for (std::size_t pos = 0; pos < w.gens.size(); ++pos)
            for (std::size_t u = 0; u < f_table.size(); ++u) {
                if (f_table[u] != w.gens[pos]) continue;
                OracleWord sub = substitute(h, a, b, w, pos, gbar_table[u]);
                auto it = uni.index.find(sub);
                require(it != uni.index.end(), "oracle: substituted word missing");
                uni.unite(wi, it->second);
            }
    }

    OracleCategory out;
    out.objects = h.graph.objects;
    out.hom_count.assign(n * n, 0);
    out.reps.resize(n * n);
    std::vector<std::size_t> cls(uni.words.size());
    for (std::size_t wi = 0; wi < uni.words.size(); ++wi) {
        if (uni.find(wi) != wi) continue;
        const OracleWord& w = uni.words[wi];
        cls[wi] = out.hom_count[w.src * n + w.dst]++;
        out.reps[w.src * n + w.dst].push_back(w);
    }
    for (std::size_t wi = 0; wi < uni.words.size(); ++wi) cls[wi] = cls[uni.find(wi)];
    auto class_of = [&](const OracleWord& w) {
        auto it = uni.index.find(w);
        require(it != uni.index.end(), "oracle: word outside enumerated universe");
        return cls[it->second];
    };

    // composition on representatives
    auto concat_words = [&](const OracleWord& w2, const OracleWord& w1) {
        require(w1.dst == w2.src, "oracle: compose endpoint mismatch");
        OracleWord out_w;
        out_w.src = w1.src;
        out_w.dst = w2.dst;
        std::size_t k1 = w1.gens.size(), k2 = w2.gens.size();
        std::size_t mid_src = k1 ? b : w1.src;
        std::size_t mid_dst = k2 ? a : w2.dst;
        std::size_t merged =
            compose_elems_finset(h, mid_src, w1.dst, mid_dst, w2.elems.back(), w1.elems.front());
        out_w.elems.assign(w2.elems.begin(), w2.elems.end() - 1);
        out_w.elems.push_back(merged);
        out_w.elems.insert(out_w.elems.end(), w1.elems.begin() + 1, w1.elems.end());
        out_w.gens = w2.gens;
        out_w.gens.insert(out_w.gens.end(), w1.gens.begin(), w1.gens.end());
        return out_w;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                std::size_t cf = out.hom_count[x * n + y], cg = out.hom_count[y * n + z];
                std::vector<std::size_t> table(cf * cg);
                for (std::size_t g = 0; g < cg; ++g)
                    for (std::size_t f = 0; f < cf; ++f)
                        table[g * cf + f] =
                            class_of(concat_words(out.reps[y * n + z][g], out.reps[x * n + y][f]));
                out.comp_table.push_back(std::move(table));
            }
    for (std::size_t x = 0; x < n; ++x) {
        OracleWord idw;
        idw.src = idw.dst = x;
        idw.elems = {h.idm[x].table[0]};
        out.id_elem.push_back(class_of(idw));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<std::size_t> im(h.hom(x, y).card);
            for (std::size_t e = 0; e < im.size(); ++e) {
                OracleWord w;
                w.src = x;
                w.dst = y;
                w.elems = {e};
                im[e] = class_of(w);
            }
            out.h_image.push_back(std::move(im));
        }
    if (max_gens >= 1 && v_card > 0 && h.hom(b, b).card > 0 && h.hom(a, a).card > 0) {
        out.v_image.resize(v_card);
        for (std::size_t v = 0; v < v_card; ++v) {
            OracleWord w;
            w.src = a;
            w.dst = b;
            w.elems = {h.idm[b].table[0], h.idm[a].table[0]};
            w.gens = {v};
            out.v_image[v] = class_of(w);
        }
    }
    return out;
}

VCategory oracle_pushout_bool(const VCategory& h, std::size_t a, std::size_t b, bool v) {
    require(h.graph.base.kind == BaseKind::Bool, "oracle: Bool category required");
    std::size_t n = h.n();
    std::vector<int> reach(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) reach[x * n + y] = h.hom(x, y).truth ? 1 : 0;
    if (v) reach[a * n + b] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (reach[x * n + k] && reach[k * n + y]) reach[x * n + y] = 1;
    std::vector<BaseValue> hom;
    for (int r : reach) hom.push_back(bool_value(r != 0));
    VGraph g = make_graph(h.graph.base, h.graph.objects, std::move(hom));
    std::vector<BaseMap> comp;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                comp.push_back(bool_map(tensor(g.at(y, z), g.at(x, y)), g.at(x, z)));
    std::vector<BaseMap> idm;
    for (std::size_t x = 0; x < n; ++x) idm.push_back(bool_map(bool_value(true), g.at(x, x)));
    return make_category(std::move(g), std::move(comp), std::move(idm));
}

PropertyReport oracle_compare(const PushoutTrace& tr) {
    PropertyReport rep;
    if (!tr.stabilized || !tr.result) {
        rep.skipped = true;
        rep.reason = "truncation";
        return rep;
    }
    const VCategory& h = tr.h;
    const VCategory& k = *tr.result;
    std::size_t n = h.n();

    if (h.graph.base.kind == BaseKind::Bool) {
        VCategory ora = oracle_pushout_bool(h, tr.a, tr.b, tr.f.dst.truth);
        if (!(ora.graph == k.graph)) {
            rep.reason = "bool hom tables differ from reachability closure";
            return rep;
        }
        rep.pass = true;
        return rep;
    }
    if (h.graph.base.kind != BaseKind::FinSet) {
        rep.skipped = true;
        rep.reason = "unsupported";
        return rep;
    }

    OracleCategory ora = oracle_pushout_finset(h, tr.a, tr.b, tr.f.dst.card, tr.f.table,
                                               tr.gbar.table, tr.stage_bound);
    // canonical functor: interpret an oracle word through phi and g'
    const VFunctor& phi = *tr.phi;
    const BaseMap& gp = *tr.g_prime_adjoint;
    // the defining square must commute on elements: g'(f(u)) = phi(gbar(u))
    for (std::size_t u = 0; u < tr.f.table.size(); ++u)
        if (gp.table[tr.f.table[u]] != phi.gm.at(tr.a, tr.b).table[tr.gbar.table[u]]) {
            rep.reason = "square (5.1) does not commute on elements";
            return rep;
        }
    auto theta = [&](const OracleWord& w) -> std::size_t {
        std::size_t k1 = w.gens.size();
        // start: phi(h_0) in K(src, a-or-dst)
        std::size_t cur_src = w.src;
        std::size_t cur_dst = k1 ? tr.a : w.dst;
        std::size_t cur = phi.gm.at(w.src, cur_dst).table[w.elems.back()];
        for (std::size_t i = k1; i >= 1; --i) {
            // apply generator gens[i-1] : a -> b, then element elems[i-1]
            std::size_t ve = gp.table[w.gens[i - 1]];
            cur = k.comp_at(cur_src, tr.a, tr.b).table[ve * k.hom(cur_src, tr.a).card + cur];
            std::size_t nxt_dst = (i == 1) ? w.dst : tr.a;
            std::size_t he = phi.gm.at(tr.b, nxt_dst).table[w.elems[i - 1]];
            cur = k.comp_at(cur_src, tr.b, nxt_dst).table[he * k.hom(cur_src, tr.b).card + cur];
            cur_dst = nxt_dst;
        }
        (void)cur_dst;
        return cur;
    };
    // theta must be constant on classes, bijective per pair, and functorial
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t cnt = ora.count(x, y);
            if (cnt != k.hom(x, y).card) {
                rep.reason = "hom cardinality mismatch at (" + h.graph.objects[x] + "," +
                             h.graph.objects[y] + ")";
                return rep;
            }
            std::vector<int> hit(cnt, 0);
            for (std::size_t c = 0; c < cnt; ++c) {
                std::size_t t = theta(ora.reps[x * n + y][c]);
                if (hit[t]++) {
                    rep.reason = "canonical functor not injective";
                    return rep;
                }
            }
        }
    // composition and identities agree under theta
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                std::size_t cf = ora.count(x, y), cg = ora.count(y, z);
                for (std::size_t g = 0; g < cg; ++g)
                    for (std::size_t f = 0; f < cf; ++f) {
                        std::size_t lhs = theta(
                            ora.reps[x * n + z][ora.comp_table[(x * n + y) * n + z][g * cf + f]]);
                        std::size_t tg = theta(ora.reps[y * n + z][g]);
                        std::size_t tf = theta(ora.reps[x * n + y][f]);
                        std::size_t rhs =
                            k.comp_at(x, y, z).table[tg * k.hom(x, y).card + tf];
                        if (lhs != rhs) {
                            rep.reason = "composition tables differ";
                            return rep;
                        }
                    }
            }
    for (std::size_t x = 0; x < n; ++x)
        if (theta(ora.reps[x * n + x][ora.id_elem[x]]) != k.idm[x].table[0]) {
            rep.reason = "identities differ";
            return rep;
        }
    rep.pass = true;
    return rep;
}

}  // namespace enricat
