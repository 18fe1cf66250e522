#include "enricat/graph.hpp"

#include <algorithm>

namespace enricat {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw BaseError(msg);
}

}  // namespace

std::size_t VGraph::index_of(const std::string& label) const {
    auto it = std::lower_bound(objects.begin(), objects.end(), label);
    if (it == objects.end() || *it != label) throw BaseError("unknown object label: " + label);
    return static_cast<std::size_t>(it - objects.begin());
}

VGraph make_graph(const BaseDescriptor& base, std::vector<std::string> objects,
                  std::vector<BaseValue> hom) {
    require(std::is_sorted(objects.begin(), objects.end()), "objects must be sorted");
    require(std::adjacent_find(objects.begin(), objects.end()) == objects.end(),
            "objects must be unique");
    require(hom.size() == objects.size() * objects.size(), "hom table size");
    for (const BaseValue& v : hom) require(v.base == base, "hom base mismatch");
    return VGraph{base, std::move(objects), std::move(hom)};
}

VGraph initial_graph(const BaseDescriptor& base, std::vector<std::string> objects) {
    std::vector<BaseValue> hom(objects.size() * objects.size(), initial_value(base));
    return make_graph(base, std::move(objects), std::move(hom));
}

VGraph unit_graph(const BaseDescriptor& base, std::vector<std::string> objects) {
    VGraph g = initial_graph(base, std::move(objects));
    for (std::size_t i = 0; i < g.n(); ++i) g.at(i, i) = unit_value(base);
    return g;
}

VGraph single_edge_graph(const BaseDescriptor& base, std::vector<std::string> objects,
                         const std::string& x, const std::string& y, const BaseValue& v) {
    VGraph g = initial_graph(base, std::move(objects));
    g.at(g.index_of(x), g.index_of(y)) = v;
    return g;
}

GraphMap make_graph_map(VGraph src, VGraph dst, std::vector<std::size_t> object_map,
                        std::vector<BaseMap> components) {
    GraphMap f{std::move(src), std::move(dst), std::move(object_map), std::move(components)};
    validate_graph_map(f);
    return f;
}

GraphMap identity_graph_map(const VGraph& g) {
    std::vector<std::size_t> om(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) om[i] = i;
    std::vector<BaseMap> comps;
    comps.reserve(g.hom.size());
    for (const BaseValue& v : g.hom) comps.push_back(identity_map(v));
    return GraphMap{g, g, std::move(om), std::move(comps)};
}

GraphMap compose(const GraphMap& g, const GraphMap& f) {
    require(f.dst == g.src, "graph map compose: middle mismatch");
    std::vector<std::size_t> om(f.src.n());
    for (std::size_t i = 0; i < om.size(); ++i) om[i] = g.object_map[f.object_map[i]];
    std::vector<BaseMap> comps;
    comps.reserve(f.components.size());
    for (std::size_t x = 0; x < f.src.n(); ++x)
        for (std::size_t y = 0; y < f.src.n(); ++y)
            comps.push_back(compose(g.at(f.object_map[x], f.object_map[y]), f.at(x, y)));
    return GraphMap{f.src, g.dst, std::move(om), std::move(comps)};
}

void validate_graph_map(const GraphMap& f) {
    require(f.object_map.size() == f.src.n(), "graph map: object map size");
    for (std::size_t i : f.object_map) require(i < f.dst.n(), "graph map: object map range");
    require(f.components.size() == f.src.n() * f.src.n(), "graph map: component count");
    for (std::size_t x = 0; x < f.src.n(); ++x)
        for (std::size_t y = 0; y < f.src.n(); ++y) {
            const BaseMap& c = f.at(x, y);
            require(c.src == f.src.at(x, y), "graph map: component source");
            require(c.dst == f.dst.at(f.object_map[x], f.object_map[y]),
                    "graph map: component target");
        }
}

// ---- tensor over S ----------------------------------------------------------

TensorS tensor_S(const VGraph& m, const VGraph& n) {
    require(m.objects == n.objects && m.base == n.base, "tensor_S: object set mismatch");
    TensorS out;
    std::vector<BaseValue> hom;
    hom.reserve(m.hom.size());
    out.cp.reserve(m.hom.size());
    for (std::size_t x = 0; x < m.n(); ++x)
        for (std::size_t y = 0; y < m.n(); ++y) {
            std::vector<BaseValue> parts;
            parts.reserve(m.n());
            for (std::size_t z = 0; z < m.n(); ++z) parts.push_back(tensor(m.at(z, y), n.at(x, z)));
            Coproduct cp = coproduct(m.base, parts);
            hom.push_back(cp.obj);
            out.cp.push_back(std::move(cp));
        }
    out.graph = make_graph(m.base, m.objects, std::move(hom));
    return out;
}

GraphMap tensor_S_map(const GraphMap& f, const GraphMap& g) {
    require(f.src.objects == g.src.objects, "tensor_S_map: object set mismatch");
    for (std::size_t i = 0; i < f.object_map.size(); ++i)
        require(f.object_map[i] == i && g.object_map[i] == i,
                "tensor_S_map: identity-on-objects required");
    TensorS src = tensor_S(f.src, g.src);
    TensorS dst = tensor_S(f.dst, g.dst);
    std::size_t n = f.src.n();
    std::vector<BaseMap> comps;
    comps.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<BaseMap> arms;
            arms.reserve(n);
            for (std::size_t z = 0; z < n; ++z)
                arms.push_back(compose(dst.cp[x * n + y].legs[z], tensor_map(f.at(z, y), g.at(x, z))));
            comps.push_back(cotuple(src.cp[x * n + y], arms, dst.graph.at(x, y)));
        }
    std::vector<std::size_t> om(n);
    for (std::size_t i = 0; i < n; ++i) om[i] = i;
    return GraphMap{src.graph, dst.graph, std::move(om), std::move(comps)};
}

GraphMap left_unitor_S(const VGraph& m) {
    VGraph one = unit_graph(m.base, m.objects);
    TensorS t = tensor_S(one, m);
    std::size_t n = m.n();
    std::vector<BaseMap> comps;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            // summand z: 1_S(z,y) (x) M(x,z): the z = y term is 1 (x) M(x,y)
            std::vector<BaseMap> arms;
            for (std::size_t z = 0; z < n; ++z) {
                if (z == y) {
                    arms.push_back(unitors(m.at(x, y)).first);
                } else {
                    arms.push_back(initial_map(m.at(x, y)));  // source is initial (x) ... = initial
                }
            }
            comps.push_back(cotuple(t.cp[x * n + y], arms, m.at(x, y)));
        }
    std::vector<std::size_t> om(n);
    for (std::size_t i = 0; i < n; ++i) om[i] = i;
    return GraphMap{t.graph, m, std::move(om), std::move(comps)};
}

GraphMap right_unitor_S(const VGraph& m) {
    VGraph one = unit_graph(m.base, m.objects);
    TensorS t = tensor_S(m, one);
    std::size_t n = m.n();
    std::vector<BaseMap> comps;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<BaseMap> arms;
            for (std::size_t z = 0; z < n; ++z) {
                if (z == x) {
                    arms.push_back(unitors(m.at(x, y)).second);
                } else {
                    arms.push_back(initial_map(m.at(x, y)));
                }
            }
            comps.push_back(cotuple(t.cp[x * n + y], arms, m.at(x, y)));
        }
    std::vector<std::size_t> om(n);
    for (std::size_t i = 0; i < n; ++i) om[i] = i;
    return GraphMap{t.graph, m, std::move(om), std::move(comps)};
}

GraphMap assoc_S(const VGraph& m, const VGraph& n, const VGraph& p) {
    TensorS mn = tensor_S(m, n);
    TensorS np = tensor_S(n, p);
    TensorS lhs = tensor_S(mn.graph, p);
    TensorS rhs = tensor_S(m, np.graph);
    std::size_t k = m.n();
    std::vector<BaseMap> comps;
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            // lhs(x,y) = coprod_w (coprod_z M(z,y)(x)N(w,z)) (x) P(x,w)
            // rhs(x,y) = coprod_z M(z,y) (x) (coprod_w N(w,z)(x)P(x,w))
            const Coproduct& lcp = lhs.cp[x * k + y];
            std::vector<BaseMap> arms_w;
            for (std::size_t w = 0; w < k; ++w) {
                // arm: (MN)(w,y) (x) P(x,w) -> rhs(x,y)
                // (MN)(w,y) is itself a coproduct; distribute it over (x) P(x,w)
                const Coproduct& mncp = mn.cp[w * k + y];
                std::vector<BaseValue> parts;
                for (std::size_t z = 0; z < k; ++z)
                    parts.push_back(tensor(mncp.legs[z].src, p.at(x, w)));
                Coproduct dist = coproduct(m.base, parts);
                // canonical map dist.obj -> (MN)(w,y) (x) P(x,w)
                std::vector<BaseMap> dist_arms;
                for (std::size_t z = 0; z < k; ++z)
                    dist_arms.push_back(tensor_map(mncp.legs[z], identity_map(p.at(x, w))));
                BaseValue mnp = tensor(mncp.obj, p.at(x, w));
                BaseMap dist_map = cotuple(dist, dist_arms, mnp);
                auto dist_inv = invert(dist_map);
                require(dist_inv.has_value(), "assoc_S: distributivity not invertible");
                // each summand (M(z,y)(x)N(w,z)) (x) P(x,w) -> M(z,y) (x) (N(w,z)(x)P(x,w))
                std::vector<BaseMap> to_rhs;
                for (std::size_t z = 0; z < k; ++z) {
                    BaseMap a = assoc(m.at(z, y), n.at(w, z), p.at(x, w));
                    BaseMap leg_np = np.cp[x * k + z].legs[w];  // N(w,z)(x)P(x,w) -> NP(x,z)
                    BaseMap step = compose(tensor_map(identity_map(m.at(z, y)), leg_np), a);
                    to_rhs.push_back(compose(rhs.cp[x * k + y].legs[z], step));
                }
                BaseMap arm = compose(cotuple(dist, to_rhs, rhs.graph.at(x, y)), *dist_inv);
                arms_w.push_back(std::move(arm));
            }
            comps.push_back(cotuple(lcp, arms_w, rhs.graph.at(x, y)));
        }
    std::vector<std::size_t> om(k);
    for (std::size_t i = 0; i < k; ++i) om[i] = i;
    return GraphMap{lhs.graph, rhs.graph, std::move(om), std::move(comps)};
}

// ---- fiber change ------------------------------------------------------------

PullbackResult graph_pullback(const SetMap& f, const VGraph& n) {
    require(f.dst == n.objects, "graph_pullback: target object set mismatch");
    for (std::size_t i : f.map) require(i < n.n(), "graph_pullback: map range");
    require(f.map.size() == f.src.size(), "graph_pullback: map size");
    std::vector<BaseValue> hom;
    hom.reserve(f.src.size() * f.src.size());
    for (std::size_t x = 0; x < f.src.size(); ++x)
        for (std::size_t y = 0; y < f.src.size(); ++y) hom.push_back(n.at(f.map[x], f.map[y]));
    PullbackResult out;
    out.graph = make_graph(n.base, f.src, std::move(hom));
    std::vector<BaseMap> comps;
    for (std::size_t x = 0; x < f.src.size(); ++x)
        for (std::size_t y = 0; y < f.src.size(); ++y)
            comps.push_back(identity_map(n.at(f.map[x], f.map[y])));
    out.counit = GraphMap{out.graph, n, f.map, std::move(comps)};
    validate_graph_map(out.counit);
    return out;
}

PushforwardResult graph_pushforward(const SetMap& f, const VGraph& m) {
    require(f.src == m.objects, "graph_pushforward: source object set mismatch");
    std::size_t np = f.dst.size();
    PushforwardResult out;
    out.preimages.resize(np * np);
    std::vector<BaseValue> hom;
    hom.reserve(np * np);
    for (std::size_t x = 0; x < np; ++x)
        for (std::size_t y = 0; y < np; ++y) {
            std::vector<BaseValue> parts;
            auto& pre = out.preimages[x * np + y];
            for (std::size_t xp = 0; xp < m.n(); ++xp)
                for (std::size_t yp = 0; yp < m.n(); ++yp)
                    if (f.map[xp] == x && f.map[yp] == y) {
                        pre.emplace_back(xp, yp);
                        parts.push_back(m.at(xp, yp));
                    }
            Coproduct cp = coproduct(m.base, parts);
            hom.push_back(cp.obj);
            out.cp.push_back(std::move(cp));
        }
    out.graph = make_graph(m.base, f.dst, std::move(hom));
    // unit: M -> f_*M over f, components = coproduct legs
    std::vector<BaseMap> comps(m.n() * m.n(), identity_map(initial_value(m.base)));
    for (std::size_t x = 0; x < np; ++x)
        for (std::size_t y = 0; y < np; ++y) {
            const auto& pre = out.preimages[x * np + y];
            for (std::size_t i = 0; i < pre.size(); ++i)
                comps[pre[i].first * m.n() + pre[i].second] = out.cp[x * np + y].legs[i];
        }
    out.unit = GraphMap{m, out.graph, f.map, std::move(comps)};
    validate_graph_map(out.unit);
    return out;
}

GraphMap adjoint_forward(const SetMap& f, const PushforwardResult& pf, const GraphMap& from_fstar) {
    // Graph_{S'}(f_*M, N) -> Graph_S(M, f*N): precompose with the unit.
    PullbackResult pb = graph_pullback(f, from_fstar.dst);
    GraphMap composite = compose(from_fstar, pf.unit);  // M -> N over f
    // repackage as identity-free map into f*N over S
    std::vector<std::size_t> om(f.src.size());
    for (std::size_t i = 0; i < om.size(); ++i) om[i] = i;
    std::vector<BaseMap> comps;
    for (std::size_t x = 0; x < f.src.size(); ++x)
        for (std::size_t y = 0; y < f.src.size(); ++y) {
            BaseMap c = composite.at(x, y);
            c.dst = pb.graph.at(x, y);  // same value by construction
            require(c.dst == composite.at(x, y).dst, "adjoint_forward: value mismatch");
            comps.push_back(std::move(c));
        }
    return make_graph_map(composite.src, pb.graph, std::move(om), std::move(comps));
}

GraphMap adjoint_backward(const SetMap& f, const PushforwardResult& pf, const VGraph& n,
                          const GraphMap& from_m) {
    // Graph_S(M, f*N) -> Graph_{S'}(f_*M, N): cotuple over preimages.
    require(from_m.dst == graph_pullback(f, n).graph, "adjoint_backward: target is not f*N");
    std::size_t np = n.n();
    std::vector<std::size_t> om(np);
    for (std::size_t i = 0; i < np; ++i) om[i] = i;
    std::vector<BaseMap> comps;
    for (std::size_t x = 0; x < np; ++x)
        for (std::size_t y = 0; y < np; ++y) {
            const auto& pre = pf.preimages[x * np + y];
            std::vector<BaseMap> arms;
            for (auto [xp, yp] : pre) {
                BaseMap c = from_m.at(xp, yp);
                c.dst = n.at(x, y);  // same value: f*N component
                arms.push_back(std::move(c));
            }
            comps.push_back(cotuple(pf.cp[x * np + y], arms, n.at(x, y)));
        }
    return make_graph_map(pf.graph, n, std::move(om), std::move(comps));
}

// ---- colimits ----------------------------------------------------------------

GraphColimit graph_coproduct(const BaseDescriptor& base, const std::vector<std::string>& objects,
                             const std::vector<VGraph>& parts) {
    std::size_t n = objects.size();
    for (const VGraph& g : parts) require(g.objects == objects, "graph_coproduct: object sets");
    GraphColimit out;
    std::vector<BaseValue> hom;
    std::vector<Coproduct> cps;
    for (std::size_t i = 0; i < n * n; ++i) {
        std::vector<BaseValue> vs;
        for (const VGraph& g : parts) vs.push_back(g.hom[i]);
        Coproduct cp = coproduct(base, vs);
        hom.push_back(cp.obj);
        cps.push_back(std::move(cp));
    }
    out.obj = make_graph(base, objects, std::move(hom));
    std::vector<std::size_t> om(n);
    for (std::size_t i = 0; i < n; ++i) om[i] = i;
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        std::vector<BaseMap> comps;
        for (std::size_t i = 0; i < n * n; ++i) comps.push_back(cps[i].legs[pi]);
        out.legs.push_back(GraphMap{parts[pi], out.obj, om, std::move(comps)});
    }
    return out;
}

namespace {

GraphColimit graph_colimit_homwise(const GraphMap& f, const GraphMap& g, bool is_pushout) {
    require(f.src == g.src, "graph colimit: span/pair mismatch");
    for (std::size_t i = 0; i < f.object_map.size(); ++i)
        require(f.object_map[i] == i && g.object_map[i] == i,
                "graph colimit: identity-on-objects required");
    std::size_t n = f.src.n();
    std::vector<BaseValue> hom(n * n, initial_value(f.src.base));
    std::vector<BaseMap> legb, legc;
    for (std::size_t i = 0; i < n * n; ++i) {
        if (is_pushout) {
            Pushout po = pushout(f.components[i], g.components[i]);
            hom[i] = po.obj;
            legb.push_back(po.from_b);
            legc.push_back(po.from_c);
        } else {
            require(f.dst == g.dst, "graph coequalizer: parallel pair required");
            Coequalizer ce = coequalizer(f.components[i], g.components[i]);
            hom[i] = ce.obj;
            legb.push_back(ce.q);
        }
    }
    GraphColimit out;
    out.obj = make_graph(f.src.base, f.src.objects, std::move(hom));
    std::vector<std::size_t> om(n);
    for (std::size_t i = 0; i < n; ++i) om[i] = i;
    out.legs.push_back(GraphMap{f.dst, out.obj, om, std::move(legb)});
    if (is_pushout) out.legs.push_back(GraphMap{g.dst, out.obj, om, std::move(legc)});
    return out;
}

}  // namespace

GraphColimit graph_pushout(const GraphMap& f, const GraphMap& g) {
    return graph_colimit_homwise(f, g, true);
}

GraphColimit graph_coequalizer(const GraphMap& f, const GraphMap& g) {
    return graph_colimit_homwise(f, g, false);
}

}  // namespace enricat
