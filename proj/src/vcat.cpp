#include "enricat/vcat.hpp"

#include <algorithm>
#include <sstream>

namespace enricat {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw BaseError(msg);
}

std::size_t unit_class_index(const BaseDescriptor& base) {
    if (base.kind != BaseKind::Fdch) return 0;
    // class of the unit cycle 1*e in H_0(S^0): digit 1
    return 1;
}

}  // namespace

VCategory make_category(VGraph graph, std::vector<BaseMap> comp, std::vector<BaseMap> idm) {
    TruncationScope trunc_scope;
    std::size_t n = graph.n();
    require(comp.size() == n * n * n, "make_category: comp table size");
    require(idm.size() == n, "make_category: idm size");
    VCategory k{std::move(graph), std::move(comp), std::move(idm), false};
    for (std::size_t x = 0; x < n; ++x) {
        require(k.idm[x].src == unit_value(k.graph.base), "make_category: idm source");
        require(k.idm[x].dst == k.hom(x, x), "make_category: idm target");
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const BaseMap& c = k.comp_at(x, y, z);
                require(c.src == tensor(k.hom(y, z), k.hom(x, y)), "make_category: comp source");
                require(c.dst == k.hom(x, z), "make_category: comp target");
            }
    return k;
}

VCategory discrete_category(const BaseDescriptor& base, std::vector<std::string> objects) {
    VGraph g = unit_graph(base, std::move(objects));
    std::size_t n = g.n();
    std::vector<BaseMap> comp;
    comp.reserve(n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                BaseValue src = tensor(g.at(y, z), g.at(x, y));
                if (x == y && y == z) {
                    comp.push_back(identity_map(g.at(x, x)));  // 1 (x) 1 == 1 strictly
                } else if (src.is_initial()) {
                    comp.push_back(initial_map(g.at(x, z)));
                } else {
                    // x == y or y == z with the other pair diagonal: unitors
                    comp.push_back(identity_map(g.at(x, z)));
                }
            }
    std::vector<BaseMap> idm;
    for (std::size_t x = 0; x < n; ++x) idm.push_back(identity_map(unit_value(base)));
    return make_category(std::move(g), std::move(comp), std::move(idm));
}

VFunctor make_functor(VCategory src, VCategory dst, GraphMap gm) {
    require(gm.src == src.graph && gm.dst == dst.graph, "make_functor: graph mismatch");
    VFunctor f{std::move(src), std::move(dst), std::move(gm)};
    PropertyReport rep = validate_functor(f);
    if (!rep.pass) throw BaseError("make_functor: " + rep.reason);
    return f;
}

VFunctor identity_functor(const VCategory& k) {
    return VFunctor{k, k, identity_graph_map(k.graph)};
}

VFunctor compose(const VFunctor& g, const VFunctor& f) {
    require(f.dst == g.src, "functor compose: middle mismatch");
    return VFunctor{f.src, g.dst, compose(g.gm, f.gm)};
}

PropertyReport validate_category(const VCategory& k) {
    TruncationScope trunc_scope;
    PropertyReport rep;
    if (k.truncated) {
        rep.skipped = true;
        rep.reason = "truncation";
        return rep;
    }
    std::size_t n = k.n();
    // unit laws
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            BaseMap left = compose(k.comp_at(x, y, y),
                                   tensor_map(k.idm[y], identity_map(k.hom(x, y))));
            if (!(left == identity_map(k.hom(x, y)))) {
                rep.reason = "left unit law fails";
                rep.witness = k.graph.objects[x] + "," + k.graph.objects[y];
                return rep;
            }
            BaseMap right = compose(k.comp_at(x, x, y),
                                    tensor_map(identity_map(k.hom(x, y)), k.idm[x]));
            if (!(right == identity_map(k.hom(x, y)))) {
                rep.reason = "right unit law fails";
                rep.witness = k.graph.objects[x] + "," + k.graph.objects[y];
                return rep;
            }
        }
    // associativity
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w) {
                    BaseMap lhs = compose(k.comp_at(x, y, w),
                                          tensor_map(k.comp_at(y, z, w), identity_map(k.hom(x, y))));
                    BaseMap rhs = compose(
                        k.comp_at(x, z, w),
                        compose(tensor_map(identity_map(k.hom(z, w)), k.comp_at(x, y, z)),
                                assoc(k.hom(z, w), k.hom(y, z), k.hom(x, y))));
                    if (!(lhs == rhs)) {
                        std::ostringstream os;
                        os << k.graph.objects[x] << "," << k.graph.objects[y] << ","
                           << k.graph.objects[z] << "," << k.graph.objects[w];
                        rep.reason = "associativity fails";
                        rep.witness = os.str();
                        return rep;
                    }
                }
    rep.pass = true;
    return rep;
}

PropertyReport validate_functor(const VFunctor& f) {
    TruncationScope trunc_scope;
    PropertyReport rep;
    validate_graph_map(f.gm);
    std::size_t n = f.src.n();
    for (std::size_t x = 0; x < n; ++x) {
        BaseMap lhs = compose(f.gm.at(x, x), f.src.idm[x]);
        if (!(lhs == f.dst.idm[f.gm.object_map[x]])) {
            rep.reason = "identity not preserved";
            rep.witness = f.src.graph.objects[x];
            return rep;
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                BaseMap lhs = compose(f.gm.at(x, z), f.src.comp_at(x, y, z));
                std::size_t fx = f.gm.object_map[x], fy = f.gm.object_map[y],
                            fz = f.gm.object_map[z];
                BaseMap rhs = compose(f.dst.comp_at(fx, fy, fz),
                                      tensor_map(f.gm.at(y, z), f.gm.at(x, y)));
                if (!(lhs == rhs)) {
                    rep.reason = "composition not preserved";
                    rep.witness = f.src.graph.objects[x] + "," + f.src.graph.objects[y] + "," +
                                  f.src.graph.objects[z];
                    return rep;
                }
            }
    rep.pass = true;
    return rep;
}

// ---- pi0 -------------------------------------------------------------------------

Pi0Category pi0_category(const VCategory& k) {
    TruncationScope trunc_scope;
    Pi0Category c;
    c.objects = k.graph.objects;
    std::size_t n = k.n();
    std::vector<Pi0Set> sets;
    sets.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) sets.push_back(pi0(k.hom(x, y)));
    for (const Pi0Set& s : sets) c.hom_count.push_back(s.count);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const Pi0Set& sf = sets[x * n + y];
                const Pi0Set& sg = sets[y * n + z];
                auto pairing = pi0_pairing(k.hom(y, z), k.hom(x, y));
                auto cmap = pi0_map(k.comp_at(x, y, z));
                std::vector<std::size_t> table(sg.count * sf.count);
                for (std::size_t g = 0; g < sg.count; ++g)
                    for (std::size_t f = 0; f < sf.count; ++f)
                        table[g * sf.count + f] = cmap[pairing[g * sf.count + f]];
                c.comp_table.push_back(std::move(table));
            }
    for (std::size_t x = 0; x < n; ++x) {
        auto m = pi0_map(k.idm[x]);
        c.id_elem.push_back(m[unit_class_index(k.graph.base)]);
    }
    return c;
}

PropertyReport validate_pi0_category(const Pi0Category& c) {
    PropertyReport rep;
    std::size_t n = c.n();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t f = 0; f < c.count(x, y); ++f) {
                if (c.compose_elems(x, y, y, c.id_elem[y], f) != f ||
                    c.compose_elems(x, x, y, f, c.id_elem[x]) != f) {
                    rep.reason = "pi0 unit law fails";
                    return rep;
                }
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w)
                    for (std::size_t f = 0; f < c.count(x, y); ++f)
                        for (std::size_t g = 0; g < c.count(y, z); ++g)
                            for (std::size_t h = 0; h < c.count(z, w); ++h) {
                                std::size_t hg = c.compose_elems(y, z, w, h, g);
                                std::size_t gf = c.compose_elems(x, y, z, g, f);
                                if (c.compose_elems(x, y, w, hg, f) !=
                                    c.compose_elems(x, z, w, h, gf)) {
                                    rep.reason = "pi0 associativity fails";
                                    return rep;
                                }
                            }
    rep.pass = true;
    return rep;
}

Pi0Functor pi0_functor(const VFunctor& f) {
    Pi0Functor out;
    out.object_map = f.gm.object_map;
    std::size_t n = f.src.n();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) out.elem_map.push_back(pi0_map(f.gm.at(x, y)));
    return out;
}

IsoWitness iso_in_pi0(const Pi0Category& c, std::size_t x, std::size_t y) {
    IsoWitness w;
    if (x == y) {
        w.found = true;
        w.fwd = w.bwd = c.id_elem[x];
        return w;
    }
    for (std::size_t f = 0; f < c.count(x, y); ++f)
        for (std::size_t g = 0; g < c.count(y, x); ++g) {
            if (c.compose_elems(x, y, x, g, f) == c.id_elem[x] &&
                c.compose_elems(y, x, y, f, g) == c.id_elem[y]) {
                w.found = true;
                w.fwd = f;
                w.bwd = g;
                return w;
            }
        }
    return w;
}

IsoWitness iso_in_pi0(const VCategory& k, std::size_t x, std::size_t y) {
    return iso_in_pi0(pi0_category(k), x, y);
}

// ---- fiber operations ---------------------------------------------------------------

CatPullback cat_pullback(const SetMap& f, const VCategory& k) {
    PullbackResult pb = graph_pullback(f, k.graph);
    std::size_t n = pb.graph.n();
    std::vector<BaseMap> comp;
    comp.reserve(n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                comp.push_back(k.comp_at(f.map[x], f.map[y], f.map[z]));
    std::vector<BaseMap> idm;
    for (std::size_t x = 0; x < n; ++x) idm.push_back(k.idm[f.map[x]]);
    CatPullback out;
    out.cat = make_category(pb.graph, std::move(comp), std::move(idm));
    out.cat.truncated = k.truncated;
    out.cartesian = VFunctor{out.cat, k, pb.counit};
    return out;
}

CatPushforward cat_pushforward_injective(const SetMap& f, const VCategory& k) {
    TruncationScope trunc_scope;
    {
        std::vector<std::size_t> seen(f.dst.size(), 0);
        for (std::size_t i : f.map) {
            require(i < f.dst.size(), "pushforward: map range");
            require(!seen[i]++, "pushforward: injective map required");
        }
    }
    const BaseDescriptor& base = k.graph.base;
    std::size_t np = f.dst.size();
    std::vector<std::size_t> back(np, SIZE_MAX);
    for (std::size_t i = 0; i < f.map.size(); ++i) back[f.map[i]] = i;
    std::vector<BaseValue> hom;
    for (std::size_t x = 0; x < np; ++x)
        for (std::size_t y = 0; y < np; ++y) {
            if (back[x] != SIZE_MAX && back[y] != SIZE_MAX)
                hom.push_back(k.hom(back[x], back[y]));
            else if (x == y)
                hom.push_back(unit_value(base));
            else
                hom.push_back(initial_value(base));
        }
    VGraph g = make_graph(base, f.dst, std::move(hom));
    std::vector<BaseMap> comp;
    for (std::size_t x = 0; x < np; ++x)
        for (std::size_t y = 0; y < np; ++y)
            for (std::size_t z = 0; z < np; ++z) {
                BaseValue src = tensor(g.at(y, z), g.at(x, y));
                if (back[x] != SIZE_MAX && back[y] != SIZE_MAX && back[z] != SIZE_MAX) {
                    comp.push_back(k.comp_at(back[x], back[y], back[z]));
                } else if (src.is_initial()) {
                    comp.push_back(initial_map(g.at(x, z)));
                } else {
                    // some object is new: the only non-initial cases are unit laws
                    comp.push_back(identity_map(g.at(x, z)));
                }
            }
    std::vector<BaseMap> idm;
    for (std::size_t x = 0; x < np; ++x)
        idm.push_back(back[x] != SIZE_MAX ? k.idm[back[x]] : identity_map(unit_value(base)));
    CatPushforward out;
    out.cat = make_category(std::move(g), std::move(comp), std::move(idm));
    out.cat.truncated = k.truncated;
    std::vector<BaseMap> comps;
    for (std::size_t x = 0; x < k.n(); ++x)
        for (std::size_t y = 0; y < k.n(); ++y) comps.push_back(identity_map(k.hom(x, y)));
    GraphMap gm{k.graph, out.cat.graph, f.map, std::move(comps)};
    validate_graph_map(gm);
    out.cocartesian = VFunctor{k, out.cat, std::move(gm)};
    return out;
}

VCategory full_subcategory(const VCategory& k, const std::vector<std::string>& objects) {
    std::vector<std::size_t> idx;
    for (const std::string& s : objects) idx.push_back(k.graph.index_of(s));
    require(std::is_sorted(idx.begin(), idx.end()), "full_subcategory: objects must be sorted");
    std::size_t n = idx.size();
    std::vector<BaseValue> hom;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) hom.push_back(k.hom(idx[x], idx[y]));
    VGraph g = make_graph(k.graph.base, objects, std::move(hom));
    std::vector<BaseMap> comp;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) comp.push_back(k.comp_at(idx[x], idx[y], idx[z]));
    std::vector<BaseMap> idm;
    for (std::size_t x = 0; x < n; ++x) idm.push_back(k.idm[idx[x]]);
    VCategory out = make_category(std::move(g), std::move(comp), std::move(idm));
    out.truncated = k.truncated;
    return out;
}

VCategory opposite(const VCategory& k) {
    TruncationScope trunc_scope;
    std::size_t n = k.n();
    std::vector<BaseValue> hom;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) hom.push_back(k.hom(y, x));
    VGraph g = make_graph(k.graph.base, k.graph.objects, std::move(hom));
    std::vector<BaseMap> comp;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                // K^op(y,z) (x) K^op(x,y) = K(z,y) (x) K(y,x) --sym--> K(y,x) (x) K(z,y)
                BaseMap sym = symmetry(k.hom(z, y), k.hom(y, x));
                comp.push_back(compose(k.comp_at(z, y, x), sym));
            }
    VCategory out = make_category(std::move(g), std::move(comp), k.idm);
    out.truncated = k.truncated;
    return out;
}

// ---- reduced composition ----------------------------------------------------------------

ModTensor mod_tensor(const BaseValue& m, const BaseValue& a, const BaseValue& nn,
                     const BaseMap& rho, const BaseMap& lambda) {
    TruncationScope trunc_scope;
    require(rho.src == tensor(m, a) && rho.dst == m, "mod_tensor: rho shape");
    require(lambda.src == tensor(a, nn) && lambda.dst == nn, "mod_tensor: lambda shape");
    BaseMap arm1 = tensor_map(rho, identity_map(nn));
    BaseMap arm2 = compose(tensor_map(identity_map(m), lambda), assoc(m, a, nn));
    ModTensor out;
    out.ce = coequalizer(arm1, arm2);
    out.obj = out.ce.obj;
    out.q = out.ce.q;
    return out;
}

BaseMap mod_tensor_map(const ModTensor& src, const ModTensor& dst, const BaseMap& u,
                       const BaseMap& v) {
    TruncationScope trunc_scope;
    BaseMap h = compose(dst.q, tensor_map(u, v));
    return induced_along_surjection(src.q, h);
}

ReducedCompData reduced_composition(const VCategory& k, std::size_t x, std::size_t y,
                                    std::size_t z) {
    const BaseValue& M = k.hom(y, z);
    const BaseValue& A = k.hom(y, y);
    const BaseValue& N = k.hom(x, y);
    ModTensor mt = mod_tensor(M, A, N, k.comp_at(y, y, z), k.comp_at(x, y, y));
    ReducedCompData out;
    out.quotient = mt.obj;
    out.q = mt.q;
    out.cbar = coeq_induced(mt.ce, k.comp_at(x, y, z));
    out.ce = mt.ce;
    return out;
}

}  // namespace enricat
