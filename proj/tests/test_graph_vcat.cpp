#include "doctest.h"

#include "enricat/vcat.hpp"

using namespace enricat;

namespace {

BaseDescriptor FS() { return BaseDescriptor::finset(); }
BaseDescriptor BO() { return BaseDescriptor::booleans(); }

// Bool category from a reflexive-transitive relation table.
VCategory bool_preorder(std::vector<std::string> objects, const std::vector<int>& rel) {
    BaseDescriptor base = BO();
    std::size_t n = objects.size();
    std::vector<BaseValue> hom;
    for (std::size_t i = 0; i < n * n; ++i) hom.push_back(bool_value(rel[i] != 0));
    VGraph g = make_graph(base, std::move(objects), std::move(hom));
    std::vector<BaseMap> comp;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                comp.push_back(bool_map(tensor(g.at(y, z), g.at(x, y)), g.at(x, z)));
    std::vector<BaseMap> idm;
    for (std::size_t x = 0; x < n; ++x) idm.push_back(bool_map(bool_value(true), g.at(x, x)));
    return make_category(std::move(g), std::move(comp), std::move(idm));
}

// FinSet category: monoid-enriched preorder, hom(x,y) = M when x <= y.
// mult is the multiplication table of a monoid of size m with unit 0.
VCategory finset_enriched_preorder(std::vector<std::string> objects, const std::vector<int>& rel,
                                   std::size_t m, const std::vector<std::size_t>& mult) {
    BaseDescriptor base = FS();
    std::size_t n = objects.size();
    std::vector<BaseValue> hom;
    for (std::size_t i = 0; i < n * n; ++i)
        hom.push_back(finset_value(rel[i] ? m : 0));
    VGraph g = make_graph(base, std::move(objects), std::move(hom));
    std::vector<BaseMap> comp;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                BaseValue src = tensor(g.at(y, z), g.at(x, y));
                if (src.card == 0) {
                    comp.push_back(initial_map(g.at(x, z)));
                } else {
                    std::vector<std::size_t> t(src.card);
                    for (std::size_t a = 0; a < m; ++a)
                        for (std::size_t b = 0; b < m; ++b) t[a * m + b] = mult[a * m + b];
                    comp.push_back(finset_map(src, g.at(x, z), std::move(t)));
                }
            }
    std::vector<BaseMap> idm;
    for (std::size_t x = 0; x < n; ++x)
        idm.push_back(finset_map(finset_value(1), g.at(x, x), {0}));
    return make_category(std::move(g), std::move(comp), std::move(idm));
}

const std::vector<std::size_t> kZ2{0, 1, 1, 0};  // Z/2 multiplication

}  // namespace

TEST_CASE("tensor_S on singleton S is the plain tensor") {
    VGraph m = single_edge_graph(FS(), {"x"}, "x", "x", finset_value(2));
    VGraph n = single_edge_graph(FS(), {"x"}, "x", "x", finset_value(3));
    TensorS t = tensor_S(m, n);
    CHECK(t.graph.at(0, 0).card == 6);
}

TEST_CASE("tensor_S counts summands over two objects") {
    // all homs 2-element sets: (M (x)_S N)(x,y) has 2*2 + 2*2 = 8 elements
    std::vector<BaseValue> hom(4, finset_value(2));
    VGraph m = make_graph(FS(), {"x", "y"}, hom);
    TensorS t = tensor_S(m, m);
    CHECK(t.graph.at(0, 1).card == 8);
}

TEST_CASE("tensor_S with one nonzero hom each") {
    // M nonzero only at (x,y), N nonzero only at (x,x):
    // (M (x)_S N)(x,y) = M(x,y) (x) N(x,x)
    VGraph m = single_edge_graph(FS(), {"x", "y"}, "x", "y", finset_value(2));
    VGraph n = single_edge_graph(FS(), {"x", "y"}, "x", "x", finset_value(3));
    TensorS t = tensor_S(m, n);
    CHECK(t.graph.at(0, 1).card == 6);
    CHECK(t.graph.at(0, 0).card == 0);
    CHECK(t.graph.at(1, 1).card == 0);
}

TEST_CASE("unit graph and unitors") {
    VGraph one = unit_graph(BO(), {"x", "y"});
    CHECK(one.at(0, 0).truth);
    CHECK_FALSE(one.at(0, 1).truth);

    std::vector<BaseValue> hom(4, finset_value(2));
    VGraph m = make_graph(FS(), {"x", "y"}, hom);
    GraphMap lu = left_unitor_S(m);
    GraphMap ru = right_unitor_S(m);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(invert(lu.components[i]).has_value());
        CHECK(invert(ru.components[i]).has_value());
    }
}

TEST_CASE("assoc_S is an isomorphism on instances") {
    std::vector<BaseValue> hom{finset_value(1), finset_value(2), finset_value(0), finset_value(2)};
    VGraph m = make_graph(FS(), {"x", "y"}, hom);
    GraphMap a = assoc_S(m, m, m);
    for (const BaseMap& c : a.components) CHECK(invert(c).has_value());
    // and it matches the two iterated tensors
    TensorS mm = tensor_S(m, m);
    TensorS lhs = tensor_S(mm.graph, m);
    TensorS rhs = tensor_S(m, mm.graph);
    CHECK(a.src == lhs.graph);
    CHECK(a.dst == rhs.graph);
}

TEST_CASE("graph pullback basics") {
    VGraph n = single_edge_graph(FS(), {"z"}, "z", "z", finset_value(3));
    SetMap f{{"a", "b"}, {"z"}, {0, 0}};
    PullbackResult pb = graph_pullback(f, n);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) CHECK(pb.graph.at(x, y).card == 3);

    SetMap idm{{"z"}, {"z"}, {0}};
    CHECK(graph_pullback(idm, n).graph == n);
}

TEST_CASE("pullback preserves composition of set maps") {
    std::vector<BaseValue> hom(9, finset_value(2));
    VGraph n = make_graph(FS(), {"p", "q", "r"}, hom);
    SetMap g{{"m", "n"}, {"p", "q", "r"}, {0, 2}};
    SetMap f{{"a", "b"}, {"m", "n"}, {1, 1}};
    PullbackResult gstar = graph_pullback(g, n);
    PullbackResult then_f = graph_pullback(f, gstar.graph);
    SetMap gf{{"a", "b"}, {"p", "q", "r"}, {2, 2}};
    PullbackResult direct = graph_pullback(gf, n);
    CHECK(then_f.graph == direct.graph);
}

TEST_CASE("graph pushforward counts preimage pairs") {
    // collapsing {0,1} -> {0} with singleton homs: f_*M(0,0) has 4 elements
    std::vector<BaseValue> hom(4, finset_value(1));
    VGraph m = make_graph(FS(), {"0", "1"}, hom);
    SetMap f{{"0", "1"}, {"0"}, {0, 0}};
    PushforwardResult pf = graph_pushforward(f, m);
    CHECK(pf.graph.at(0, 0).card == 4);
}

TEST_CASE("pushforward along injective gets initial padding") {
    VGraph m = single_edge_graph(FS(), {"a"}, "a", "a", finset_value(2));
    SetMap f{{"a"}, {"a", "b"}, {0}};
    PushforwardResult pf = graph_pushforward(f, m);
    CHECK(pf.graph.at(0, 0).card == 2);
    CHECK(pf.graph.at(0, 1).card == 0);
    CHECK(pf.graph.at(1, 1).card == 0);
}

TEST_CASE("adjunction round trip is the identity") {
    std::vector<BaseValue> hom{finset_value(1), finset_value(2), finset_value(2), finset_value(1)};
    VGraph m = make_graph(FS(), {"a", "b"}, hom);
    SetMap f{{"a", "b"}, {"z"}, {0, 0}};
    PushforwardResult pf = graph_pushforward(f, m);
    VGraph n = single_edge_graph(FS(), {"z"}, "z", "z", finset_value(6));
    // any map f_*M -> N
    std::vector<std::size_t> t(pf.graph.at(0, 0).card);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i % 6;
    GraphMap from_fstar = make_graph_map(
        pf.graph, n, {0}, {finset_map(pf.graph.at(0, 0), n.at(0, 0), std::move(t))});
    GraphMap fwd = adjoint_forward(f, pf, from_fstar);
    GraphMap back = adjoint_backward(f, pf, n, fwd);
    CHECK(back == from_fstar);
}

TEST_CASE("bool preorder is a valid category") {
    // 0 <= 1
    VCategory k = bool_preorder({"0", "1"}, {1, 1, 0, 1});
    CHECK(validate_category(k).pass);
    Pi0Category p = pi0_category(k);
    CHECK(p.count(0, 1) == 1);
    CHECK(p.count(1, 0) == 0);
    CHECK(validate_pi0_category(p).pass);
}

TEST_CASE("finset category validates and corrupting composition is caught") {
    VCategory k = finset_enriched_preorder({"0", "1"}, {1, 1, 0, 1}, 2, kZ2);
    CHECK(validate_category(k).pass);
    // corrupt one composition entry
    VCategory bad = k;
    for (auto& c : bad.comp)
        if (c.src.card == 4 && c.table[0] == 0) {
            c.table[0] = 1;
            break;
        }
    PropertyReport rep = validate_category(bad);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("discrete category = unit graph category passes") {
    CHECK(validate_category(discrete_category(FS(), {"a", "b", "c"})).pass);
    CHECK(validate_category(discrete_category(BaseDescriptor::fdch(2, 0, 2), {"a", "b"})).pass);
}

TEST_CASE("pi0_category of a finset category is the category itself") {
    VCategory k = finset_enriched_preorder({"0", "1"}, {1, 1, 0, 1}, 2, kZ2);
    Pi0Category p = pi0_category(k);
    CHECK(p.count(0, 0) == 2);
    CHECK(p.count(0, 1) == 2);
    CHECK(p.count(1, 0) == 0);
    CHECK(validate_pi0_category(p).pass);
}

TEST_CASE("iso_in_pi0") {
    // x <= y <= x: isomorphic
    VCategory k = bool_preorder({"x", "y"}, {1, 1, 1, 1});
    CHECK(iso_in_pi0(k, 0, 1).found);
    // discrete: not
    VCategory d = bool_preorder({"x", "y"}, {1, 0, 0, 1});
    CHECK_FALSE(iso_in_pi0(d, 0, 1).found);
    // reflexive
    CHECK(iso_in_pi0(d, 0, 0).found);
}

TEST_CASE("iso_in_pi0 is symmetric and transitive on a three-chain") {
    VCategory k = bool_preorder({"x", "y", "z"}, {1, 1, 1, 1, 1, 1, 1, 1, 1});
    auto w01 = iso_in_pi0(k, 0, 1);
    auto w10 = iso_in_pi0(k, 1, 0);
    auto w02 = iso_in_pi0(k, 0, 2);
    CHECK(w01.found);
    CHECK(w10.found);
    CHECK(w02.found);
}

TEST_CASE("cat_pullback along collapse makes an interval") {
    VCategory k = finset_enriched_preorder({"z"}, {1}, 2, kZ2);
    SetMap f{{"0", "1"}, {"z"}, {0, 0}};
    CatPullback pb = cat_pullback(f, k);
    CHECK(validate_category(pb.cat).pass);
    CHECK(validate_functor(pb.cartesian).pass);
    CHECK(iso_in_pi0(pb.cat, 0, 1).found);
}

TEST_CASE("cat_pushforward_injective pads with units and initials") {
    VCategory k = finset_enriched_preorder({"a"}, {1}, 2, kZ2);
    SetMap f{{"a"}, {"a", "b"}, {0}};
    CatPushforward pf = cat_pushforward_injective(f, k);
    CHECK(validate_category(pf.cat).pass);
    CHECK(validate_functor(pf.cocartesian).pass);
    CHECK(pf.cat.hom(0, 0).card == 2);
    CHECK(pf.cat.hom(0, 1).card == 0);
    CHECK(pf.cat.hom(1, 1).card == 1);
    // unit K -> f* f_* K is the identity
    CatPullback round = cat_pullback(f, pf.cat);
    CHECK(round.cat == k);
    // non-injective rejected
    SetMap bad{{"a", "b"}, {"z"}, {0, 0}};
    CHECK_THROWS_AS((void)cat_pushforward_injective(bad, pf.cat), BaseError);
}

TEST_CASE("empty source pushforward gives the discrete category") {
    VCategory empty = discrete_category(FS(), {});
    SetMap f{{}, {"p", "q"}, {}};
    CatPushforward pf = cat_pushforward_injective(f, empty);
    CHECK(pf.cat == discrete_category(FS(), {"p", "q"}));
}

TEST_CASE("full subcategory and opposite") {
    VCategory k = bool_preorder({"x", "y"}, {1, 1, 0, 1});
    VCategory full = full_subcategory(k, {"x", "y"});
    CHECK(full == k);
    VCategory op = opposite(k);
    CHECK(validate_category(op).pass);
    CHECK(op.hom(1, 0).truth);
    CHECK_FALSE(op.hom(0, 1).truth);
    CHECK(opposite(op) == k);
}

TEST_CASE("opposite of opposite on an fdch category") {
    auto B = BaseDescriptor::fdch(3, 0, 2);
    VCategory k = discrete_category(B, {"a", "b"});
    VCategory op2 = opposite(opposite(k));
    CHECK(op2 == k);
}

TEST_CASE("reduced composition is iso when x == y or y == z") {
    VCategory k = finset_enriched_preorder({"0", "1"}, {1, 1, 0, 1}, 2, kZ2);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t z = 0; z < 2; ++z) {
            if (k.hom(x, z).card == 0) continue;
            ReducedCompData rc1 = reduced_composition(k, x, x, z);
            CHECK(invert(rc1.cbar).has_value());
            ReducedCompData rc2 = reduced_composition(k, x, z, z);
            CHECK(invert(rc2.cbar).has_value());
        }
}

TEST_CASE("reduced composition factors comp through the quotient") {
    VCategory k = finset_enriched_preorder({"0", "1"}, {1, 1, 0, 1}, 2, kZ2);
    ReducedCompData rc = reduced_composition(k, 0, 1, 1);
    CHECK(compose(rc.cbar, rc.q) == k.comp_at(0, 1, 1));
}

TEST_CASE("pi0_functor commutes with tables for an identity functor") {
    VCategory k = finset_enriched_preorder({"0", "1"}, {1, 1, 0, 1}, 2, kZ2);
    Pi0Functor pf = pi0_functor(identity_functor(k));
    for (const auto& em : pf.elem_map)
        for (std::size_t i = 0; i < em.size(); ++i) CHECK(em[i] == i);
}
