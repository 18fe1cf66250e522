// V-graphs over a finite object set, the matrix-product tensor (x)_S with
// (M (x)_S N)(x, y) = coprod_z M(z, y) (x) N(x, z), and the fiber-change
// functors along maps of object sets.

#pragma once

#include <functional>
#include <map>

#include "enricat/words.hpp"

namespace enricat {

// Object labels are strings held in ascending order; the order fixes all
// coproduct summand orders, making results canonical.
struct VGraph {
    BaseDescriptor base;
    std::vector<std::string> objects;  // sorted, unique
    std::vector<BaseValue> hom;        // hom[xi * n + yi] = M(x, y)

    std::size_t n() const { return objects.size(); }
    std::size_t index_of(const std::string& label) const;
    const BaseValue& at(std::size_t xi, std::size_t yi) const { return hom[xi * n() + yi]; }
    BaseValue& at(std::size_t xi, std::size_t yi) { return hom[xi * n() + yi]; }

    bool operator==(const VGraph& o) const = default;
};

VGraph make_graph(const BaseDescriptor& base, std::vector<std::string> objects,
                  std::vector<BaseValue> hom);
VGraph initial_graph(const BaseDescriptor& base, std::vector<std::string> objects);
// 1_S : unit on the diagonal, initial off it.
VGraph unit_graph(const BaseDescriptor& base, std::vector<std::string> objects);
// V placed at the single pair (x, y), initial elsewhere.
VGraph single_edge_graph(const BaseDescriptor& base, std::vector<std::string> objects,
                         const std::string& x, const std::string& y, const BaseValue& v);

struct GraphMap {
    VGraph src;
    VGraph dst;
    std::vector<std::size_t> object_map;  // src object index -> dst object index
    std::vector<BaseMap> components;      // [xi * n + yi] : M(x,y) -> N(phi x, phi y)

    const BaseMap& at(std::size_t xi, std::size_t yi) const {
        return components[xi * src.n() + yi];
    }
    bool operator==(const GraphMap& o) const = default;
};

GraphMap make_graph_map(VGraph src, VGraph dst, std::vector<std::size_t> object_map,
                        std::vector<BaseMap> components);
GraphMap identity_graph_map(const VGraph& g);
GraphMap compose(const GraphMap& g, const GraphMap& f);
void validate_graph_map(const GraphMap& f);

// ---- tensor over S --------------------------------------------------------

// Summand bookkeeping for (M (x)_S N)(x, y): the z-indexed coproduct.
struct TensorS {
    VGraph graph;
    // cp[xi * n + yi]: coproduct over z (in object order) of M(z,y) (x) N(x,z)
    std::vector<Coproduct> cp;
};
TensorS tensor_S(const VGraph& m, const VGraph& n);
// Functorial action on identity-on-objects graph maps over the same S.
GraphMap tensor_S_map(const GraphMap& f, const GraphMap& g);

// Canonical isomorphisms (as identity-on-objects graph maps).
GraphMap left_unitor_S(const VGraph& m);   // 1_S (x)_S M -> M
GraphMap right_unitor_S(const VGraph& m);  // M (x)_S 1_S -> M
GraphMap assoc_S(const VGraph& m, const VGraph& n, const VGraph& p);

// ---- fiber change ----------------------------------------------------------

// f is given by the index map S -> S' on sorted labels.
struct SetMap {
    std::vector<std::string> src;  // sorted
    std::vector<std::string> dst;  // sorted
    std::vector<std::size_t> map;  // index map
};

struct PullbackResult {
    VGraph graph;       // f*N over S
    GraphMap counit;    // f*N -> N, f on objects, identity components
};
PullbackResult graph_pullback(const SetMap& f, const VGraph& n);

struct PushforwardResult {
    VGraph graph;  // f_*M over S'
    // summand structure: cp[x'i * n' + y'i] over preimage pairs in order
    std::vector<Coproduct> cp;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> preimages;
    GraphMap unit;  // M -> f*(f_* M) seen as a map M -> f_*M over f
};
PushforwardResult graph_pushforward(const SetMap& f, const VGraph& m);

// Adjunction converters: natural bijection Graph_{S'}(f_*M, N) <-> Graph_S(M, f*N).
GraphMap adjoint_forward(const SetMap& f, const PushforwardResult& pf, const GraphMap& from_fstar);
GraphMap adjoint_backward(const SetMap& f, const PushforwardResult& pf, const VGraph& n,
                          const GraphMap& from_m);

// ---- colimits ---------------------------------------------------------------

struct GraphColimit {
    VGraph obj;
    std::vector<GraphMap> legs;
};
GraphColimit graph_coproduct(const BaseDescriptor& base, const std::vector<std::string>& objects,
                             const std::vector<VGraph>& parts);
GraphColimit graph_pushout(const GraphMap& f, const GraphMap& g);      // identity on objects
GraphColimit graph_coequalizer(const GraphMap& f, const GraphMap& g);  // identity on objects

}  // namespace enricat
