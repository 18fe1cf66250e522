// V-categories and V-functors: axiom validation, pi0 categories, fiber
// operations, full subcategories, opposites, and reduced composition
// (the tensor over the endomorphism monoid of the middle object).

#pragma once

#include "enricat/graph.hpp"

namespace enricat {

struct VCategory {
    VGraph graph;
    // comp[(xi*n + yi)*n + zi] : K(y,z) (x) K(x,y) -> K(x,z)
    std::vector<BaseMap> comp;
    std::vector<BaseMap> idm;  // idm[x] : unit -> K(x,x)
    // Set by the colimit engines when a word/stage bound dropped non-initial
    // content; verifiers treat such categories as partial records.
    bool truncated = false;

    std::size_t n() const { return graph.n(); }
    const BaseMap& comp_at(std::size_t x, std::size_t y, std::size_t z) const {
        return comp[(x * n() + y) * n() + z];
    }
    const BaseValue& hom(std::size_t x, std::size_t y) const { return graph.at(x, y); }
    bool operator==(const VCategory& o) const = default;
};

struct VFunctor {
    VCategory src;
    VCategory dst;
    GraphMap gm;

    bool operator==(const VFunctor& o) const = default;
};

struct PropertyReport {
    bool pass = false;
    bool skipped = false;
    std::string reason;   // skip reason or failure witness description
    std::string witness;
};

VCategory make_category(VGraph graph, std::vector<BaseMap> comp, std::vector<BaseMap> idm);
// 1_S as a category: the initial object of Cat_S.
VCategory discrete_category(const BaseDescriptor& base, std::vector<std::string> objects);
VFunctor make_functor(VCategory src, VCategory dst, GraphMap gm);
VFunctor identity_functor(const VCategory& k);
VFunctor compose(const VFunctor& g, const VFunctor& f);

PropertyReport validate_category(const VCategory& k);
PropertyReport validate_functor(const VFunctor& f);

// ---- pi0 ---------------------------------------------------------------------

struct Pi0Category {
    std::vector<std::string> objects;
    std::vector<std::size_t> hom_count;               // n*n
    std::vector<std::vector<std::size_t>> comp_table; // [(x,y,z)][g * |hom(x,y)| + f]
    std::vector<std::size_t> id_elem;

    std::size_t n() const { return objects.size(); }
    std::size_t count(std::size_t x, std::size_t y) const { return hom_count[x * n() + y]; }
    std::size_t compose_elems(std::size_t x, std::size_t y, std::size_t z, std::size_t g,
                              std::size_t f) const {
        return comp_table[(x * n() + y) * n() + z][g * count(x, y) + f];
    }
    bool operator==(const Pi0Category& o) const = default;
};

Pi0Category pi0_category(const VCategory& k);
PropertyReport validate_pi0_category(const Pi0Category& c);
// Ordinary functor on pi0 induced by a V-functor: element tables per pair.
struct Pi0Functor {
    std::vector<std::size_t> object_map;
    std::vector<std::vector<std::size_t>> elem_map;  // per (x,y) of the source
};
Pi0Functor pi0_functor(const VFunctor& f);

struct IsoWitness {
    bool found = false;
    std::size_t fwd = 0;  // class in pi0 K(x,y)
    std::size_t bwd = 0;  // class in pi0 K(y,x)
};
IsoWitness iso_in_pi0(const VCategory& k, std::size_t x, std::size_t y);
IsoWitness iso_in_pi0(const Pi0Category& c, std::size_t x, std::size_t y);

// ---- fiber operations -----------------------------------------------------------

struct CatPullback {
    VCategory cat;
    VFunctor cartesian;  // f*K -> K
};
CatPullback cat_pullback(const SetMap& f, const VCategory& k);

struct CatPushforward {
    VCategory cat;
    VFunctor cocartesian;  // K -> f_*K
};
CatPushforward cat_pushforward_injective(const SetMap& f, const VCategory& k);

VCategory full_subcategory(const VCategory& k, const std::vector<std::string>& objects);
VCategory opposite(const VCategory& k);

// ---- reduced composition ----------------------------------------------------------

struct ReducedCompData {
    BaseValue quotient;  // K(y,z) (x)_{K(y,y)} K(x,y)
    BaseMap q;           // K(y,z) (x) K(x,y) -> quotient
    BaseMap cbar;        // quotient -> K(x,z)
    Coequalizer ce;      // retained for induced maps
};
ReducedCompData reduced_composition(const VCategory& k, std::size_t x, std::size_t y, std::size_t z);

// Tensor over a monoid inside a category: M (x)_A N for module structures
// given by arbitrary action maps (validated shapes only).
struct ModTensor {
    BaseValue obj;
    BaseMap q;  // M (x) N -> obj
    Coequalizer ce;
};
ModTensor mod_tensor(const BaseValue& m, const BaseValue& a, const BaseValue& nn,
                     const BaseMap& rho /* M(x)A -> M */, const BaseMap& lambda /* A(x)N -> N */);

// u (x)_A v on the quotients (balancedness checked by the descent).
BaseMap mod_tensor_map(const ModTensor& src, const ModTensor& dst, const BaseMap& u,
                       const BaseMap& v);

}  // namespace enricat
