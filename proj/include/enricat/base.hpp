// The concrete symmetric monoidal model bases: Bool (poset {false <= true}
// with AND), FinSet (finite sets with cartesian product, trivial model
// structure), FDCh(p) (chain complexes over F_p supported in a configured
// degree window, projective model structure).
//
// Values and maps are immutable after construction and compared syntactically,
// so every derived construction picks canonical bases / labelings.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "enricat/gfp.hpp"

namespace enricat {

using gfp::Mat;

enum class BaseKind { Bool, FinSet, Fdch };

struct BaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an FDCh result would have support outside the configured
// window. Never silently truncated outside the colimits engine.
struct DegreeOverflow : BaseError {
    using BaseError::BaseError;
};

struct BaseDescriptor {
    BaseKind kind = BaseKind::FinSet;
    int p = 2;       // Fdch only
    int deg_lo = 0;  // Fdch only: inclusive window
    int deg_hi = 0;

    bool operator==(const BaseDescriptor& o) const = default;

    int width() const { return deg_hi - deg_lo + 1; }
    std::string str() const;

    static BaseDescriptor booleans() { return {BaseKind::Bool, 0, 0, 0}; }
    static BaseDescriptor finset() { return {BaseKind::FinSet, 0, 0, 0}; }
    static BaseDescriptor fdch(int p, int lo, int hi) {
        if (hi < lo) throw BaseError("fdch window empty");
        return {BaseKind::Fdch, p, lo, hi};
    }
};

// An object of the base category.
//  Bool:   truth
//  FinSet: card, elements are 0..card-1
//  Fdch:   dims[i] = dim in degree deg_lo+i; diff[i] : X_{lo+i} -> X_{lo+i-1}
//          (diff[0] is absent; the differential leaving the window bottom is
//          forced to be zero).
struct BaseValue {
    BaseDescriptor base;
    bool truth = false;
    std::size_t card = 0;
    std::vector<int> dims;
    std::vector<Mat> diff;  // size == dims.size(), diff[0] unused (0x0)

    bool operator==(const BaseValue& o) const = default;

    int dim_at(int degree) const;
    const Mat& diff_at(int degree) const;  // d_degree : X_degree -> X_{degree-1}
    int total_dim() const;
    bool is_initial() const;
    std::string str() const;
};

// A morphism of the base category.
//  Bool:   existence is the witness (requires !src.truth || dst.truth)
//  FinSet: table[i] in [0, dst.card)
//  Fdch:   mats[i] : src degree lo+i -> dst degree lo+i, chain map
struct BaseMap {
    BaseValue src;
    BaseValue dst;
    std::vector<std::size_t> table;
    std::vector<Mat> mats;

    bool operator==(const BaseMap& o) const = default;

    const Mat& mat_at(int degree) const;
    std::string str() const;
};

// ---- constructors -----------------------------------------------------

BaseValue bool_value(bool truth);
BaseValue finset_value(std::size_t card);
// dims_by_degree[d - lo] etc.; validates d*d = 0 and shapes.
BaseValue fdch_value(const BaseDescriptor& base, std::vector<int> dims, std::vector<Mat> diff);
// Complex with a single F_p in the given degree.
BaseValue fdch_sphere(const BaseDescriptor& base, int degree);
// Contractible F_p -> F_p in degrees (top, top-1), identity differential.
BaseValue fdch_disk(const BaseDescriptor& base, int top_degree);

BaseValue initial_value(const BaseDescriptor& base);
BaseValue unit_value(const BaseDescriptor& base);

BaseMap bool_map(const BaseValue& src, const BaseValue& dst);
BaseMap finset_map(const BaseValue& src, const BaseValue& dst, std::vector<std::size_t> table);
BaseMap fdch_map(const BaseValue& src, const BaseValue& dst, std::vector<Mat> mats);

BaseMap identity_map(const BaseValue& v);
BaseMap initial_map(const BaseValue& v);  // from initial object
BaseMap zero_map(const BaseValue& src, const BaseValue& dst);  // Fdch only
BaseMap compose(const BaseMap& g, const BaseMap& f);  // g after f

void validate_value(const BaseValue& v);
void validate_map(const BaseMap& f);

// ---- monoidal structure ------------------------------------------------

BaseValue tensor(const BaseValue& a, const BaseValue& b);
BaseMap tensor_map(const BaseMap& f, const BaseMap& g);
// (a (x) b) (x) c -> a (x) (b (x) c)
BaseMap assoc(const BaseValue& a, const BaseValue& b, const BaseValue& c);
// (left, right): 1 (x) a -> a and a (x) 1 -> a
std::pair<BaseMap, BaseMap> unitors(const BaseValue& a);
// a (x) b -> b (x) a (Koszul signs for Fdch)
BaseMap symmetry(const BaseValue& a, const BaseValue& b);

// Widen an Fdch value/map into a larger configured window (same p).
BaseValue widen(const BaseValue& v, const BaseDescriptor& wider);
BaseMap widen(const BaseMap& f, const BaseDescriptor& wider);

// Truncating tensor: Fdch blocks landing above the window top are dropped and
// `dropped` is set. Only the colimits engine may use these; degrees below the
// window bottom still raise DegreeOverflow.
BaseValue tensor_trunc(const BaseValue& a, const BaseValue& b, bool& dropped);
BaseMap tensor_map_trunc(const BaseMap& f, const BaseMap& g, bool& dropped);

// Scoped window truncation for the colimit engines: while a scope is alive on
// the current thread, tensor products drop above-window Fdch blocks instead of
// raising, recording the fact. Degrees below the window still raise.
class TruncationScope {
  public:
    TruncationScope();
    ~TruncationScope();
    TruncationScope(const TruncationScope&) = delete;
    TruncationScope& operator=(const TruncationScope&) = delete;

    static bool active();
    static bool dropped();       // a drop happened inside the innermost scopes
    static void note_drop();
  private:
    bool saved_dropped_;
};

// ---- colimits ----------------------------------------------------------

struct Coproduct {
    BaseValue obj;
    std::vector<BaseMap> legs;
};
Coproduct coproduct(const BaseDescriptor& base, const std::vector<BaseValue>& parts);
// Induced map out of a coproduct; arms[i] must leave parts[i], all into target.
BaseMap cotuple(const Coproduct& cp, const std::vector<BaseMap>& arms, const BaseValue& target);

struct Coequalizer {
    BaseValue obj;
    BaseMap q;  // target of the pair -> obj
    // Section data (not a chain map / not canonical in any categorical sense,
    // only used to compute induced maps): for FinSet a representative element
    // per class, for Fdch a per-degree matrix embedding the quotient basis.
    std::vector<std::size_t> rep;
    std::vector<Mat> section;
};
Coequalizer coequalizer(const BaseMap& f, const BaseMap& g);
// Induced map out of a coequalizer given h with h f = h g (checked).
BaseMap coeq_induced(const Coequalizer& ce, const BaseMap& h);

struct Pushout {
    BaseValue obj;
    BaseMap from_b;  // leg B -> obj   for span  B <-f- A -g-> C
    BaseMap from_c;  // leg C -> obj
    Coproduct cp;    // internal: B + C
    Coequalizer ce;  // internal: quotient
};
Pushout pushout(const BaseMap& f, const BaseMap& g);
// Induced map out of a pushout from a commuting cocone (checked).
BaseMap pushout_induced(const Pushout& po, const BaseMap& hb, const BaseMap& hc);

std::optional<BaseMap> invert(const BaseMap& f);

// Unique g with g . p = h for a surjection p (consistency checked; used to
// descend maps along canonical quotient projections).
BaseMap induced_along_surjection(const BaseMap& p, const BaseMap& h);

// ---- model structure ---------------------------------------------------

struct MapClass {
    bool is_iso = false;
    bool is_weak_equivalence = false;
    bool is_cofibration = false;
    bool is_fibration = false;
    bool is_trivial_cofibration = false;
    bool is_trivial_fibration = false;
};
MapClass classify_map(const BaseMap& f);

// Canonical homology presentation of an Fdch value in a fixed degree.
struct Homology {
    int dim = 0;
    Mat cycle_reps;   // X_deg columns: chosen cycle representative per class
    Mat kernel;       // kernel basis of d_deg
    Mat head;         // reduction: kernel coords -> homology coords
};
Homology homology(const BaseValue& v, int degree);
int homology_dim(const BaseValue& v, int degree);
bool is_quasi_iso(const BaseMap& f);

// ---- pi0 ----------------------------------------------------------------

struct Pi0Set {
    BaseDescriptor base;
    std::size_t count = 0;
    // Fdch only: presentation of H_0 used to interpret element indices as
    // vectors over F_p in the canonical basis (index = base-p digits).
    std::optional<Homology> h0;
    BaseValue value;  // the underlying value, kept for pairings

    bool operator==(const Pi0Set& o) const {
        return base == o.base && count == o.count && value == o.value;
    }
};
Pi0Set pi0(const BaseValue& v);
// Index of the class of a degree-0 cycle (Fdch).
std::size_t pi0_index_of_cycle(const Pi0Set& s, const std::vector<gfp::Scalar>& cycle);
std::vector<std::size_t> pi0_map(const BaseMap& f);
// pairing(a, b): pi0(a) x pi0(b) -> pi0(a (x) b), flattened row-major on
// (ia, ib) -> ia * pi0(b).count + ib.
std::vector<std::size_t> pi0_pairing(const BaseValue& a, const BaseValue& b);

// ---- generating sets ----------------------------------------------------

struct GeneratingSets {
    std::vector<BaseMap> cofibrations;          // I
    std::vector<BaseMap> trivial_cofibrations;  // J
};
GeneratingSets generating_sets(const BaseDescriptor& base);

// ---- mapping cylinder ----------------------------------------------------

// f = p . i with i a cofibration and p a trivial fibration (Fdch only).
struct CylinderFactorization {
    BaseValue cyl;
    BaseMap i;
    BaseMap p;
};
CylinderFactorization factorize_cylinder(const BaseMap& f);

}  // namespace enricat
