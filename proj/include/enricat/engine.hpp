// Push-outs in Cat_S(V) along free V-functors T_S(U_ab) -> T_S(V_ab), computed
// pairwise as truncated transfinite compositions of explicit base push-outs,
// with the full stage record: bonding maps, attachments, the composition
// ladder, and stabilization certificates.

#pragma once

#include <climits>
#include <optional>

#include "enricat/free_cat.hpp"
#include "enricat/pushout_product.hpp"

namespace enricat {

struct StageSquare {
    Word tgt_word;    // the interleaved word H(b,y) (x) V (x) H(b,a) ... (x) H(x,a)
    PushoutProduct pp;
    BaseMap psi;      // pp.source -> K(x,y)_{t-1}
    Pushout po;       // stage push-out
    BaseMap bonding;  // K(x,y)_{t-1} -> K(x,y)_t
    BaseMap attach;   // flat(tgt_word) -> K(x,y)_t
};

struct PairTrace {
    std::vector<BaseValue> stages;     // K(x,y)_0 .. K(x,y)_depth
    std::vector<StageSquare> squares;  // stage 1 .. depth
    // All stages strictly above this index are literal identities (certified
    // for every t up to infinity, not just the computed ones).
    int trivial_from = INT_MAX;
    bool stabilized = false;
    int result_stage = 0;
};

struct PushoutTrace {
    VCategory h;
    std::size_t a = 0, b = 0;
    BaseMap f;     // U -> V
    BaseMap gbar;  // U -> H(a,b)
    int stage_bound = 0;

    std::vector<PairTrace> pairs;  // n*n
    // ladder[(x*n+y)*n+z][s][t] : K(y,z)_s (x) K(x,y)_t -> K(x,z)_{min(s+t, R)}
    std::vector<std::vector<std::vector<std::optional<BaseMap>>>> ladder;
    bool stabilized = false;
    bool fdch_dropped = false;  // above-window truncation happened somewhere

    std::optional<VCategory> result;
    std::optional<VFunctor> phi;
    std::optional<BaseMap> g_prime_adjoint;  // V -> K(a,b)

    const PairTrace& pair(std::size_t x, std::size_t y) const { return pairs[x * h.n() + y]; }
    BaseValue stage_value(std::size_t x, std::size_t y, int t) const;
    // bonding K_t-1 -> K_t, identity above trivial_from
    BaseMap stage_bonding(std::size_t x, std::size_t y, int t) const;
};

PushoutTrace pushout_along_free(const VCategory& h, std::size_t a, std::size_t b, const BaseMap& f,
                                const BaseMap& gbar, int stage_bound);

// The interleaved stage word for pair (x, y) at stage t >= 1.
Word stage_word(const VCategory& h, std::size_t a, std::size_t b, const BaseValue& v,
                std::size_t x, std::size_t y, int t);

// Re-verify one recorded stage square as a base push-out (Lemma 5.2 style).
bool verify_stage_square(const StageSquare& sq);

// Certified index T such that all stages > T are trivial, or INT_MAX.
int stage_trivial_from(const BaseDescriptor& base, const BaseValue& hby, const BaseValue& hxa,
                       const BaseValue& hba, const BaseValue& u, const BaseValue& v);

// Attachment flat(stage word t) -> K(x,y)_{min(t, computed)}, synthesized for
// certified-trivial stages beyond the computed range.
BaseMap trace_attach(const PushoutTrace& tr, std::size_t x, std::size_t y, int t);
// Composite of bonding maps between two stages.
BaseMap trace_bondings(const PushoutTrace& tr, std::size_t x, std::size_t y, int from, int to);

}  // namespace enricat
