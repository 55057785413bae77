#pragma once

// Weight bases of the tangent spaces at torus fixed points: B(Γ) for a single
// diagram, B(Γ₁,Γ₂) for a pair, B(Γ₁,Γ₂,Γ₃) for a triple, together with the
// obstruction bookkeeping (Obs, NotP, PObs) that decides which single-step
// vectors survive into the flag bases.
//
// Only the head of each composite vector is stored: the continuation maps
// preserve the weight, and everything downstream consumes weights alone.

#include <string>
#include <vector>

#include "hilbflag/young.hpp"

namespace hilbflag {

enum class VecKind { F, H2, H3 };

struct TangentVector {
    VecKind kind;
    Box src;  // F: a generator α of the base; H2: a generator of Γ₂; H3: of Γ₃
    Box tgt;  // F: the box β; H2: α_j; H3: α'_l

    Box weight() const { return tgt - src; }
    friend auto operator<=>(const TangentVector&, const TangentVector&) = default;
};

std::ostream& operator<<(std::ostream& os, const TangentVector& v);

struct PQSets {
    std::vector<Box> P;
    std::vector<Box> Q;
};

// The boxes a generator can map to. P_{α_s} and Q_{α_0} are empty.
PQSets pq_sets(const YoungDiagram& g, int i);

// All f_{α,β} with β ∈ P_α ∪ Q_α; exactly 2·|Γ| vectors.
std::vector<TangentVector> basis_single(const YoungDiagram& g);

// Relative position of the added box among the generators of the base.
enum class PairCase { c1a, c1b, c2, c3 };
PairCase pair_case(const YoungDiagram& g, int j);
const char* pair_case_name(PairCase c);

struct ObsElement {
    Box gen;       // α_i
    Box tgt;       // α_j shifted back by the generator gap
    bool x_branch; // true: shift was x^{q_i}; false: shift was y^{p_i}

    friend auto operator<=>(const ObsElement&, const ObsElement&) = default;
};

// The f_{α,β} that do not extend to the pair tangent space.
std::vector<ObsElement> obs12(const Flag2& f);

// Generator list of the outer diagram as predicted by the case analysis;
// basis_pair checks it against the directly computed generators.
std::vector<Box> transformed_generators(const Flag2& f);

// H2 vectors onto α_j for every generator of Γ₂, plus the surviving f's.
// Exactly 2n+2 vectors.
std::vector<TangentVector> basis_pair(const Flag2& f);

struct TripleParts {
    bool case_b = false;
    std::vector<ObsElement> obs23;         // obstructions of the second step
    std::vector<ObsElement> notp;          // the obs23 elements with no preimage
    std::vector<TangentVector> pobs;       // preimages in B(Γ₁) of the rest
    std::vector<Box> excluded_h2_sources;  // case b: Γ₂-generators losing their H2 vector
};

TripleParts triple_parts(const Flag3& t);

// H3 for every generator of Γ₃, surviving H2 vectors, surviving f's.
// Exactly 2n+5 vectors in case a and 2n+4 in case b.
std::vector<TangentVector> basis_triple(const Flag3& t);

// Debug rendering: [{"kind":"F","src":[2,0],"tgt":[0,1],"w":[-2,1]}, ...]
std::string dump_basis(const std::vector<TangentVector>& basis);

}  // namespace hilbflag
