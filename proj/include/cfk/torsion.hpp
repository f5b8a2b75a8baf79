#pragma once

// Torsion invariants of knot complexes.

#include "cfk/chain_complex.hpp"
#include "cfk/homology.hpp"
#include "cfk/torsion_sequence.hpp"

namespace cfk {

struct KnotInvariants {
    ModuleDecomp homology_w0; // w acts by 0
    ModuleDecomp homology_wu; // w acts by u
    TorsionSequence n_seq;    // torsion of homology_w0, one copy per marking block
    TorsionSequence m_seq;    // same for homology_wu
    int tq = 0;               // leading entry of n_seq, 0 if torsion-free
    int tq_prime = 0;         // leading entry of m_seq
};

// Requires a knot complex (components == 1).
KnotInvariants invariants_of(const FreeComplexUW& c);

// Same computation without the knot restriction: the torsion of a complex with
// markings > components comes in blocks of 2^(markings - components) equal
// entries, and one entry per block is kept. Throws DomainError when that
// structure is absent.
KnotInvariants torsion_sequences(const FreeComplexUW& c);

// Drops the 2^(markings - components) multiplicity; DomainError if a
// multiplicity is not divisible.
TorsionSequence collapse_markings(const TorsionSequence& t, int components, int markings);

// distance(n_k * 2^|K'|, n_k' * 2^|K|).
int pair_lower_bound(const TorsionSequence& n_k, const TorsionSequence& n_kp, int components_k,
                     int components_kp);

// free rank 2^(markings-1), every torsion multiplicity divisible by
// 2^(markings-components).
bool structure_check(const ModuleDecomp& d, int components, int markings);

} // namespace cfk
