#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3calc/intmat.hpp"

namespace k3calc {

// A finite-rank free abelian group with an integer Gram matrix and labeled
// basis. Degenerate Grams are allowed; operations that need nondegeneracy say
// so.
struct IntLattice {
    IntMat gram;                      // rank x rank, symmetric
    std::vector<std::string> labels;  // size = rank

    IntLattice() = default;
    IntLattice(IntMat g, std::vector<std::string> names = {});

    int rank() const { return gram.rows(); }
    bool operator==(const IntLattice& o) const { return gram == o.gram && labels == o.labels; }
};

// Vectors are plain coordinate lists in the ambient basis; the ambient
// lattice is passed explicitly to every operation and rank-checked there.
using Vec = std::vector<Int>;

struct SublatticeSpan {
    IntLattice ambient;
    std::vector<Vec> generators;  // not required independent

    SublatticeSpan(IntLattice amb, std::vector<Vec> gens);
};

struct Signature {
    int pos = 0, neg = 0, null = 0;
    bool operator==(const Signature&) const = default;
    std::string str() const;  // "(2, 1, 0)"
};

Int pairing(const IntLattice& l, const Vec& u, const Vec& v);
Int determinant(const IntLattice& l);
Signature signature(const IntLattice& l);

// Primitive sublattice orthogonal to every generator. Requires det != 0.
SublatticeSpan orthogonal_complement(const SublatticeSpan& s);

// (Q-span of s) intersected with the ambient lattice, via SNF.
SublatticeSpan saturate(const SublatticeSpan& s);
bool is_primitive(const SublatticeSpan& s);
// Index of s inside its saturation (product of invariant factors); requires
// the generators to be independent, else the "index" is not finite.
Int saturation_index(const SublatticeSpan& s);

int span_rank(const SublatticeSpan& s);
bool member_of_span(const SublatticeSpan& s, const Vec& v);
bool spans_equal(const SublatticeSpan& a, const SublatticeSpan& b);

// Gram matrix of the generators under the ambient pairing, as a lattice on
// the given (ordered) generators.
IntLattice gram_of_span(const SublatticeSpan& s, std::vector<std::string> labels = {});

// gram' = B^T * gram * B, columns of B are the new basis in old coordinates.
IntLattice change_of_basis(const IntLattice& l, const IntMat& b, std::vector<std::string> labels = {});

// Primitive integral generators of {v : (v, g0) >= 0 and (v, g1) >= 0} for a
// rank-2 lattice. result.first pairs to 0 with g1, result.second with g0.
std::pair<Vec, Vec> dual_cone_rank2(const IntLattice& l, const Vec& g0, const Vec& g1);

std::string format_vec(const Vec& v);                       // "(1, 1, 2)"
std::string format_vec_list(const std::vector<Vec>& vs);    // "{(..), (..)}"
Vec primitive_part(const Vec& v);                           // divide by gcd; 0 stays 0

}  // namespace k3calc
