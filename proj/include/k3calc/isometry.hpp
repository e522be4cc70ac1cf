#pragma once

#include <string>
#include <vector>

#include "k3calc/mukai.hpp"

namespace k3calc {

// Cohomological action of a derived autoequivalence: an integer isometry of
// the algebraic Mukai lattice plus a global +-1 sign on the transcendental
// part. Construction always verifies M^T G M = G and |det M| = 1.
struct MukaiIsometry {
    K3Model model;
    IntMat matrix;  // (2+rho) x (2+rho), acts on (r, c1..., s) coordinates
    int transcendental_sign;

    MukaiIsometry(K3Model model, IntMat matrix, int transcendental_sign);
};

MukaiIsometry identity_isometry(const K3Model& m);

// Reflection w -> w + v_sph * (v_sph, w); requires (v_sph, v_sph) = -2.
MukaiIsometry spherical_twist(const K3Model& m, const MukaiVector& v_sph);

// (r, c, s) -> (r, c + r*c1, s + c.c1 + r*c1^2/2).
MukaiIsometry tensor_line_bundle(const K3Model& m, const Vec& c1);

// [-1]: minus identity on the lattice, sign -1 on the transcendental part.
MukaiIsometry shift(const K3Model& m);

// compose(f, g) = f after g (functional order); signs multiply.
MukaiIsometry compose(const MukaiIsometry& f, const MukaiIsometry& g);
MukaiIsometry inverse(const MukaiIsometry& f);
MukaiIsometry conjugate(const MukaiIsometry& f, const MukaiIsometry& by);  // by^-1 o f o by
bool equals(const MukaiIsometry& f, const MukaiIsometry& g);
bool is_involution(const MukaiIsometry& f);

MukaiVector apply(const MukaiIsometry& f, const MukaiVector& v);

// +-1 eigenlattices of an involution, as primitive sublattices of the
// algebraic Mukai lattice.
SublatticeSpan invariant_sublattice(const MukaiIsometry& f);
SublatticeSpan anti_invariant_sublattice(const MukaiIsometry& f);

// Word grammar: whitespace-separated tokens applied right-to-left.
//   shift | tw:O | tw:U | tw:(r,c1,s) | lb:<class-expr>
// O = (1,0,1); U = the model's registered spherical class.
MukaiIsometry build_named(const K3Model& m, const std::vector<std::string>& tokens);
std::vector<std::string> tokenize_word(const std::string& word);

}  // namespace k3calc
