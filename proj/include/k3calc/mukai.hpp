#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3calc/lattice.hpp"

namespace k3calc {

// A Mukai vector (r, c1, s): rank, Picard class, degree component.
struct MukaiVector {
    Int r;
    Vec c1;
    Int s;

    bool operator==(const MukaiVector&) const = default;
    MukaiVector negated() const;
};

// Numerical model of a polarized K3 surface: its Picard lattice (even), a
// polarization of positive square, and optionally a distinguished spherical
// class "U" usable in isometry words.
struct K3Model {
    std::string name;
    IntLattice picard;
    Vec polarization;
    std::optional<MukaiVector> spherical_u;

    K3Model(std::string name, IntLattice picard, Vec polarization,
            std::optional<MukaiVector> spherical_u = std::nullopt);

    int rho() const { return picard.rank(); }
    bool operator==(const K3Model& o) const;
};

// ((r,c,s),(r',c',s')) = c.c' - r s' - r' s.
Int mukai_pairing(const K3Model& m, const MukaiVector& v, const MukaiVector& w);

// chi(E, F) = -(v(E), v(F)).
Int euler_characteristic(const K3Model& m, const MukaiVector& v, const MukaiVector& w);

// v(L) = (1, c1, c1^2/2 + 1); c1^2 is even because the Picard lattice is.
MukaiVector line_bundle_vector(const K3Model& m, const Vec& c1);

// Slope mu_A(v) = A.c1 / (A^2 * r), exact rational.
Rat slope(const K3Model& m, const Vec& a, const MukaiVector& v);

// Rank 2+rho lattice on basis (H^0-unit, Picard basis..., point class) with
// the Gram induced by the Mukai pairing.
IntLattice algebraic_mukai_lattice(const K3Model& m);

// Coordinates of v in the algebraic Mukai lattice basis, and back.
Vec mukai_coords(const K3Model& m, const MukaiVector& v);
MukaiVector mukai_from_coords(const K3Model& m, const Vec& coords);

// Bundled models: "quartic_branch", "gm_surface", "quartic_with_line".
const K3Model& bundled_model(const std::string& name);
std::vector<std::string> bundled_model_names();
bool is_bundled_model(const std::string& name);

// Picard class expressions over the model's labels, e.g. "D", "-D", "3D-E",
// "-(D+2E)", "0". Used by the CLI word grammar and vector literals.
Vec parse_class_expr(const IntLattice& picard, const std::string& expr);
std::string format_class(const IntLattice& picard, const Vec& c);

// "(r, <class-expr>, s)" literals, e.g. "(2,-D-E,3)".
MukaiVector parse_mukai_vector_expr(const K3Model& m, const std::string& expr);
std::string format_mukai_vector(const K3Model& m, const MukaiVector& v);

}  // namespace k3calc
