#pragma once

#include <string>
#include <vector>

#include "k3calc/numeric.hpp"

namespace k3calc {

// A finitely-generated-or-divisible abelian group in canonical form:
//   (divisible units)^[0 or 1] + Z^free_rank + Z/d1 + ... + Z/dk,
// with invariant factors d1 | d2 | ... , each >= 2. The divisible flag models
// the multiplicative group of an algebraically closed characteristic-0 field:
// divisible, with m-torsion Z/m for every m >= 1.
struct AbelianGroupModel {
    Int free_rank = 0;
    std::vector<Int> torsion;
    bool divisible_units = false;

    bool operator==(const AbelianGroupModel&) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty() && !divisible_units; }

    // Canonicalizes arbitrary cyclic orders (drops 1s, rewrites as an
    // invariant-factor chain via SNF of the diagonal matrix).
    static AbelianGroupModel from_parts(Int free_rank, std::vector<Int> cyclic_orders,
                                        bool divisible_units);
};

static const AbelianGroupModel kTrivialGroup{};

// A[m]: m-torsion subgroup. Free part contributes nothing; Z/d contributes
// Z/gcd(d,m); the divisible part contributes Z/m.
AbelianGroupModel m_torsion(const AbelianGroupModel& a, const Int& m);

// A/mA: free rank r contributes (Z/m)^r; Z/d contributes Z/gcd(d,m); the
// divisible part contributes 0.
AbelianGroupModel mod_m_quotient(const AbelianGroupModel& a, const Int& m);

// H^n(Z/m, A), trivial action: H^0 = A, H^odd = A[m], H^even>0 = A/mA.
AbelianGroupModel cyclic_cohomology(const Int& m, const Int& n, const AbelianGroupModel& a);

// Requires at most one operand divisible (a single flag models that summand).
AbelianGroupModel direct_sum(const AbelianGroupModel& a, const AbelianGroupModel& b);

// Grammar: terms "Cx" | "Z" | "Z^r" | "Z/d" joined by '+'; "0" is trivial.
AbelianGroupModel parse_group_expr(const std::string& expr);
std::string format_group(const AbelianGroupModel& a);  // e.g. "Cx + Z", "Z/2 + Z/4", "0"

}  // namespace k3calc
