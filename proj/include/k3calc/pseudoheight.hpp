#pragma once

#include <map>
#include <string>
#include <utility>

#include "k3calc/numeric.hpp"

namespace k3calc {

// Integer extended with +infinity: absorbing under addition, maximal under
// comparison. Never conflated with any large finite value.
struct ExtInt {
    bool infinite = false;
    Int value = 0;

    static ExtInt inf() { return ExtInt{true, 0}; }
    static ExtInt of(Int v) { return ExtInt{false, std::move(v)}; }

    bool operator==(const ExtInt& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator<(const ExtInt& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return value < o.value;
    }
    ExtInt operator+(const ExtInt& o) const {
        if (infinite || o.infinite) return inf();
        return of(value + o.value);
    }
    ExtInt operator-(const Int& k) const { return infinite ? inf() : of(value - k); }
    std::string str() const { return infinite ? "inf" : value.str(); }
};

// Minimal Ext-degree data for an ordered collection E_1..E_n over a base of
// relative dimension rel_dim:
//   e_plain[(i,j)], i < j : degree of the hop E_i -> E_j;
//   e_serre[(j,i)], i <= j: degree of the Serre-twisted return hop
//                           E_j -> S^{-1}(E_i).
// Missing entries mean +infinity (no nonzero Ext at all).
struct ExtDegreeTable {
    int n = 0;
    Int rel_dim = 0;
    std::map<std::pair<int, int>, ExtInt> e_plain;
    std::map<std::pair<int, int>, ExtInt> e_serre;

    ExtDegreeTable(int n, Int rel_dim, std::map<std::pair<int, int>, ExtInt> e_plain,
                   std::map<std::pair<int, int>, ExtInt> e_serre);

    ExtInt plain(int i, int j) const;  // requires 1 <= i < j <= n
    ExtInt serre(int j, int i) const;  // requires 1 <= i <= j <= n
};

// min over nonempty increasing chains a_0 < ... < a_p of
//   e(a_0,a_1) + ... + e(a_{p-1},a_p) + e_serre(a_p,a_0) - p,
// computed by dynamic programming over (chain start, current index).
ExtInt pseudoheight(const ExtDegreeTable& t);

// Sheaf-mode validation: all e_plain >= 0 and all e_serre >= rel_dim (these
// bounds force pseudoheight >= rel_dim - n + 1).
bool sheaf_mode_valid(const ExtDegreeTable& t);

struct ConnectednessVerdict {
    ExtInt iso_range_max;   // comparison map is an isomorphism for i <= this
    ExtInt injection_at;    // and an injection at this degree
    bool connected_by_criterion;  // rel_dim >= n + 1

    bool operator==(const ConnectednessVerdict&) const = default;
};

ConnectednessVerdict connectedness_verdict(const ExtInt& ph, const Int& rel_dim, int n);

}  // namespace k3calc
