#include "k3calc/pseudoheight.hpp"

#include <vector>

namespace k3calc {

ExtDegreeTable::ExtDegreeTable(int n_, Int rel_dim_, std::map<std::pair<int, int>, ExtInt> plain_,
                               std::map<std::pair<int, int>, ExtInt> serre_)
    : n(n_), rel_dim(std::move(rel_dim_)), e_plain(std::move(plain_)), e_serre(std::move(serre_)) {
    if (n < 1) throw Error("table needs at least one object");
    if (rel_dim < 0) throw Error("relative dimension must be nonnegative");
    for (const auto& [key, val] : e_plain)
        if (!(1 <= key.first && key.first < key.second && key.second <= n))
            throw Error("e_plain index (" + std::to_string(key.first) + "," +
                        std::to_string(key.second) + ") out of range: need 1 <= i < j <= n");
    for (const auto& [key, val] : e_serre)
        if (!(1 <= key.second && key.second <= key.first && key.first <= n))
            throw Error("e_serre index (" + std::to_string(key.first) + "," +
                        std::to_string(key.second) + ") out of range: need 1 <= i <= j <= n");
}

ExtInt ExtDegreeTable::plain(int i, int j) const {
    if (!(1 <= i && i < j && j <= n)) throw Error("e_plain lookup out of range");
    auto it = e_plain.find({i, j});
    return it == e_plain.end() ? ExtInt::inf() : it->second;
}

ExtInt ExtDegreeTable::serre(int j, int i) const {
    if (!(1 <= i && i <= j && j <= n)) throw Error("e_serre lookup out of range");
    auto it = e_serre.find({j, i});
    return it == e_serre.end() ? ExtInt::inf() : it->second;
}

ExtInt pseudoheight(const ExtDegreeTable& t) {
    int n = t.n;
    // best[a][b] = min over chains a = a_0 < ... < a_p = b of (hop sum - p).
    // Each extension by one hop costs e_plain(b, c) - 1.
    std::vector<std::vector<ExtInt>> best(n + 1, std::vector<ExtInt>(n + 1, ExtInt::inf()));
    for (int a = 1; a <= n; ++a) best[a][a] = ExtInt::of(0);
    for (int b = 1; b <= n; ++b)
        for (int a = 1; a <= b; ++a) {
            if (best[a][b] == ExtInt::inf()) continue;
            for (int c = b + 1; c <= n; ++c) {
                ExtInt cand = (best[a][b] + t.plain(b, c)) - Int(1);
                if (cand < best[a][c]) best[a][c] = cand;
            }
        }
    ExtInt result = ExtInt::inf();
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) {
            ExtInt total = best[a][b] + t.serre(b, a);
            if (total < result) result = total;
        }
    return result;
}

bool sheaf_mode_valid(const ExtDegreeTable& t) {
    for (const auto& [key, val] : t.e_plain)
        if (!val.infinite && val.value < 0) return false;
    for (const auto& [key, val] : t.e_serre)
        if (!val.infinite && val.value < t.rel_dim) return false;
    return true;
}

ConnectednessVerdict connectedness_verdict(const ExtInt& ph, const Int& rel_dim, int n) {
    ConnectednessVerdict v;
    v.iso_range_max = ph - Int(2);
    v.injection_at = ph - Int(1);
    v.connected_by_criterion = rel_dim >= Int(n) + 1;
    return v;
}

}  // namespace k3calc
