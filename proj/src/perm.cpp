#include "regclass/perm.hpp"

#include <stdexcept>

#include "regclass/numtheory.hpp"

namespace regclass {

Perm identity_perm(std::size_t n) {
    if (n > kMaxDegree) throw std::invalid_argument("degree exceeds 2^16");
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Point>(i);
    return p;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (Point x : p) {
        if (x >= p.size() || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<Point>(i);
    return r;
}

Perm conjugate(const Perm& x, const Perm& c) {
    // (c^-1 x c)[c[i]] = c[x[i]]
    Perm r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[c[i]] = c[x[i]];
    return r;
}

Perm power(const Perm& p, std::int64_t k) {
    Perm base = k < 0 ? inverse(p) : p;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    Perm r = identity_perm(p.size());
    while (e != 0) {
        if (e & 1) r = compose(r, base);
        base = compose(base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t perm_order(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        ord = lcm_u64(ord, len);
    }
    return ord;
}

Point smallest_moved_point(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return static_cast<Point>(i);
    throw std::invalid_argument("smallest_moved_point: identity permutation");
}

Perm perm_from_cycles(std::size_t n, const std::vector<std::vector<unsigned>>& cycles) {
    Perm p = identity_perm(n);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (cyc[i] >= n) throw std::invalid_argument("perm_from_cycles: point out of range");
            p[cyc[i]] = static_cast<Point>(cyc[(i + 1) % cyc.size()]);
        }
    }
    if (!is_permutation(p)) throw std::invalid_argument("perm_from_cycles: cycles overlap");
    return p;
}

std::string perm_to_string(const Perm& p) {
    std::string s;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) continue;
        s += "(";
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            if (j != i) s += ",";
            s += std::to_string(j);
            seen[j] = 1;
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

}  // namespace regclass
