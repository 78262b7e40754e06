#include "regclass/chartab.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace regclass {

namespace {

using u64 = std::uint64_t;

// Arithmetic in GF(P) for a prime P < 2^63.
struct ModP {
    u64 P;
    u64 add(u64 a, u64 b) const { return a + b >= P ? a + b - P : a + b; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + P - b; }
    u64 mul(u64 a, u64 b) const { return mulmod(a, b, P); }
    u64 pow(u64 a, u64 e) const { return powmod(a, e, P); }
    u64 inv(u64 a) const {
        if (a == 0) throw std::domain_error("inverse of zero mod P");
        return powmod(a, P - 2, P);
    }
};

using Poly = std::vector<u64>;  // coefficients, constant term first
using Mat = std::vector<std::vector<u64>>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const ModP& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    trim(r);
    return r;
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> poly_divmod(const ModP& F, Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    const u64 lead_inv = F.inv(b.back());
    Poly q(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        const u64 c = F.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        trim(a);
    }
    trim(q);
    return {q, a};
}

Poly poly_monic(const ModP& F, Poly f) {
    trim(f);
    if (f.empty()) return f;
    const u64 s = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, s);
    return f;
}

Poly poly_gcd(const ModP& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

// base^n mod f
Poly poly_powmod(const ModP& F, Poly base, u64 n, const Poly& f) {
    Poly r{1};
    base = poly_divmod(F, base, f).second;
    while (n) {
        if (n & 1) r = poly_divmod(F, poly_mul(F, r, base), f).second;
        base = poly_divmod(F, poly_mul(F, base, base), f).second;
        n >>= 1;
    }
    return r;
}

void split_roots(const ModP& F, const Poly& g, std::vector<u64>& out) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        out.push_back(F.mul(F.sub(0, g[0]), F.inv(g[1])));
        return;
    }
    // g is a product of distinct linear factors; gcd with (x+a)^((P-1)/2) - 1
    // separates roots r by whether r + a is a square.
    for (u64 a = 0;; ++a) {
        Poly h = poly_powmod(F, Poly{a % F.P, 1}, (F.P - 1) / 2, g);
        if (h.empty()) h = Poly{F.P - 1};
        else h[0] = F.sub(h[0], 1);
        trim(h);
        Poly d = poly_gcd(F, g, h);
        if (d.size() > 1 && d.size() < g.size()) {
            split_roots(F, d, out);
            split_roots(F, poly_divmod(F, g, d).first, out);
            return;
        }
    }
}

// Distinct roots of f in GF(P), ascending.
std::vector<u64> poly_roots(const ModP& F, const Poly& f) {
    Poly fm = poly_monic(F, f);
    Poly xp = poly_powmod(F, Poly{0, 1}, F.P, fm);
    xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
    xp[1] = F.sub(xp[1], 1);
    trim(xp);
    Poly g = xp.empty() ? fm : poly_gcd(F, fm, xp);
    std::vector<u64> out;
    split_roots(F, g, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Characteristic polynomial by reduction to upper Hessenberg form.
Poly charpoly(const ModP& F, Mat H) {
    const std::size_t n = H.size();
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t i = j + 1;
        while (i < n && H[i][j] == 0) ++i;
        if (i == n) continue;
        if (i != j + 1) {
            std::swap(H[i], H[j + 1]);
            for (auto& row : H) std::swap(row[i], row[j + 1]);
        }
        const u64 pinv = F.inv(H[j + 1][j]);
        for (std::size_t r = j + 2; r < n; ++r) {
            const u64 t = F.mul(H[r][j], pinv);
            if (t == 0) continue;
            for (std::size_t c = 0; c < n; ++c) H[r][c] = F.sub(H[r][c], F.mul(t, H[j + 1][c]));
            for (std::size_t c = 0; c < n; ++c) H[c][j + 1] = F.add(H[c][j + 1], F.mul(t, H[c][r]));
        }
    }
    std::vector<Poly> p(n + 1);
    p[0] = {1};
    for (std::size_t m = 0; m < n; ++m) {
        // (x - h_mm) p_m
        Poly next(p[m].size() + 1, 0);
        for (std::size_t i = 0; i < p[m].size(); ++i) {
            next[i + 1] = F.add(next[i + 1], p[m][i]);
            next[i] = F.sub(next[i], F.mul(H[m][m], p[m][i]));
        }
        u64 t = 1;
        for (std::size_t i = m; i-- > 0;) {
            t = F.mul(t, H[i + 1][i]);
            const u64 c = F.mul(H[i][m], t);
            if (c == 0) continue;
            for (std::size_t s = 0; s < p[i].size(); ++s) next[s] = F.sub(next[s], F.mul(c, p[i][s]));
        }
        trim(next);
        p[m + 1] = std::move(next);
    }
    return p[n];
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const ModP& F, Mat& M) {
    std::vector<std::size_t> pivots;
    if (M.empty()) return pivots;
    const std::size_t cols = M[0].size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < M.size(); ++c) {
        std::size_t r = row;
        while (r < M.size() && M[r][c] == 0) ++r;
        if (r == M.size()) continue;
        std::swap(M[r], M[row]);
        const u64 s = F.inv(M[row][c]);
        for (auto& v : M[row]) v = F.mul(v, s);
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (i == row || M[i][c] == 0) continue;
            const u64 f = M[i][c];
            for (std::size_t j = 0; j < cols; ++j) M[i][j] = F.sub(M[i][j], F.mul(f, M[row][j]));
        }
        pivots.push_back(c);
        ++row;
    }
    M.resize(row);
    return pivots;
}

// Basis of {x : M x = 0}.
Mat nullspace(const ModP& F, Mat M) {
    const std::size_t n = M.empty() ? 0 : M[0].size();
    auto piv = rref(F, M);
    std::vector<char> is_pivot(n, 0);
    for (auto c : piv) is_pivot[c] = 1;
    Mat basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<u64> v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.sub(0, M[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Least prime P = 1 (mod e) with P > bound.
u64 prime_above(u64 e, u64 bound) {
    u64 m = bound / e;
    for (;; ++m) {
        const u64 P = e * m + 1;
        if (P > bound && is_prime(P)) return P;
    }
}

// Element of exact order e in GF(P)^*, from the least base a with a^((P-1)/e) of order e.
u64 root_of_unity(u64 e, u64 P) {
    const auto primes = prime_divisors(e);
    for (u64 a = 2; a < P; ++a) {
        const u64 z = powmod(a, (P - 1) / e, P);
        bool ok = true;
        for (u64 l : primes) ok = ok && powmod(z, e / l, P) != 1;
        if (ok) return z;
    }
    throw std::logic_error("no root of unity of the requested order");
}

std::vector<std::vector<std::uint32_t>> power_tables(const ClassTable& T) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t c = 0; c < T.size(); ++c) out.push_back(T.power_table(c));
    return out;
}

// Class permutation of g -> g^k.
std::vector<std::size_t> class_power_perm(const std::vector<std::vector<std::uint32_t>>& pt,
                                          const ClassTable& T, u64 k) {
    std::vector<std::size_t> out(T.size());
    for (std::size_t c = 0; c < T.size(); ++c) out[c] = pt[c][k % T[c].order];
    return out;
}

bool row_fixed(const CharacterTable& X, std::size_t chi, const std::vector<std::size_t>& perm) {
    for (std::size_t l = 0; l < perm.size(); ++l)
        if (!(X.rows[chi][perm[l]] == X.rows[chi][l])) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t CycValue::multiplicity_sum() const {
    std::uint64_t s = 0;
    for (auto [j, m] : terms) s += m;
    return s;
}

CycValue galois_image(const CycValue& v, std::uint64_t k, std::uint64_t e) {
    std::map<std::uint32_t, std::uint32_t> acc;
    for (auto [j, m] : v.terms) acc[static_cast<std::uint32_t>(mulmod(j, k % e, e))] += m;
    CycValue out;
    out.terms.assign(acc.begin(), acc.end());
    return out;
}

CycValue complex_conjugate(const CycValue& v, std::uint64_t e) {
    std::map<std::uint32_t, std::uint32_t> acc;
    for (auto [j, m] : v.terms) acc[static_cast<std::uint32_t>((e - j) % e)] += m;
    CycValue out;
    out.terms.assign(acc.begin(), acc.end());
    return out;
}

std::string to_string(const CycValue& v, std::uint64_t e) {
    if (v.terms.empty()) return "0";
    std::string s;
    for (auto [j, m] : v.terms) {
        if (!s.empty()) s += " + ";
        if (j == 0) {
            s += std::to_string(m);
            continue;
        }
        if (m != 1) s += std::to_string(m) + "*";
        const u64 g = gcd_u64(j, e);
        s += "z" + std::to_string(e / g);
        if (j / g != 1) s += "^" + std::to_string(j / g);
    }
    return s;
}

bool chartab_feasible(std::size_t class_count, std::uint64_t order) {
    return class_count <= kMaxCharTableClasses && order <= kMaxCharTableOrder;
}

ClassAlgebra::ClassAlgebra(const ClassTable& T) : k_(T.size()), a_(T.size() * T.size() * T.size(), 0) {
    if (!T.has_dense_index()) throw std::invalid_argument("ClassAlgebra: class table needs a dense index");
    const StabChain& sc = T.group().chain();
    const std::size_t L = sc.length();
    const u64 N = T.group_order();
    std::vector<const Perm*> uinv(L);
    std::vector<Point> imgs(L);
    // z_l(b) for every base point and class representative
    std::vector<std::vector<Point>> zb(k_, std::vector<Point>(L));
    for (std::size_t l = 0; l < k_; ++l)
        for (std::size_t i = 0; i < L; ++i) zb[l][i] = T[l].rep[sc.base_point(i)];
    for (u64 r = 0; r < N; ++r) {
        const std::size_t j = T.class_of_rank(r);
        u64 x = r;
        for (std::size_t i = 0; i < L; ++i) {
            const std::size_t n = sc.orbit_size(i);
            uinv[i] = &sc.inverse_transversal(i, x % n);
            x /= n;
        }
        for (std::size_t l = 0; l < k_; ++l) {
            // x = z_l y^-1, so x(b) = y^-1(z_l(b)) with y^-1 = u_0^-1 then ... then u_{L-1}^-1
            for (std::size_t i = 0; i < L; ++i) {
                Point p = zb[l][i];
                for (std::size_t s = 0; s < L; ++s) p = (*uinv[s])[p];
                imgs[i] = p;
            }
            const std::size_t cls = T.class_of_rank(sc.rank_from_base_images(imgs.data()));
            ++a_[(cls * k_ + j) * k_ + l];
        }
    }
}

CharacterTable character_table(const ClassTable& Tin) {
    if (!chartab_feasible(Tin.size(), Tin.group_order()))
        throw ResourceError("character table: needs at most 80 classes and order at most 3e6 (k=" +
                            std::to_string(Tin.size()) + ", |G|=" + std::to_string(Tin.group_order()) + ")");
    std::optional<ClassTable> dense;
    if (!Tin.has_dense_index()) {
        dense.emplace(conjugacy_classes(Tin.group()));
        for (std::size_t c = 0; c < Tin.size(); ++c)
            if (dense->size() != Tin.size() || (*dense)[c].rep != Tin[c].rep)
                throw std::logic_error("character table: class table does not match a fresh enumeration");
    }
    const ClassTable& T = dense ? *dense : Tin;
    const std::size_t k = T.size();
    const u64 N = T.group_order();
    const u64 e = T.exponent();
    ClassAlgebra A(T);

    const u64 P = prime_above(e, 2 * isqrt(BigInt(N)).convert_to<u64>() + 1);
    const ModP F{P};
    const u64 z = root_of_unity(e, P);

    // Common eigenvectors of the matrices A_j[i][l] = a(i,j,l).
    std::vector<Mat> spaces;
    {
        Mat id(k, std::vector<u64>(k, 0));
        for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
        spaces.push_back(std::move(id));
    }
    for (std::size_t j = 1; j < k; ++j) {
        bool all_lines = true;
        for (const auto& W : spaces) all_lines = all_lines && W.size() == 1;
        if (all_lines) break;
        std::vector<Mat> next;
        for (auto& W : spaces) {
            const std::size_t d = W.size();
            if (d == 1) {
                next.push_back(std::move(W));
                continue;
            }
            std::vector<std::size_t> piv;
            for (const auto& row : W) piv.push_back(std::find_if(row.begin(), row.end(), [](u64 v) { return v != 0; }) - row.begin());
            Mat R(d, std::vector<u64>(d, 0));
            for (std::size_t s = 0; s < d; ++s)
                for (std::size_t t = 0; t < d; ++t) {
                    u64 acc = 0;
                    for (std::size_t l = 0; l < k; ++l)
                        if (W[s][l]) acc = F.add(acc, F.mul(A.at(piv[t], j, l) % P, W[s][l]));
                    R[t][s] = acc;
                }
            const auto roots = poly_roots(F, charpoly(F, R));
            std::size_t total = 0;
            for (u64 lambda : roots) {
                Mat S = R;
                for (std::size_t t = 0; t < d; ++t) S[t][t] = F.sub(S[t][t], lambda);
                Mat ns = nullspace(F, S);
                Mat sub;
                for (const auto& c : ns) {
                    std::vector<u64> v(k, 0);
                    for (std::size_t s = 0; s < d; ++s)
                        if (c[s])
                            for (std::size_t l = 0; l < k; ++l) v[l] = F.add(v[l], F.mul(c[s], W[s][l]));
                    sub.push_back(std::move(v));
                }
                rref(F, sub);
                total += sub.size();
                next.push_back(std::move(sub));
            }
            if (total != d) throw std::logic_error("character table: class matrix not diagonalizable mod P");
        }
        spaces = std::move(next);
    }
    if (spaces.size() != k) throw std::logic_error("character table: eigenspaces did not split into lines");

    std::vector<std::vector<std::uint32_t>> pt = power_tables(T);
    std::vector<std::size_t> inv_class(k);
    for (std::size_t l = 0; l < k; ++l) inv_class[l] = pt[l][T[l].order - 1];
    std::vector<u64> size_inv(k);
    for (std::size_t l = 0; l < k; ++l) size_inv[l] = F.inv(T[l].size % P);
    const u64 dmax = isqrt(BigInt(N)).convert_to<u64>();

    CharacterTable X;
    X.group_order = N;
    X.exponent = e;
    X.modulus = P;
    for (std::size_t l = 0; l < k; ++l) {
        X.class_sizes.push_back(T[l].size);
        X.class_orders.push_back(T[l].order);
    }
    for (auto& W : spaces) {
        std::vector<u64> w = W[0];
        if (w[0] == 0) throw std::logic_error("character table: eigenvector vanishes at the identity");
        const u64 s0 = F.inv(w[0]);
        for (auto& v : w) v = F.mul(v, s0);
        u64 S = 0;
        for (std::size_t l = 0; l < k; ++l) S = F.add(S, F.mul(F.mul(w[l], w[inv_class[l]]), size_inv[l]));
        const u64 D = F.mul(N % P, F.inv(S));
        u64 deg = 0;
        for (u64 d = 1; d <= dmax; ++d)
            if (mulmod(d, d, P) == D) {
                deg = d;
                break;
            }
        if (deg == 0) throw std::logic_error("character table: no admissible degree");
        std::vector<u64> chi(k);
        for (std::size_t l = 0; l < k; ++l) chi[l] = F.mul(F.mul(w[l], deg), size_inv[l]);

        std::vector<CycValue> row(k);
        for (std::size_t l = 0; l < k; ++l) {
            const u64 o = T[l].order;
            const u64 step = e / o;
            const u64 zo = F.pow(z, step);
            std::vector<u64> zpow(o);
            zpow[0] = 1;
            for (u64 t = 1; t < o; ++t) zpow[t] = F.mul(zpow[t - 1], zo);
            const u64 oinv = F.inv(o % P);
            for (u64 s = 0; s < o; ++s) {
                u64 acc = 0;
                for (u64 t = 0; t < o; ++t) acc = F.add(acc, F.mul(chi[pt[l][t]], zpow[(o - s * t % o) % o]));
                const u64 m = F.mul(acc, oinv);
                if (m > deg) throw std::logic_error("character table: eigenvalue multiplicity out of range");
                if (m) row[l].terms.push_back({static_cast<std::uint32_t>(s * step), static_cast<std::uint32_t>(m)});
            }
        }
        X.degrees.push_back(deg);
        X.rows.push_back(std::move(row));
    }
    // canonical order: degree, then value vectors
    std::vector<std::size_t> ord(k);
    for (std::size_t i = 0; i < k; ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
        if (X.degrees[a] != X.degrees[b]) return X.degrees[a] < X.degrees[b];
        return X.rows[a] < X.rows[b];
    });
    CharacterTable Y = X;
    for (std::size_t i = 0; i < k; ++i) {
        Y.degrees[i] = X.degrees[ord[i]];
        Y.rows[i] = X.rows[ord[i]];
    }
    verify_character_table(Y, T);
    return Y;
}

std::vector<std::uint64_t> unit_subgroup_generators(std::uint64_t e, std::uint64_t m) {
    if (e == 0 || m == 0 || e % m != 0) throw std::invalid_argument("unit_subgroup_generators: m must divide e");
    std::vector<u64> gens;
    for (auto [ell, a] : factorize(e)) {
        u64 la = 1;
        for (unsigned i = 0; i < a; ++i) la *= ell;
        const u64 b = p_part(m, ell);  // ell^b
        std::vector<u64> local;
        if (ell == 2) {
            // (Z/2^a)^* = <-1> x <5>; the units = 1 mod 2^beta for beta >= 2 form <1 + 2^beta>
            if (b <= 2 && la >= 4) local.push_back(la - 1);
            if (b <= 4 && la >= 8) local.push_back(5);
            if (b >= 8 && b < la) local.push_back(1 + b);
        } else if (b == 1) {
            const u64 phi = euler_phi(la);
            u64 g = 2;
            while (multiplicative_order(g, la) != phi) ++g;
            local.push_back(g);
        } else if (b < la) {
            local.push_back(1 + b);
        }
        const u64 rest = e / la;
        for (u64 g : local) {
            // k = g (mod la), k = 1 (mod rest)
            u64 k = g % la;
            if (rest > 1) {
                const u64 t = mulmod((1 + rest - k % rest) % rest, invmod(la % rest, rest), rest);
                k = k + la * t;
            }
            gens.push_back(k % e);
        }
    }
    return gens;
}

void verify_character_table(const CharacterTable& X, const ClassTable& T) {
    const std::size_t k = T.size();
    const u64 N = T.group_order();
    const u64 e = T.exponent();
    auto fail = [](const std::string& msg) { throw std::logic_error("character table verification: " + msg); };
    if (X.rows.size() != k || X.degrees.size() != k || X.exponent != e || X.group_order != N) fail("shape mismatch");
    BigInt sumsq = 0;
    for (std::size_t c = 0; c < k; ++c) {
        if (X.rows[c].size() != k) fail("row length");
        const u64 d = X.degrees[c];
        if (d == 0 || N % d != 0) fail("degree does not divide |G|");
        sumsq += BigInt(d) * d;
        if (!(X.rows[c][0] == CycValue{{{0u, static_cast<std::uint32_t>(d)}}})) fail("identity value is not the degree");
        for (const auto& v : X.rows[c]) {
            if (v.multiplicity_sum() != d) fail("eigenvalue count differs from degree");
            for (auto [j, m] : v.terms)
                if (j >= e || m == 0) fail("malformed value");
        }
    }
    if (sumsq != N) fail("sum of squared degrees differs from |G|");

    const auto pt = power_tables(T);
    // values on g^t are the t-th powers of the eigenvalues on g
    for (std::size_t l = 0; l < k; ++l) {
        const u64 o = T[l].order;
        if (X.class_sizes.at(l) != T[l].size || X.class_orders.at(l) != o) fail("class data mismatch");
        for (u64 t = 1; t < o; ++t) {
            if (gcd_u64(t, o) != 1) continue;
            for (std::size_t c = 0; c < k; ++c)
                if (!(galois_image(X.rows[c][l], t, e) == X.rows[c][pt[l][t]])) fail("power map inconsistency");
        }
    }
    std::set<std::vector<CycValue>> rowset(X.rows.begin(), X.rows.end());
    if (rowset.size() != k) fail("repeated rows");
    for (u64 g : unit_subgroup_generators(e, 1)) {
        const auto perm = class_power_perm(pt, T, g);
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<CycValue> img(k);
            for (std::size_t l = 0; l < k; ++l) img[l] = X.rows[c][perm[l]];
            if (!rowset.count(img)) fail("row set not closed under the Galois action");
        }
    }

    // Both relations have rational integer sides bounded by |G|^2 + |G|, so one
    // embedding modulo a prime above that bound decides them exactly.
    const u64 bound = N * N + N;
    const u64 P2 = prime_above(e, bound);
    const ModP F{P2};
    const u64 z2 = root_of_unity(e, P2);
    std::vector<u64> zp(e);
    zp[0] = 1;
    for (u64 j = 1; j < e; ++j) zp[j] = F.mul(zp[j - 1], z2);
    std::vector<std::vector<u64>> val(k, std::vector<u64>(k)), cval(k, std::vector<u64>(k));
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t l = 0; l < k; ++l) {
            u64 a = 0, b = 0;
            for (auto [j, m] : X.rows[c][l].terms) {
                a = F.add(a, F.mul(m, zp[j]));
                b = F.add(b, F.mul(m, zp[(e - j) % e]));
            }
            val[c][l] = a;
            cval[c][l] = b;
        }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            u64 s = 0;
            for (std::size_t l = 0; l < k; ++l) s = F.add(s, F.mul(T[l].size % P2, F.mul(val[a][l], cval[b][l])));
            if (s != (a == b ? N % P2 : 0)) fail("row orthogonality");
        }
    for (std::size_t C = 0; C < k; ++C)
        for (std::size_t D = 0; D < k; ++D) {
            u64 s = 0;
            for (std::size_t c = 0; c < k; ++c) s = F.add(s, F.mul(val[c][C], cval[c][D]));
            if (s != (C == D ? (N / T[C].size) % P2 : 0)) fail("column orthogonality");
        }
}

std::vector<RationalityFlags> classify_rationality(const CharacterTable& X, const ClassTable& T, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("classify_rationality: p must be prime");
    const u64 e = X.exponent;
    const u64 ep = p_part(e, p), eq = e / ep;
    const auto pt = power_tables(T);
    auto fixed_by = [&](u64 m) {
        std::vector<char> fixed(X.size(), 1);
        for (u64 g : unit_subgroup_generators(e, m)) {
            const auto perm = class_power_perm(pt, T, g);
            for (std::size_t c = 0; c < X.size(); ++c) fixed[c] = fixed[c] && row_fixed(X, c, perm);
        }
        return fixed;
    };
    const auto prat = fixed_by(eq), pprat = fixed_by(ep), qp = fixed_by(gcd_u64(e, p)), rat = fixed_by(1);
    std::vector<RationalityFlags> out(X.size());
    for (std::size_t c = 0; c < X.size(); ++c) out[c] = {rat[c] != 0, prat[c] != 0, pprat[c] != 0, qp[c] != 0};
    return out;
}

CharacterCounts character_count_report(const CharacterTable& X, const ClassTable& T, std::uint64_t p) {
    if (X.group_order % p != 0) throw std::invalid_argument("character_count_report: p must divide |G|");
    CharacterCounts out;
    out.p = p;
    for (const auto& f : classify_rationality(X, T, p)) {
        out.p_rational += f.p_rational;
        out.p_prime_rational += f.p_prime_rational;
        out.union_count += f.p_rational || f.p_prime_rational;
        out.rational += f.rational;
        out.p_rational_or_qp += f.p_rational || f.qp_valued;
    }
    out.union_vs_threshold = cmp_threshold(out.union_count, p, Root::Half);
    out.p_rat_qp_vs_threshold = cmp_threshold(out.p_rational_or_qp, p, Root::Half);
    return out;
}

std::size_t fixed_character_count(const CharacterTable& X, const ClassTable& T, std::int64_t k) {
    const auto perm = power_class_map(T, k);
    std::size_t n = 0;
    for (std::size_t c = 0; c < X.size(); ++c) n += row_fixed(X, c, perm);
    return n;
}

BrauerCheck brauer_cross_check(const ClassTable& T, const CharacterTable& X) {
    BrauerCheck out;
    const u64 e = X.exponent;
    const auto pt = power_tables(T);
    std::map<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>> seen;
    for (u64 k = 1; k <= e; ++k) {
        if (gcd_u64(k, e) != 1) continue;
        ++out.galois_elements;
        auto perm = class_power_perm(pt, T, k % e);
        auto it = seen.find(perm);
        if (it == seen.end()) {
            std::size_t fc = 0, fx = 0;
            for (std::size_t l = 0; l < perm.size(); ++l) fc += perm[l] == l;
            for (std::size_t c = 0; c < X.size(); ++c) fx += row_fixed(X, c, perm);
            it = seen.emplace(std::move(perm), std::make_pair(fc, fx)).first;
        }
        if (it->second.first != it->second.second && out.ok) {
            out.ok = false;
            out.failure = "k=" + std::to_string(k) + ": " + std::to_string(it->second.first) + " fixed classes vs " +
                          std::to_string(it->second.second) + " fixed characters";
        }
    }
    out.distinct_actions = seen.size();
    for (u64 p : prime_divisors(X.group_order)) {
        if (p == 2) continue;
        const auto counts = character_count_report(X, T, p);
        const std::size_t gal = galois_fixed_class_count(T, p);
        const std::size_t kpp = class_counts(T, p).k_p_prime;
        if (counts.p_rational != gal && out.ok) {
            out.ok = false;
            out.failure = "p=" + std::to_string(p) + ": p-rational characters " + std::to_string(counts.p_rational) +
                          " vs Galois-fixed classes " + std::to_string(gal);
        }
        if (counts.p_rational < kpp && out.ok) {
            out.ok = false;
            out.failure = "p=" + std::to_string(p) + ": p-rational characters below k_p'";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cache

void write_character_table(const CharacterTable& X, const std::string& group_id, std::ostream& out) {
    out << "regclass-chartab/1\n";
    out << "group " << group_id << "\n";
    out << "order " << X.group_order << "\n";
    out << "exponent " << X.exponent << "\n";
    out << "modulus " << X.modulus << "\n";
    out << "characters " << X.size() << "\n";
    for (std::size_t c = 0; c < X.size(); ++c) {
        out << X.degrees[c];
        for (const auto& v : X.rows[c]) {
            out << " |";
            for (auto [j, m] : v.terms) out << " " << j << ":" << m;
        }
        out << "\n";
    }
}

CharacterTable read_character_table(std::istream& in, const ClassTable& T) {
    std::string line, word;
    std::getline(in, line);
    if (line != "regclass-chartab/1") throw std::runtime_error("character cache: version mismatch");
    CharacterTable X;
    std::size_t nchars = 0;
    std::string group;
    in >> word >> group >> word >> X.group_order >> word >> X.exponent >> word >> X.modulus >> word >> nchars;
    if (!in) throw std::runtime_error("character cache: bad header");
    std::getline(in, line);
    for (std::size_t c = 0; c < nchars; ++c) {
        if (!std::getline(in, line)) throw std::runtime_error("character cache: truncated");
        std::istringstream ls(line);
        u64 d;
        ls >> d;
        X.degrees.push_back(d);
        std::vector<CycValue> row;
        std::string tok;
        while (ls >> tok) {
            if (tok == "|") {
                row.emplace_back();
                continue;
            }
            const auto colon = tok.find(':');
            if (colon == std::string::npos || row.empty()) throw std::runtime_error("character cache: bad term");
            row.back().terms.push_back({static_cast<std::uint32_t>(std::stoul(tok.substr(0, colon))),
                                        static_cast<std::uint32_t>(std::stoul(tok.substr(colon + 1)))});
        }
        X.rows.push_back(std::move(row));
    }
    for (std::size_t l = 0; l < T.size(); ++l) {
        X.class_sizes.push_back(T[l].size);
        X.class_orders.push_back(T[l].order);
    }
    verify_character_table(X, T);
    return X;
}

}  // namespace regclass
