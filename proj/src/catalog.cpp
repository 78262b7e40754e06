#include "regclass/catalog.hpp"

#include <map>
#include <regex>
#include <stdexcept>

#include "regclass/gf.hpp"
#include "regclass/numtheory.hpp"

namespace regclass {

namespace {

using Elem = Field::Elem;
// Square matrix over a field, row-major.
using Matrix = std::vector<Elem>;

Matrix mat_identity(unsigned n) {
    Matrix m(n * n, 0);
    for (unsigned i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

Matrix mat_transpose(const Matrix& a, unsigned n) {
    Matrix t(n * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
    return t;
}

Matrix mat_inverse(const Field& F, Matrix a, unsigned n) {
    Matrix inv = mat_identity(n);
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = col;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular matrix");
        for (unsigned j = 0; j < n; ++j) {
            std::swap(a[col * n + j], a[piv * n + j]);
            std::swap(inv[col * n + j], inv[piv * n + j]);
        }
        const Elem s = F.inv(a[col * n + col]);
        for (unsigned j = 0; j < n; ++j) {
            a[col * n + j] = F.mul(a[col * n + j], s);
            inv[col * n + j] = F.mul(inv[col * n + j], s);
        }
        for (unsigned r = 0; r < n; ++r) {
            if (r == col || a[r * n + col] == 0) continue;
            const Elem f = a[r * n + col];
            for (unsigned j = 0; j < n; ++j) {
                a[r * n + j] = F.sub(a[r * n + j], F.mul(f, a[col * n + j]));
                inv[r * n + j] = F.sub(inv[r * n + j], F.mul(f, inv[col * n + j]));
            }
        }
    }
    return inv;
}

// Vectors of F^n, listed either as all nonzero vectors or as projective points
// normalized so that the last nonzero coordinate is 1. Projective points are
// ordered by that coordinate's position, highest first, so on the line [x:1]
// has index x and [1:0] has index q.
class VectorSpace {
public:
    VectorSpace(const Field& F, unsigned n, bool projective) : F_(F), n_(n), projective_(projective) {
        const unsigned q = F.size();
        std::uint64_t total = 1;
        for (unsigned i = 0; i < n; ++i) total *= q;
        index_.assign(total, -1);
        std::vector<Elem> v(n);
        if (projective) {
            for (int pos = static_cast<int>(n) - 1; pos >= 0; --pos) {
                std::uint64_t count = 1;
                for (int i = 0; i < pos; ++i) count *= q;
                for (std::uint64_t c = 0; c < count; ++c) {
                    std::uint64_t x = c;
                    for (unsigned i = 0; i < n; ++i) {
                        if (static_cast<int>(i) < pos) {
                            v[i] = static_cast<Elem>(x % q);
                            x /= q;
                        } else {
                            v[i] = static_cast<int>(i) == pos ? 1 : 0;
                        }
                    }
                    add(v);
                }
            }
        } else {
            for (std::uint64_t c = 1; c < total; ++c) {
                std::uint64_t x = c;
                for (unsigned i = 0; i < n; ++i) {
                    v[i] = static_cast<Elem>(x % q);
                    x /= q;
                }
                add(v);
            }
        }
    }

    std::size_t size() const { return vectors_.size(); }
    const std::vector<Elem>& vec(std::size_t i) const { return vectors_[i]; }

    std::size_t index_of(std::vector<Elem> v) const {
        if (projective_) {
            int last = static_cast<int>(n_) - 1;
            while (last >= 0 && v[last] == 0) --last;
            if (last < 0) throw std::logic_error("zero vector has no projective point");
            const Elem s = F_.inv(v[last]);
            for (auto& x : v) x = F_.mul(x, s);
        }
        const std::int64_t id = index_[code(v)];
        if (id < 0) throw std::logic_error("vector not indexed");
        return static_cast<std::size_t>(id);
    }

    // Permutation induced by v -> M v on column vectors.
    Perm action(const Matrix& M) const {
        Perm p(size());
        std::vector<Elem> w(n_);
        for (std::size_t i = 0; i < size(); ++i) {
            const auto& v = vectors_[i];
            for (unsigned r = 0; r < n_; ++r) {
                Elem s = 0;
                for (unsigned c = 0; c < n_; ++c) s = F_.add(s, F_.mul(M[r * n_ + c], v[c]));
                w[r] = s;
            }
            p[i] = static_cast<Point>(index_of(w));
        }
        return p;
    }

    // Permutation induced by applying a^(ell^k) to every coordinate.
    Perm frobenius(unsigned k) const {
        Perm p(size());
        std::vector<Elem> w(n_);
        for (std::size_t i = 0; i < size(); ++i) {
            for (unsigned r = 0; r < n_; ++r) w[r] = F_.frobenius(vectors_[i][r], k);
            p[i] = static_cast<Point>(index_of(w));
        }
        return p;
    }

private:
    std::uint64_t code(const std::vector<Elem>& v) const {
        std::uint64_t c = 0;
        for (unsigned i = n_; i-- > 0;) c = c * F_.size() + v[i];
        return c;
    }
    void add(const std::vector<Elem>& v) {
        index_[code(v)] = static_cast<std::int64_t>(vectors_.size());
        vectors_.push_back(v);
    }

    const Field& F_;
    unsigned n_;
    bool projective_;
    std::vector<std::vector<Elem>> vectors_;
    std::vector<std::int64_t> index_;
};

Field field_for(unsigned q) {
    auto [ell, f] = prime_power(q);
    if (ell == 0) throw std::invalid_argument("field size " + std::to_string(q) + " is not a prime power");
    return Field(static_cast<unsigned>(ell), f);
}

std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / gcd_u64(2, q - 1); }

std::uint64_t psl3_order(std::uint64_t q) {
    return q * q * q * (q * q * q - 1) * (q * q - 1) / gcd_u64(3, q - 1);
}

std::uint64_t sp4_order(std::uint64_t q) {
    const std::uint64_t q2 = q * q;
    return q2 * q2 * (q2 - 1) * (q2 * q2 - 1) / gcd_u64(2, q - 1);
}

std::uint64_t factorial(unsigned n) {
    std::uint64_t r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Perm cycle_perm(unsigned n) {
    Perm p(n);
    for (unsigned i = 0; i < n; ++i) p[i] = static_cast<Point>((i + 1) % n);
    return p;
}

unsigned least_multiplier(unsigned p, unsigned d) {
    for (unsigned a = 2; a < p; ++a)
        if (multiplicative_order(a, p) == d) return a;
    throw std::invalid_argument("no multiplier of the requested order");
}

std::vector<Perm> psl2_generators(const Field& F, const VectorSpace& V) {
    const Elem w = F.primitive();
    const Elem one = 1, minus_one = F.neg(1);
    return {V.action({one, one, 0, one}), V.action({w, 0, 0, F.inv(w)}), V.action({0, one, minus_one, 0})};
}

Perm psl3_matrix_perm(const Field& F, const VectorSpace& V, std::size_t N, const Matrix& M) {
    // points by M, lines by the inverse transpose
    Perm on_points = V.action(M);
    Perm on_lines = V.action(mat_transpose(mat_inverse(F, M, 3), 3));
    Perm p(2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        p[i] = on_points[i];
        p[N + i] = static_cast<Point>(N + on_lines[i]);
    }
    return p;
}

std::vector<Perm> psl3_generators(const Field& F, const VectorSpace& V, std::size_t N) {
    const Elem w = F.primitive();
    const std::vector<Matrix> mats = {
        {1, 1, 0, 0, 1, 0, 0, 0, 1},
        {w, 0, 0, 0, F.inv(w), 0, 0, 0, 1},
        {0, 0, 1, 1, 0, 0, 0, 1, 0},
    };
    std::vector<Perm> gens;
    for (const auto& M : mats) gens.push_back(psl3_matrix_perm(F, V, N, M));
    return gens;
}

// Symplectic form x0 y2 + x1 y3 - x2 y0 - x3 y1.
Elem symplectic_form(const Field& F, const std::vector<Elem>& x, const std::vector<Elem>& y) {
    Elem s = F.add(F.mul(x[0], y[2]), F.mul(x[1], y[3]));
    return F.sub(s, F.add(F.mul(x[2], y[0]), F.mul(x[3], y[1])));
}

void check_unsupported(bool bad, const std::string& id) {
    if (bad) throw std::invalid_argument("unsupported catalog parameters: " + id);
}

std::string make_id(const std::string& fam, const std::vector<unsigned>& params) {
    std::string s = fam + "(";
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s + ")";
}

CatalogEntry make_entry(Family fam, std::vector<unsigned> params) {
    CatalogEntry e;
    e.family = fam;
    e.params = params;
    e.id = make_id(family_name(fam), params);
    const auto bad = [&](bool b) { check_unsupported(b, e.id); };
    const auto need = [&](std::size_t k) { bad(params.size() != k); };
    switch (fam) {
    case Family::Cyclic:
        need(1);
        bad(params[0] < 2 || params[0] > 65536);
        e.order = e.degree = params[0];
        e.out_action = "none";
        break;
    case Family::Dihedral:
        need(1);
        bad(params[0] < 3 || params[0] > 32768);
        e.order = 2ULL * params[0];
        e.degree = params[0];
        e.out_action = "none";
        break;
    case Family::Frobenius: {
        need(2);
        const unsigned p = params[0], d = params[1];
        bad(!is_prime(p) || p > 65536 || d < 2 || (p - 1) % d != 0);
        e.order = static_cast<std::uint64_t>(p) * d;
        e.degree = p;
        e.out_action = "none";
        break;
    }
    case Family::Sym:
        need(1);
        bad(params[0] < 2 || params[0] > 12);
        e.order = factorial(params[0]);
        e.degree = params[0];
        e.nonabelian_factor = params[0] >= 5 ? e.order / 2 : 0;
        e.out_action = "none";
        break;
    case Family::Alt:
        need(1);
        bad(params[0] < 3 || params[0] > 12);
        e.order = factorial(params[0]) / 2;
        e.degree = params[0];
        e.simple = params[0] >= 5;
        e.nonabelian_factor = e.simple ? e.order : 0;
        e.aut_complete = e.simple && params[0] != 6;
        e.iso_label = params[0] == 6 ? "A6" : "A" + std::to_string(params[0]);
        e.out_action = params[0] == 6 ? "transposition (S6 only; exceptional outer part not realized)"
                                      : "transposition (S_n)";
        break;
    case Family::Psl2: {
        need(1);
        const unsigned q = params[0];
        bad(prime_power(q).first == 0 || q < 4 || q > 256);
        e.order = psl2_order(q);
        e.degree = q + 1;
        e.simple = true;
        e.aut_complete = true;
        e.nonabelian_factor = e.order;
        e.iso_label = (q == 4 || q == 5) ? "A5" : q == 7 ? "L2(7)" : q == 9 ? "A6" : "L2(" + std::to_string(q) + ")";
        std::string d = q % 2 ? "diagonal (PGL2)" : "";
        std::string f = prime_power(q).second > 1 ? "field automorphisms" : "";
        e.out_action = d.empty() && f.empty() ? "none (Out trivial)" : d + (d.empty() || f.empty() ? "" : " + ") + f;
        break;
    }
    case Family::Pgl2: {
        need(1);
        const unsigned q = params[0];
        bad(prime_power(q).first == 0 || q % 2 == 0 || q < 5 || q > 255);
        e.order = static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1);
        e.degree = q + 1;
        e.nonabelian_factor = psl2_order(q);
        e.out_action = "none";
        break;
    }
    case Family::Pgammal2: {
        need(1);
        const unsigned q = params[0];
        auto [ell, f] = prime_power(q);
        bad(ell == 0 || f < 2 || q > 256);
        e.order = static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1) * f;
        e.degree = q + 1;
        e.nonabelian_factor = psl2_order(q);
        e.out_action = "none";
        break;
    }
    case Family::Sl2: {
        need(1);
        const unsigned q = params[0];
        bad(prime_power(q).first == 0 || q % 2 == 0 || q > 31);
        e.order = static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1);
        e.degree = static_cast<std::size_t>(q) * q - 1;
        e.nonabelian_factor = q >= 5 ? psl2_order(q) : 0;
        e.out_action = "none";
        break;
    }
    case Family::Psl3WithDuality: {
        need(1);
        const unsigned q = params[0];
        bad(prime_power(q).first == 0 || q > 9);
        e.order = psl3_order(q);
        e.degree = 2 * (static_cast<std::size_t>(q) * q + q + 1);
        e.simple = true;
        e.aut_complete = true;
        e.nonabelian_factor = e.order;
        e.iso_label = q == 2 ? "L2(7)" : "L3(" + std::to_string(q) + ")";
        std::string s = gcd_u64(3, q - 1) == 3 ? "diagonal + " : "";
        if (prime_power(q).second > 1) s += "field automorphisms + ";
        e.out_action = s + "duality (points <-> lines)";
        break;
    }
    case Family::Sp4: {
        need(1);
        const unsigned q = params[0];
        bad(q != 2 && q != 3);
        e.order = sp4_order(q);
        e.degree = (static_cast<std::size_t>(q) * q * q * q - 1) / (q - 1);
        e.simple = q == 3;
        e.aut_complete = q == 3;
        e.nonabelian_factor = q == 3 ? e.order : e.order / 2;
        e.iso_label = q == 3 ? "U4(2)" : "";
        e.out_action = q == 3 ? "symplectic similitude" : "none (graph automorphism not realized on points)";
        break;
    }
    }
    return e;
}

void verify_normalizes(const PermGroup& G, const std::vector<Perm>& conj, const std::string& id) {
    for (const auto& c : conj)
        for (const auto& g : G.generators())
            if (!G.contains(conjugate(g, c))) throw std::logic_error(id + ": conjugator does not normalize the group");
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::Frobenius: return "frobenius";
    case Family::Sym: return "sym";
    case Family::Alt: return "alt";
    case Family::Psl2: return "psl2";
    case Family::Pgl2: return "pgl2";
    case Family::Pgammal2: return "pgammal2";
    case Family::Sl2: return "sl2";
    case Family::Psl3WithDuality: return "psl3_with_duality";
    case Family::Sp4: return "sp4";
    }
    return "?";
}

bool CatalogEntry::is_sqrt_frobenius() const {
    return family == Family::Frobenius && static_cast<std::uint64_t>(params[1]) * params[1] == params[0] - 1ULL;
}

CatalogEntry parse_entry(const std::string& id) {
    static const std::regex re(R"(^\s*([a-z0-9_]+)\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*$)");
    std::smatch m;
    if (!std::regex_match(id, m, re)) throw std::invalid_argument("malformed catalog id: " + id);
    static const std::map<std::string, Family> names = {
        {"cyclic", Family::Cyclic},   {"dihedral", Family::Dihedral},
        {"frobenius", Family::Frobenius}, {"sym", Family::Sym},
        {"alt", Family::Alt},         {"psl2", Family::Psl2},
        {"pgl2", Family::Pgl2},       {"pgammal2", Family::Pgammal2},
        {"sl2", Family::Sl2},         {"psl3_with_duality", Family::Psl3WithDuality},
        {"psl3", Family::Psl3WithDuality}, {"sp4", Family::Sp4}};
    auto it = names.find(m[1].str());
    if (it == names.end()) throw std::invalid_argument("unknown catalog family: " + m[1].str());
    std::vector<unsigned> params;
    for (int i = 2; i <= 3; ++i) {
        if (!m[i].matched) continue;
        const unsigned long v = std::stoul(m[i].str());
        if (v > 1'000'000) throw std::invalid_argument("catalog parameter too large: " + id);
        params.push_back(static_cast<unsigned>(v));
    }
    return make_entry(it->second, params);
}

std::vector<CatalogEntry> catalog(bool extended) {
    std::vector<CatalogEntry> out;
    // cyclic(2) is left out: it is the d = 1 degenerate equality case of the
    // Frobenius family and is tested on its own. dihedral(5) duplicates frobenius(5,2).
    for (unsigned n : {3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 30}) out.push_back(make_entry(Family::Cyclic, {n}));
    for (unsigned n : {3, 4, 6, 7, 8, 9, 10, 12, 15}) out.push_back(make_entry(Family::Dihedral, {n}));
    const std::vector<std::pair<unsigned, unsigned>> frob = {
        {5, 2},  {5, 4},  {7, 2},  {7, 3},   {7, 6},  {11, 2},  {11, 5}, {11, 10}, {13, 3}, {13, 4},
        {13, 6}, {13, 12}, {17, 4}, {17, 8}, {17, 16}, {19, 9}, {37, 6}, {101, 10}};
    for (auto [p, d] : frob) out.push_back(make_entry(Family::Frobenius, {p, d}));
    for (unsigned n = 3; n <= 7; ++n) out.push_back(make_entry(Family::Sym, {n}));
    for (unsigned n = 4; n <= 8; ++n) out.push_back(make_entry(Family::Alt, {n}));
    for (unsigned q = 4; q <= 128; ++q)
        if (prime_power(q).first != 0) out.push_back(make_entry(Family::Psl2, {q}));
    for (unsigned q : {5, 7, 9, 11, 13}) out.push_back(make_entry(Family::Pgl2, {q}));
    for (unsigned q : {4, 8, 9, 16}) out.push_back(make_entry(Family::Pgammal2, {q}));
    for (unsigned q : {3, 5, 7, 9, 11, 13}) out.push_back(make_entry(Family::Sl2, {q}));
    for (unsigned q : {2, 3, 4, 5}) out.push_back(make_entry(Family::Psl3WithDuality, {q}));
    for (unsigned q : {2, 3}) out.push_back(make_entry(Family::Sp4, {q}));
    if (extended) {
        out.push_back(make_entry(Family::Psl2, {243}));
        out.push_back(make_entry(Family::Psl2, {256}));
        out.push_back(make_entry(Family::Psl3WithDuality, {8}));
    }
    return out;
}

BuiltGroup build(const CatalogEntry& entry) {
    const auto& pr = entry.params;
    std::vector<Perm> gens, conj;
    std::size_t degree = entry.degree;
    switch (entry.family) {
    case Family::Cyclic: gens = {cycle_perm(pr[0])}; break;
    case Family::Dihedral: {
        const unsigned n = pr[0];
        Perm refl(n);
        for (unsigned i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
        gens = {cycle_perm(n), refl};
        break;
    }
    case Family::Frobenius: {
        const unsigned p = pr[0];
        const unsigned a = least_multiplier(p, pr[1]);
        Perm mul(p);
        for (unsigned x = 0; x < p; ++x) mul[x] = static_cast<Point>(static_cast<std::uint64_t>(a) * x % p);
        gens = {cycle_perm(p), mul};
        break;
    }
    case Family::Sym: {
        const unsigned n = pr[0];
        gens = {cycle_perm(n), perm_from_cycles(n, {{0, 1}})};
        break;
    }
    case Family::Alt: {
        const unsigned n = pr[0];
        for (unsigned i = 2; i < n; ++i) gens.push_back(perm_from_cycles(n, {{0, 1, i}}));
        conj = {perm_from_cycles(n, {{0, 1}})};
        break;
    }
    case Family::Psl2:
    case Family::Pgl2:
    case Family::Pgammal2: {
        Field F = field_for(pr[0]);
        VectorSpace V(F, 2, true);
        gens = psl2_generators(F, V);
        std::vector<Perm> outer;
        if (F.size() % 2 == 1) outer.push_back(V.action({F.primitive(), 0, 0, 1}));
        if (F.degree() > 1) outer.push_back(V.frobenius(1));
        if (entry.family == Family::Psl2) {
            conj = outer;
        } else if (entry.family == Family::Pgl2) {
            gens.push_back(outer.front());
        } else {
            gens.insert(gens.end(), outer.begin(), outer.end());
        }
        break;
    }
    case Family::Sl2: {
        Field F = field_for(pr[0]);
        VectorSpace V(F, 2, false);
        const Elem w = F.primitive();
        gens = {V.action({1, 1, 0, 1}), V.action({w, 0, 0, F.inv(w)}), V.action({0, 1, F.neg(1), 0})};
        break;
    }
    case Family::Psl3WithDuality: {
        Field F = field_for(pr[0]);
        VectorSpace V(F, 3, true);
        const std::size_t N = V.size();
        gens = psl3_generators(F, V, N);
        if (gcd_u64(3, F.size() - 1) == 3) conj.push_back(psl3_matrix_perm(F, V, N, {F.primitive(), 0, 0, 0, 1, 0, 0, 0, 1}));
        if (F.degree() > 1) {
            Perm fr = V.frobenius(1), p(2 * N);
            for (std::size_t i = 0; i < N; ++i) {
                p[i] = fr[i];
                p[N + i] = static_cast<Point>(N + fr[i]);
            }
            conj.push_back(p);
        }
        Perm duality(2 * N);
        for (std::size_t i = 0; i < N; ++i) {
            duality[i] = static_cast<Point>(N + i);
            duality[N + i] = static_cast<Point>(i);
        }
        conj.push_back(duality);
        break;
    }
    case Family::Sp4: {
        Field F = field_for(pr[0]);
        VectorSpace V(F, 4, true);
        // Add symplectic transvections x -> x + B(x,v) v until the order is reached.
        for (std::size_t i = 0; i < V.size(); ++i) {
            const auto& v = V.vec(i);
            Matrix M(16);
            for (unsigned j = 0; j < 4; ++j) {
                std::vector<Elem> ej(4, 0);
                ej[j] = 1;
                const Elem c = symplectic_form(F, ej, v);
                for (unsigned r = 0; r < 4; ++r) M[r * 4 + j] = F.add(ej[r], F.mul(c, v[r]));
            }
            Perm t = V.action(M);
            if (!gens.empty() && PermGroup(degree, gens).contains(t)) continue;
            gens.push_back(t);
            if (PermGroup(degree, gens).order() == BigInt(entry.order)) break;
        }
        if (F.size() == 3) {
            const Elem a = F.neg(1);
            conj.push_back(V.action({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, a, 0, 0, 0, 0, a}));
        }
        break;
    }
    }
    PermGroup G(degree, gens);
    if (G.order() != BigInt(entry.order))
        throw std::logic_error(entry.id + ": constructed order " + G.order().str() + " differs from formula " +
                               std::to_string(entry.order));
    verify_normalizes(G, conj, entry.id);
    return {std::move(G), std::move(conj)};
}

}  // namespace regclass
