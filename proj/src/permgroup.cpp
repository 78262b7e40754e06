#include "regclass/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

namespace regclass {

namespace {

constexpr std::uint32_t kUnset = 0xFFFFFFFFu;

void check_perm(const Perm& g, std::size_t degree) {
    if (g.size() != degree) throw std::invalid_argument("permutation has wrong degree");
    if (!is_permutation(g)) throw std::invalid_argument("generator is not a bijection");
}

}  // namespace

// ---------------------------------------------------------------------------
// StabChain

StabChain::StabChain(std::size_t degree, const std::vector<Perm>& gens) : degree_(degree) {
    if (degree == 0 || degree > kMaxDegree) throw std::invalid_argument("degree must lie in 1..65536");
    for (const auto& g : gens) check_perm(g, degree);
    schreier_sims(gens);
}

void StabChain::compute_orbit(Level& lv) const {
    lv.orbit.assign(1, lv.base);
    lv.where.assign(degree_, -1);
    lv.where[lv.base] = 0;
    lv.u.assign(1, identity_perm(degree_));
    lv.uinv.assign(1, identity_perm(degree_));
    for (std::size_t idx = 0; idx < lv.orbit.size(); ++idx) {
        const Point beta = lv.orbit[idx];
        for (const auto& s : lv.gens) {
            const Point gamma = s[beta];
            if (lv.where[gamma] >= 0) continue;
            lv.where[gamma] = static_cast<std::int32_t>(lv.orbit.size());
            lv.orbit.push_back(gamma);
            // base^(u s) = s[beta] = gamma
            Perm w = compose(lv.u[idx], s);
            lv.uinv.push_back(inverse(w));
            lv.u.push_back(std::move(w));
        }
    }
}

std::pair<Perm, std::size_t> StabChain::strip(const Perm& g, std::size_t from) const {
    Perm h = g;
    for (std::size_t i = from; i < levels_.size(); ++i) {
        const auto& lv = levels_[i];
        const std::int32_t t = lv.where[h[lv.base]];
        if (t < 0) return {std::move(h), i};
        h = compose(h, lv.uinv[t]);
    }
    return {std::move(h), levels_.size()};
}

void StabChain::schreier_sims(const std::vector<Perm>& gens) {
    std::vector<Perm> strong;
    for (const auto& g : gens) {
        if (is_identity(g)) continue;
        if (std::find(strong.begin(), strong.end(), g) != strong.end()) continue;
        strong.push_back(g);
    }
    std::vector<Point> base;
    for (const auto& s : strong) {
        bool fixes_base = true;
        for (Point b : base) fixes_base = fixes_base && s[b] == b;
        if (fixes_base) base.push_back(smallest_moved_point(s));
    }
    levels_.resize(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        levels_[i].base = base[i];
        for (const auto& s : strong) {
            bool fixes = true;
            for (std::size_t j = 0; j < i; ++j) fixes = fixes && s[base[j]] == base[j];
            if (fixes) levels_[i].gens.push_back(s);
        }
        compute_orbit(levels_[i]);
    }

    // Invariant: levels above i are complete stabilizer chains of their groups.
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
        bool extended = false;
        Level& lv = levels_[static_cast<std::size_t>(i)];
        for (std::size_t t = 0; !extended && t < lv.orbit.size(); ++t) {
            for (std::size_t si = 0; !extended && si < lv.gens.size(); ++si) {
                const Perm& s = lv.gens[si];
                const Point gamma = s[lv.orbit[t]];
                Perm h = compose(compose(lv.u[t], s), lv.uinv[lv.where[gamma]]);
                if (is_identity(h)) continue;
                auto [y, j] = strip(h, static_cast<std::size_t>(i) + 1);
                if (is_identity(y)) continue;
                if (j == levels_.size()) {
                    Level nl;
                    nl.base = smallest_moved_point(y);
                    levels_.push_back(std::move(nl));
                }
                for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
                    levels_[l].gens.push_back(y);
                    compute_orbit(levels_[l]);
                }
                i = static_cast<std::ptrdiff_t>(j);
                extended = true;
            }
        }
        if (!extended) --i;
    }
}

BigInt StabChain::order() const {
    BigInt n = 1;
    for (const auto& lv : levels_) n *= static_cast<unsigned>(lv.orbit.size());
    return n;
}

bool StabChain::contains(const Perm& g) const {
    if (g.size() != degree_) return false;
    auto [h, j] = strip(g);
    return j == levels_.size() && is_identity(h);
}

std::uint64_t StabChain::rank(const Perm& g) const {
    std::vector<Point> imgs(levels_.size());
    for (std::size_t i = 0; i < levels_.size(); ++i) imgs[i] = g[levels_[i].base];
    return rank_from_base_images(imgs.data());
}

std::uint64_t StabChain::rank_from_base_images(Point* imgs) const {
    std::uint64_t r = 0, scale = 1;
    const std::size_t L = levels_.size();
    for (std::size_t i = 0; i < L; ++i) {
        const auto& lv = levels_[i];
        const std::int32_t t = lv.where[imgs[i]];
        if (t < 0) return UINT64_MAX;
        r += scale * static_cast<std::uint64_t>(t);
        scale *= lv.orbit.size();
        const Perm& ui = lv.uinv[t];
        for (std::size_t j = i + 1; j < L; ++j) imgs[j] = ui[imgs[j]];
    }
    return r;
}

Perm StabChain::unrank(std::uint64_t r) const {
    Perm g = identity_perm(degree_);
    std::vector<std::size_t> digits(levels_.size());
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        digits[i] = r % levels_[i].orbit.size();
        r /= levels_[i].orbit.size();
    }
    if (r != 0) throw std::out_of_range("unrank: rank exceeds group order");
    for (std::size_t i = levels_.size(); i-- > 0;) g = compose(g, levels_[i].u[digits[i]]);
    return g;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens)
    : degree_(degree), gens_(std::move(gens)), chain_(std::make_shared<const StabChain>(degree, gens_)) {}

std::uint64_t PermGroup::order_u64() const {
    BigInt n = order();
    if (n > BigInt(UINT64_MAX)) throw std::overflow_error("group order exceeds 64 bits");
    return static_cast<std::uint64_t>(n);
}

std::uint64_t group_order(const PermGroup& G) { return G.order_u64(); }

std::vector<Perm> enumerate_elements_bfs(const PermGroup& G, std::uint64_t limit) {
    std::set<Perm> seen;
    std::deque<Perm> queue;
    Perm id = G.identity();
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Perm x = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : G.generators()) {
            Perm y = compose(x, s);
            if (seen.insert(y).second) {
                if (seen.size() > limit)
                    throw ResourceError("Cayley enumeration exceeded cap of " + std::to_string(limit) + " elements");
                queue.push_back(std::move(y));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Element views over rank digits

namespace {

// Element g = u_{L-1,t_{L-1}} * ... * u_{0,t_0} evaluated pointwise on demand.
class LazyElement {
public:
    explicit LazyElement(const StabChain& sc) : sc_(sc), u_(sc.length()) {}

    void set_rank(std::uint64_t r) {
        for (std::size_t i = 0; i < u_.size(); ++i) {
            const std::size_t n = sc_.orbit_size(i);
            u_[i] = &sc_.transversal(i, r % n);
            r /= n;
        }
    }
    Point operator()(Point x) const {
        for (std::size_t i = u_.size(); i-- > 0;) x = (*u_[i])[x];
        return x;
    }
    Perm materialize(std::size_t degree) const {
        Perm p(degree);
        for (std::size_t x = 0; x < degree; ++x) p[x] = (*this)(static_cast<Point>(x));
        return p;
    }

private:
    const StabChain& sc_;
    std::vector<const Perm*> u_;
};

// Returns true when the lazily evaluated x is lexicographically less than best.
bool lazy_less(const LazyElement& x, const Perm& best) {
    for (std::size_t i = 0; i < best.size(); ++i) {
        const Point v = x(static_cast<Point>(i));
        if (v != best[i]) return v < best[i];
    }
    return false;
}

bool canonical_less(const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.size != b.size) return a.size < b.size;
    return a.rep < b.rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// Classes

ClassTable::ClassTable(PermGroup group, std::vector<ConjugacyClass> classes, std::vector<std::uint32_t> index)
    : group_(std::move(group)), classes_(std::move(classes)), index_(std::move(index)) {
    group_order_ = group_.order_u64();
    for (const auto& c : classes_) exponent_ = lcm_u64(exponent_, c.order);
    power_tables_.resize(classes_.size());
}

std::pair<Perm, std::uint64_t> class_closure_min(const PermGroup& G, const Perm& g) {
    const StabChain& sc = G.chain();
    std::vector<Perm> gens_inv;
    for (const auto& c : G.generators()) gens_inv.push_back(inverse(c));
    std::unordered_set<std::uint64_t> seen;
    std::deque<Perm> queue;
    seen.insert(sc.rank(g));
    queue.push_back(g);
    Perm best = g;
    while (!queue.empty()) {
        Perm x = std::move(queue.front());
        queue.pop_front();
        if (x < best) best = x;
        for (const auto& c : G.generators()) {
            Perm y = conjugate(x, c);
            if (seen.insert(sc.rank(y)).second) queue.push_back(std::move(y));
        }
    }
    return {best, seen.size()};
}

std::size_t ClassTable::class_of(const Perm& g) const {
    if (has_dense_index()) {
        const std::uint64_t r = group_.chain().rank(g);
        if (r == UINT64_MAX) throw std::invalid_argument("class_of: element not in group");
        return index_[r];
    }
    auto [rep, size] = class_closure_min(group_, g);
    const std::uint64_t ord = perm_order(g);
    ConjugacyClass key{rep, size, ord};
    auto it = std::lower_bound(classes_.begin(), classes_.end(), key, canonical_less);
    if (it == classes_.end() || it->rep != rep) throw std::logic_error("class_of: class not found in table");
    return static_cast<std::size_t>(it - classes_.begin());
}

const std::vector<std::uint32_t>& ClassTable::power_table(std::size_t c) const {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& tab = power_tables_.at(c);
    if (!tab.empty()) return tab;
    const Perm& g = classes_[c].rep;
    Perm x = group_.identity();
    std::vector<std::uint32_t> out(classes_[c].order);
    for (std::uint64_t t = 0; t < classes_[c].order; ++t) {
        out[t] = static_cast<std::uint32_t>(class_of(x));
        x = compose(x, g);
    }
    tab = std::move(out);
    return tab;
}

ClassTable conjugacy_classes(const PermGroup& G, const EnumOptions& opts) {
    const BigInt big = G.order();
    if (big > BigInt(opts.cap))
        throw ResourceError("group order " + big.str() + " exceeds enumeration cap of " + std::to_string(opts.cap));
    const std::uint64_t N = static_cast<std::uint64_t>(big);
    const StabChain& sc = G.chain();
    const std::size_t L = sc.length();
    const std::size_t n = G.degree();

    std::vector<Perm> cs = G.generators(), cinv;
    for (const auto& c : cs) cinv.push_back(inverse(c));

    std::vector<std::uint32_t> index(N, kUnset);
    struct Raw {
        Perm rep;
        std::uint64_t size;
    };
    std::vector<Raw> raw;
    LazyElement x(sc);
    std::vector<Point> imgs(L);
    std::vector<std::uint32_t> queue;

    for (std::uint64_t r0 = 0; r0 < N; ++r0) {
        if (index[r0] != kUnset) continue;
        const std::uint32_t cid = static_cast<std::uint32_t>(raw.size());
        index[r0] = cid;
        queue.assign(1, static_cast<std::uint32_t>(r0));
        x.set_rank(r0);
        Perm best = x.materialize(n);
        std::uint64_t size = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint64_t r = queue[head];
            ++size;
            x.set_rank(r);
            if (head != 0 && lazy_less(x, best)) best = x.materialize(n);
            for (std::size_t k = 0; k < cs.size(); ++k) {
                // (c^-1 x c)[b] = c[x[c^-1[b]]]
                for (std::size_t i = 0; i < L; ++i) imgs[i] = cs[k][x(cinv[k][sc.base_point(i)])];
                const std::uint64_t ry = sc.rank_from_base_images(imgs.data());
                if (index[ry] == kUnset) {
                    index[ry] = cid;
                    queue.push_back(static_cast<std::uint32_t>(ry));
                }
            }
        }
        raw.push_back({std::move(best), size});
    }

    std::vector<ConjugacyClass> classes;
    classes.reserve(raw.size());
    for (auto& rc : raw) {
        const std::uint64_t ord = perm_order(rc.rep);
        classes.push_back({std::move(rc.rep), rc.size, ord});
    }
    std::vector<std::uint32_t> perm(classes.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint32_t>(i);
    std::sort(perm.begin(), perm.end(),
              [&](std::uint32_t a, std::uint32_t b) { return canonical_less(classes[a], classes[b]); });
    std::vector<std::uint32_t> remap(classes.size());
    std::vector<ConjugacyClass> sorted;
    sorted.reserve(classes.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        remap[perm[i]] = static_cast<std::uint32_t>(i);
        sorted.push_back(std::move(classes[perm[i]]));
    }
    for (auto& v : index) v = remap[v];
    return ClassTable(G, std::move(sorted), std::move(index));
}

// ---------------------------------------------------------------------------
// Derived data

PPartSplit p_part_split(const Perm& g, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p_part_split: p must be prime");
    const std::uint64_t m = perm_order(g);
    const std::uint64_t mp = p_part(m, p), mq = m / mp;
    PPartSplit out;
    // a*mq = 1 (mod mp) and b*mp = 1 (mod mq)
    const std::uint64_t a = mp == 1 ? 0 : invmod(mq % mp, mp);
    const std::uint64_t b = mq == 1 ? 0 : invmod(mp % mq, mq);
    out.p_part = power(g, static_cast<std::int64_t>(a * mq % m));
    out.p_prime_part = power(g, static_cast<std::int64_t>(b * mp % m));
    return out;
}

ClassCounts class_counts(const ClassTable& T, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("class_counts: p must be prime");
    ClassCounts out;
    out.p = p;
    out.k = T.size();
    for (const auto& c : T.classes()) {
        if (c.order % p != 0) ++out.k_p_prime;
        else if (p_part(c.order, p) == c.order) ++out.k_p;
    }
    return out;
}

std::vector<std::size_t> power_class_map(const ClassTable& T, std::int64_t k) {
    const std::uint64_t e = T.exponent();
    std::int64_t km = k % static_cast<std::int64_t>(e);
    if (km < 0) km += static_cast<std::int64_t>(e);
    if (gcd_u64(static_cast<std::uint64_t>(km), e) != 1 && e != 1)
        throw std::invalid_argument("power_class_map: k must be coprime to the exponent");
    std::vector<std::size_t> out(T.size());
    for (std::size_t c = 0; c < T.size(); ++c) {
        const auto& tab = T.power_table(c);
        out[c] = tab[static_cast<std::uint64_t>(km) % T[c].order];
    }
    return out;
}

std::size_t galois_fixed_class_count(const ClassTable& T, std::uint64_t p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("galois_fixed_class_count: p must be an odd prime");
    if (T.group_order() % p != 0) throw std::invalid_argument("galois_fixed_class_count: p must divide |G|");
    const std::uint64_t e = T.exponent();
    const std::uint64_t ep = p_part(e, p), eq = e / ep;
    const std::uint64_t phi = euler_phi(ep);
    std::uint64_t gen = 2;
    while (multiplicative_order(gen, ep) != phi) ++gen;
    // k = gen (mod ep), k = 1 (mod eq)
    std::uint64_t k = gen % ep;
    while (k % eq != 1 % eq) k += ep;
    const auto map = power_class_map(T, static_cast<std::int64_t>(k));
    std::size_t fixed = 0;
    for (std::size_t c = 0; c < map.size(); ++c) fixed += map[c] == c;
    return fixed;
}

PermGroup quotient_group(const PermGroup& G, const std::vector<Perm>& normal_gens, const EnumOptions& opts) {
    const std::size_t n = G.degree();
    for (const auto& x : normal_gens) {
        check_perm(x, n);
        if (!G.contains(x)) throw std::invalid_argument("quotient_group: generator of N is not in G");
    }
    PermGroup N(n, normal_gens);
    for (const auto& x : normal_gens) {
        for (const auto& c : G.generators()) {
            Perm y = conjugate(x, c);
            if (!N.contains(y)) throw NotNormalError("quotient_group: subgroup is not normal", y);
        }
    }
    const BigInt big = G.order();
    if (big > BigInt(opts.cap)) throw ResourceError("quotient_group: |G| exceeds enumeration cap of " + std::to_string(opts.cap));
    const std::uint64_t order = static_cast<std::uint64_t>(big);
    const std::uint64_t norder = N.order_u64();
    const std::uint64_t index = order / norder;
    if (index > kMaxDegree) throw ResourceError("quotient_group: index exceeds degree cap 65536");

    const StabChain& sc = G.chain();
    std::vector<std::uint32_t> coset(order, kUnset);
    std::vector<Perm> reps;
    std::vector<Perm> nelems;
    nelems.reserve(norder);
    for (std::uint64_t r = 0; r < norder; ++r) nelems.push_back(N.chain().unrank(r));
    for (std::uint64_t r = 0; r < order; ++r) {
        if (coset[r] != kUnset) continue;
        const std::uint32_t id = static_cast<std::uint32_t>(reps.size());
        Perm g = sc.unrank(r);
        for (const auto& m : nelems) coset[sc.rank(compose(m, g))] = id;
        reps.push_back(std::move(g));
    }
    std::vector<Perm> qgens;
    for (const auto& s : G.generators()) {
        Perm img(index);
        for (std::size_t i = 0; i < index; ++i) img[i] = static_cast<Point>(coset[sc.rank(compose(reps[i], s))]);
        qgens.push_back(std::move(img));
    }
    return PermGroup(index, std::move(qgens));
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& gens) {
    std::vector<Perm> hg;
    for (const auto& g : gens)
        if (!is_identity(g)) hg.push_back(g);
    PermGroup H(G.degree(), hg);
    for (std::size_t i = 0; i < hg.size(); ++i) {
        for (const auto& c : G.generators()) {
            Perm y = conjugate(hg[i], c);
            if (!H.contains(y)) {
                hg.push_back(std::move(y));
                H = PermGroup(G.degree(), hg);
            }
        }
    }
    return H;
}

PermGroup derived_subgroup(const PermGroup& G) {
    std::vector<Perm> comms;
    const auto& gs = G.generators();
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
            // [a,b] = a^-1 b^-1 a b
            Perm c = compose(compose(inverse(gs[i]), inverse(gs[j])), compose(gs[i], gs[j]));
            if (!is_identity(c)) comms.push_back(std::move(c));
        }
    return normal_closure(G, comms);
}

bool is_solvable(const PermGroup& G) {
    PermGroup H = G;
    for (;;) {
        if (H.order() == 1) return true;
        PermGroup D = derived_subgroup(H);
        if (D.order() == H.order()) return false;
        H = std::move(D);
    }
}

// ---------------------------------------------------------------------------
// Cache

namespace {

void write_tuple(std::ostream& out, const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
}

Perm read_tuple(std::istream& in, std::size_t n) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned v;
        if (!(in >> v) || v >= n) throw std::runtime_error("class cache: bad image tuple");
        p[i] = static_cast<Point>(v);
    }
    return p;
}

void expect_word(std::istream& in, const std::string& w) {
    std::string got;
    if (!(in >> got) || got != w) throw std::runtime_error("class cache: expected '" + w + "'");
}

}  // namespace

void write_class_cache(const ClassTable& T, std::ostream& out) {
    const PermGroup& G = T.group();
    out << kClassCacheVersion << "\n";
    out << "degree " << G.degree() << "\n";
    out << "generators " << G.generators().size() << "\n";
    for (const auto& g : G.generators()) {
        write_tuple(out, g);
        out << "\n";
    }
    out << "order " << T.group_order() << "\n";
    out << "classes " << T.size() << "\n";
    for (const auto& c : T.classes()) {
        out << c.size << " " << c.order << " : ";
        write_tuple(out, c.rep);
        out << "\n";
    }
}

ClassTable read_class_cache(std::istream& in, std::uint64_t seed) {
    std::string version;
    std::getline(in, version);
    if (version != kClassCacheVersion) throw std::runtime_error("class cache: version mismatch");
    std::size_t n = 0, ngens = 0, nclasses = 0;
    std::uint64_t order = 0;
    expect_word(in, "degree");
    in >> n;
    expect_word(in, "generators");
    in >> ngens;
    if (!in || n == 0 || n > kMaxDegree) throw std::runtime_error("class cache: bad header");
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < ngens; ++i) gens.push_back(read_tuple(in, n));
    expect_word(in, "order");
    in >> order;
    expect_word(in, "classes");
    in >> nclasses;
    if (!in) throw std::runtime_error("class cache: bad header");
    PermGroup G(n, gens);
    if (G.order() != BigInt(order)) throw std::runtime_error("class cache: group order mismatch");

    std::vector<ConjugacyClass> classes;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nclasses; ++i) {
        ConjugacyClass c;
        if (!(in >> c.size >> c.order)) throw std::runtime_error("class cache: bad class record");
        expect_word(in, ":");
        c.rep = read_tuple(in, n);
        if (!is_permutation(c.rep) || !G.contains(c.rep)) throw std::runtime_error("class cache: representative not in group");
        if (perm_order(c.rep) != c.order) throw std::runtime_error("class cache: element order mismatch");
        if (c.size == 0 || order % c.size != 0) throw std::runtime_error("class cache: class size does not divide |G|");
        if (!classes.empty() && !canonical_less(classes.back(), c)) throw std::runtime_error("class cache: not canonically ordered");
        total += c.size;
        classes.push_back(std::move(c));
    }
    if (total != order) throw std::runtime_error("class cache: class sizes do not sum to |G|");
    if (classes.empty() || classes[0].size != 1 || classes[0].order != 1)
        throw std::runtime_error("class cache: identity class missing");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, order - 1);
    for (int trial = 0; trial < 10; ++trial) {
        Perm g = G.chain().unrank(dist(rng));
        auto [rep, size] = class_closure_min(G, g);
        ConjugacyClass key{rep, size, perm_order(g)};
        auto it = std::lower_bound(classes.begin(), classes.end(), key, canonical_less);
        if (it == classes.end() || it->rep != rep || it->size != size)
            throw std::runtime_error("class cache: spot check found an element outside the listed classes");
    }
    return ClassTable(G, std::move(classes), {});
}

}  // namespace regclass
