#include "group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "errors.hpp"

namespace cusp {

namespace {

// Product-replacement random elements; only used to seed the chain quickly.
class ProductReplacement {
public:
    ProductReplacement(const std::vector<MatrixGF2>& gens, uint64_t seed) : rng_(seed) {
        while (s_.size() < 10)
            for (const auto& g : gens) s_.push_back(g);
        acc_ = MatrixGF2::identity(gens[0].dim());
        for (int i = 0; i < 60; ++i) next();
    }
    MatrixGF2 next() {
        std::uniform_int_distribution<size_t> d(0, s_.size() - 1);
        size_t i = d(rng_), j = d(rng_);
        while (j == i) j = d(rng_);
        s_[i] = (rng_() & 1) ? s_[i] * s_[j] : s_[j] * s_[i];
        acc_ = acc_ * s_[i];
        return acc_;
    }

private:
    std::mt19937_64 rng_;
    std::vector<MatrixGF2> s_;
    MatrixGF2 acc_;
};

size_t capped_orbit(const BitVec& start, const std::vector<const MatrixGF2*>& gens, size_t cap) {
    std::unordered_set<BitVec, BitVecHash> seen{start};
    std::vector<BitVec> q{start};
    for (size_t i = 0; i < q.size(); ++i)
        for (const auto* g : gens) {
            BitVec w = g->apply(q[i]);
            if (seen.insert(w).second) {
                q.push_back(w);
                if (q.size() > cap) return q.size();
            }
        }
    return q.size();
}

}  // namespace

Group::Group(int dim, std::vector<MatrixGF2> gens, GroupOptions opt)
    : d_(dim), gens_(std::move(gens)), opt_(opt) {
    if (dim < 1 || dim > kMaxDim) throw InputError("group dimension out of range");
    for (const auto& g : gens_) {
        if (g.dim() != d_) throw InputError("generator dimension mismatch");
        if (g.rank() != d_) throw InputError("singular generator");
    }
    build();
}

int Group::push_strong(const MatrixGF2& m) {
    strong_.push_back(m);
    strong_inv_.push_back(*m.inverse());
    return int(strong_.size()) - 1;
}

void Group::add_gen(Level& L, int g) {
    L.gens.push_back(g);
    auto try_add = [&](size_t i, int s) {
        BitVec w = strong_[s].apply(L.pts[i]);
        if (L.index.count(w)) return;
        L.index.emplace(w, int(L.pts.size()));
        L.pts.push_back(w);
        L.parent.push_back(int(i));
        L.via.push_back(s);
        if (L.pts.size() > opt_.orbit_cap) throw BudgetError("stabilizer-chain orbit exceeds cap");
    };
    size_t old = L.pts.size();
    for (size_t i = 0; i < old; ++i) try_add(i, g);
    for (size_t i = old; i < L.pts.size(); ++i)
        for (int s : L.gens) try_add(i, s);
}

MatrixGF2 Group::transversal(const Level& L, int idx) const {
    std::vector<int> path;
    for (int i = idx; i != 0; i = L.parent[i]) path.push_back(L.via[i]);
    MatrixGF2 u = MatrixGF2::identity(d_);
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * strong_[*it];
    return u;
}

std::pair<MatrixGF2, size_t> Group::sift(MatrixGF2 h, size_t from) const {
    for (size_t j = from; j < levels_.size(); ++j) {
        const Level& L = levels_[j];
        auto it = L.index.find(h.apply(L.point));
        if (it == L.index.end()) return {h, j};
        for (int i = it->second; i != 0; i = L.parent[i]) h = h * strong_inv_[L.via[i]];
    }
    return {h, levels_.size()};
}

BitVec Group::smallest_orbit_point(const MatrixGF2& h, const std::vector<const MatrixGF2*>& gs,
                                   bool any_moved) const {
    size_t best = SIZE_MAX;
    BitVec pick{0, 0};
    for (int i = 0; i < d_; ++i) {
        BitVec e = unit_vector(i);
        bool moved = h.apply(e) != e;
        if (any_moved)
            for (const auto* g : gs) moved |= g->apply(e) != e;
        if (!moved) continue;
        size_t n = capped_orbit(e, gs, best == SIZE_MAX ? 200000 : best);
        if (n < best) best = n, pick = e;
    }
    return pick;
}

void Group::start_level(const BitVec& pt) {
    Level L;
    L.point = pt;
    L.pts.push_back(pt);
    L.index.emplace(pt, 0);
    L.parent.push_back(-1);
    L.via.push_back(-1);
    levels_.push_back(std::move(L));
}

void Group::new_level(const MatrixGF2& h) {
    // Candidate points: unit vectors moved by h. Pick the one with the
    // smallest orbit under the generators known to fix the current base.
    std::vector<const MatrixGF2*> gs{&h};
    for (size_t s = 0; s < strong_.size(); ++s) {
        bool fixes = true;
        for (const auto& L : levels_)
            if (strong_[s].apply(L.point) != L.point) { fixes = false; break; }
        if (fixes) gs.push_back(&strong_[s]);
    }
    start_level(smallest_orbit_point(h, gs, false));
}

void Group::build() {
    std::vector<MatrixGF2> nontriv;
    for (const auto& g : gens_)
        if (!g.is_identity()) nontriv.push_back(g);
    if (nontriv.empty()) {
        order_ = 1;
        return;
    }
    // First base point: unit vector with the smallest orbit under G.
    std::vector<const MatrixGF2*> gs;
    for (const auto& g : nontriv) gs.push_back(&g);
    start_level(smallest_orbit_point(nontriv[0], gs, true));
    for (const auto& g : nontriv) add_gen(levels_[0], push_strong(g));

    // Random phase: sift random elements until a run of them sift through.
    ProductReplacement pr(nontriv, opt_.seed);
    for (int quiet = 0; quiet < 40;) {
        auto [r, j] = sift(pr.next(), 0);
        if (r.is_identity()) {
            ++quiet;
            continue;
        }
        quiet = 0;
        if (j == levels_.size()) new_level(r);
        int s = push_strong(r);
        for (size_t l = 1; l <= j; ++l) add_gen(levels_[l], s);
    }

    // Deterministic phase: every Schreier generator must sift to identity.
    std::vector<std::unordered_set<uint64_t>> done(levels_.size());
    long i = long(levels_.size()) - 1;
    while (i >= 0) {
        bool restarted = false;
        for (size_t p = 0; p < levels_[i].pts.size() && !restarted; ++p) {
            for (size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
                Level& L = levels_[i];
                uint64_t key = (uint64_t(p) << 24) | gi;
                if (done[i].count(key)) continue;
                int s = L.gens[gi];
                int q = L.index.at(strong_[s].apply(L.pts[p]));
                if (L.parent[q] == int(p) && L.via[q] == s) {
                    done[i].insert(key);
                    continue;
                }
                auto [r, j] = sift(transversal(L, int(p)) * strong_[s], i);
                if (!r.is_identity()) {
                    if (j == levels_.size()) {
                        new_level(r);
                        done.emplace_back();
                    }
                    int t = push_strong(r);
                    for (size_t l = size_t(i) + 1; l <= j; ++l) add_gen(levels_[l], t);
                    i = long(j);
                    restarted = true;
                    break;
                }
                done[i].insert(key);
            }
        }
        if (!restarted) --i;
    }

    order_ = 1;
    for (const auto& L : levels_) order_ *= (unsigned long)L.pts.size();
}

bool Group::contains(const MatrixGF2& m) const {
    if (m.dim() != d_) return false;
    return sift(m, 0).first.is_identity();
}

std::vector<BitVec> Group::base() const {
    std::vector<BitVec> b;
    for (const auto& L : levels_) b.push_back(L.point);
    return b;
}

std::vector<size_t> Group::orbit_sizes() const {
    std::vector<size_t> b;
    for (const auto& L : levels_) b.push_back(L.pts.size());
    return b;
}

MatrixGF2 Group::random_element(std::mt19937_64& rng) const {
    MatrixGF2 g = MatrixGF2::identity(d_);
    for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
        std::uniform_int_distribution<size_t> pick(0, it->pts.size() - 1);
        g = g * transversal(*it, int(pick(rng)));
    }
    return g;
}

std::vector<MatrixGF2> Group::elements() const {
    if (order_ > opt_.enumeration_bound)
        throw BudgetError("group order " + order_.get_str() + " exceeds enumeration bound");
    std::vector<MatrixGF2> out{MatrixGF2::identity(d_)};
    std::unordered_set<MatrixGF2, MatrixHash> seen{out[0]};
    for (size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens_) {
            MatrixGF2 y = out[i] * g;
            if (seen.insert(y).second) out.push_back(y);
        }
    return out;
}

int EnumeratedGroup::class_of_matrix(const MatrixGF2& m) const {
    auto it = index.find(m);
    if (it == index.end()) throw InputError("matrix is not an element of the group");
    return class_of[it->second];
}

namespace {

std::vector<int> prime_divisors(uint64_t n) {
    std::vector<int> ps;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ps.push_back(int(p));
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(int(n));
    return ps;
}

}  // namespace

EnumeratedGroup enumerate_classes(const Group& g) {
    EnumeratedGroup E;
    E.elements = g.elements();
    const size_t N = E.elements.size();
    for (size_t i = 0; i < N; ++i) E.index.emplace(E.elements[i], int(i));
    std::vector<MatrixGF2> inv;
    for (const auto& s : g.generators()) inv.push_back(*s.inverse());

    std::vector<std::vector<int>> members;
    std::vector<int> raw(N, -1);
    for (size_t i = 0; i < N; ++i) {
        if (raw[i] >= 0) continue;
        int c = int(members.size());
        members.push_back({int(i)});
        raw[i] = c;
        for (size_t k = 0; k < members[c].size(); ++k) {
            const MatrixGF2& x = E.elements[members[c][k]];
            for (size_t s = 0; s < inv.size(); ++s) {
                int y = E.index.at(inv[s] * x * g.generators()[s]);
                if (raw[y] < 0) raw[y] = c, members[c].push_back(y);
            }
        }
    }

    struct Info {
        int raw;
        uint64_t order, size;
        MatrixGF2 rep;
    };
    std::vector<Info> info;
    for (size_t c = 0; c < members.size(); ++c) {
        const auto& mem = members[c];
        int best = mem[0];
        for (int x : mem)
            if (E.elements[x] < E.elements[best]) best = x;
        info.push_back({int(c), element_order(E.elements[best]), mem.size(), E.elements[best]});
    }
    std::sort(info.begin(), info.end(), [](const Info& a, const Info& b) {
        if (a.order != b.order) return a.order < b.order;
        if (a.size != b.size) return a.size < b.size;
        return a.rep < b.rep;
    });
    std::vector<int> rawpos(members.size());
    for (size_t k = 0; k < info.size(); ++k) rawpos[info[k].raw] = int(k);
    E.class_of.resize(N);
    for (size_t i = 0; i < N; ++i) E.class_of[i] = rawpos[raw[i]];

    auto& C = E.classes;
    for (const auto& x : info) {
        C.reps.push_back(x.rep);
        C.sizes.push_back(BigInt((unsigned long)x.size));
        C.orders.push_back(int(x.order));
    }
    C.primes = prime_divisors(N);
    for (size_t j = 0; j < info.size(); ++j) {
        std::vector<int> pc;
        MatrixGF2 x = MatrixGF2::identity(g.dim());
        for (int k = 0; k < C.orders[j]; ++k) {
            pc.push_back(E.class_of_matrix(x));
            x = x * C.reps[j];
        }
        C.power_class.push_back(pc);
        C.inverse.push_back(pc[(C.orders[j] - 1) % C.orders[j]]);
    }
    for (int p : C.primes) {
        std::vector<int> pm;
        for (size_t j = 0; j < info.size(); ++j) pm.push_back(C.power_class[j][p % C.orders[j]]);
        C.power[p] = pm;
    }
    return E;
}

ConjClassList conjugacy_classes(const Group& g) { return enumerate_classes(g).classes; }

uint64_t centralizer_order_bruteforce(const Group& g, const MatrixGF2& x) {
    uint64_t n = 0;
    for (const auto& y : g.elements())
        if (x * y == y * x) ++n;
    return n;
}

const char* to_string(Conjugacy c) {
    switch (c) {
        case Conjugacy::Conjugate: return "conjugate";
        case Conjugacy::NotConjugate: return "not conjugate";
        default: return "inconclusive";
    }
}

Conjugacy are_conjugate(const Group& g, const MatrixGF2& a, const MatrixGF2& b, uint64_t samples) {
    if (!g.contains(a) || !g.contains(b)) throw InputError("element is not in the group");
    if (a == b) return Conjugacy::Conjugate;
    if (element_order(a) != element_order(b)) return Conjugacy::NotConjugate;
    // Similarity invariants: ranks of (x - 1)^k.
    const int d = g.dim();
    MatrixGF2 I = MatrixGF2::identity(d), pa = I, pb = I;
    for (int k = 1; k <= d; ++k) {
        pa = pa * (a + I);
        pb = pb * (b + I);
        if (pa.rank() != pb.rank()) return Conjugacy::NotConjugate;
    }
    if (g.order() <= g.options().enumeration_bound) {
        std::unordered_set<MatrixGF2, MatrixHash> seen{a};
        std::vector<MatrixGF2> q{a};
        std::vector<MatrixGF2> inv;
        for (const auto& s : g.generators()) inv.push_back(*s.inverse());
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t s = 0; s < inv.size(); ++s) {
                MatrixGF2 y = inv[s] * q[i] * g.generators()[s];
                if (y == b) return Conjugacy::Conjugate;
                if (seen.insert(y).second) q.push_back(y);
            }
        return Conjugacy::NotConjugate;
    }
    // Birthday search: grow random conjugate sets of a and b side by side
    // and stop at the first common element.
    std::mt19937_64 rng(g.options().seed ^ 0xc0ffee);
    std::unordered_set<MatrixGF2, MatrixHash> sa{a}, sb{b};
    for (uint64_t i = 0; i < samples; ++i) {
        MatrixGF2 h = g.random_element(rng);
        MatrixGF2 ca = *h.inverse() * a * h;
        if (sb.count(ca)) return Conjugacy::Conjugate;
        sa.insert(ca);
        h = g.random_element(rng);
        MatrixGF2 cb = *h.inverse() * b * h;
        if (sa.count(cb)) return Conjugacy::Conjugate;
        sb.insert(cb);
    }
    return Conjugacy::Inconclusive;
}

MatrixGF2 CosetAction::key(const MatrixGF2& x) const {
    MatrixGF2 best = subgroup[0] * x;
    for (size_t i = 1; i < subgroup.size(); ++i) {
        MatrixGF2 y = subgroup[i] * x;
        if (y < best) best = y;
    }
    return best;
}

size_t CosetAction::fixed_points(const MatrixGF2& g) const {
    size_t n = 0;
    for (size_t i = 0; i < degree; ++i) {
        auto it = lookup.find(key(reps[i] * g));
        if (it == lookup.end()) throw InputError("element does not act on these cosets");
        if (it->second == int(i)) ++n;
    }
    return n;
}

CosetAction coset_action(const Group& g, const Group& h, uint64_t max_degree) {
    if (h.dim() != g.dim()) throw InputError("subgroup dimension mismatch");
    for (const auto& x : h.generators())
        if (!g.contains(x)) throw InputError("not a subgroup: generator outside the group");
    BigInt idx = g.order() / h.order();
    if (idx * h.order() != g.order()) throw InputError("not a subgroup: order does not divide");
    if (idx > (unsigned long)max_degree) throw BudgetError("index too large for coset action");
    CosetAction A;
    A.subgroup = h.elements();
    A.reps.push_back(MatrixGF2::identity(g.dim()));
    A.lookup.emplace(A.key(A.reps[0]), 0);
    A.images.assign(g.generators().size(), {});
    for (size_t i = 0; i < A.reps.size(); ++i)
        for (size_t s = 0; s < g.generators().size(); ++s) {
            MatrixGF2 y = A.reps[i] * g.generators()[s];
            MatrixGF2 k = A.key(y);
            auto it = A.lookup.find(k);
            int j;
            if (it == A.lookup.end()) {
                j = int(A.reps.size());
                A.lookup.emplace(k, j);
                A.reps.push_back(y);
            } else {
                j = it->second;
            }
            A.images[s].push_back(j);
        }
    A.degree = A.reps.size();
    if (BigInt((unsigned long)A.degree) != idx) throw MismatchError("coset count differs from index");
    return A;
}

}  // namespace cusp
