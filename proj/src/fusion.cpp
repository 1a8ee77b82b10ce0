#include "fusion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "errors.hpp"

namespace cusp {

namespace {

using cplx = std::complex<double>;

cplx numeric(const Cyclotomic& z) {
    cplx s = 0;
    const int n = z.conductor();
    for (const auto& [k, v] : z.terms()) s += v.get_d() * std::polar(1.0, 2 * M_PI * k / n);
    return s;
}

bool divides(const BigInt& a, const BigInt& b) { return a != 0 && b % a == 0; }

bool static_ok(const CharacterTable& sub, const CharacterTable& big, int c, int k) {
    const auto& sc = sub.classes[c];
    const auto& bc = big.classes[k];
    if (sc.order != bc.order) return false;
    if ((c == sub.identity_class) != (k == big.identity_class)) return false;
    return divides(sub.centralizer(c), big.centralizer(k));
}

bool restriction_ok(const CharacterTable& sub, const CharacterTable& big, const FusionMap& f) {
    for (const auto& chi : big.irr) {
        ClassFunction res;
        for (size_t c = 0; c < sub.size(); ++c) res.push_back(chi[f[c]]);
        for (const auto& psi : sub.irr) {
            auto m = inner_product(sub, res, psi).as_integer();
            if (!m || *m < 0) return false;
        }
    }
    return true;
}

class Search {
public:
    Search(const CharacterTable& sub, const CharacterTable& big, FusionOptions opt)
        : sub_(sub), big_(big), opt_(opt), n_(sub.size()), f_(n_, -1) {
        cand_.resize(n_);
        for (size_t c = 0; c < n_; ++c)
            for (size_t k = 0; k < big.size(); ++k)
                if (static_ok(sub, big, int(c), int(k))) cand_[c].push_back(int(k));
        // who powers into whom
        pre_.resize(n_);
        for (size_t c = 0; c < n_; ++c)
            for (const auto& [p, d] : sub.classes[c].power) pre_[d].push_back({int(c), p});

        const double H = sub.order.get_d();
        nb_ = big.irr.size();
        ns_ = sub.irr.size();
        bigv_.assign(nb_, std::vector<cplx>(big.size()));
        for (size_t i = 0; i < nb_; ++i)
            for (size_t k = 0; k < big.size(); ++k) bigv_[i][k] = numeric(big.irr[i][k]);
        subw_.assign(ns_, std::vector<cplx>(n_));  // |c| conj(psi(c)) / |H|
        for (size_t j = 0; j < ns_; ++j)
            for (size_t c = 0; c < n_; ++c)
                subw_[j][c] = std::conj(numeric(sub.irr[j][c])) * (sub.classes[c].size.get_d() / H);
        maxabs_.assign(nb_, std::vector<double>(n_, 0));
        sum_.assign(nb_, std::vector<cplx>(ns_, 0));
        rem_.assign(nb_, std::vector<double>(ns_, 0));
        tol_.assign(nb_, std::vector<double>(ns_, 0));
    }

    void pin(int c, int k) {
        if (c < 0 || size_t(c) >= n_ || k < 0 || size_t(k) >= big_.size())
            throw InputError("pin " + std::to_string(c + 1) + "=" + std::to_string(k + 1) + " out of range");
        if (std::find(cand_[c].begin(), cand_[c].end(), k) == cand_[c].end())
            throw InputError("pin " + sub_.classes[c].name + "=" + big_.classes[k].name +
                             " violates order, identity or centralizer constraints");
        cand_[c] = {k};
    }

    FusionResult run() {
        for (size_t c = 0; c < n_; ++c)
            if (cand_[c].empty()) return {};
        for (size_t i = 0; i < nb_; ++i)
            for (size_t c = 0; c < n_; ++c)
                for (int k : cand_[c]) maxabs_[i][c] = std::max(maxabs_[i][c], std::abs(bigv_[i][k]));
        for (size_t i = 0; i < nb_; ++i)
            for (size_t j = 0; j < ns_; ++j) {
                double r = 0;
                for (size_t c = 0; c < n_; ++c) r += maxabs_[i][c] * std::abs(subw_[j][c]);
                rem_[i][j] = r;
                tol_[i][j] = 1e-7 * (1 + r);
            }
        order_.resize(n_);
        for (size_t c = 0; c < n_; ++c) order_[c] = int(c);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (sub_.classes[a].order != sub_.classes[b].order) return sub_.classes[a].order < sub_.classes[b].order;
            return cand_[a].size() < cand_[b].size();
        });
        try {
            dfs(0);
        } catch (const BudgetError&) {
            res_.complete = false;
        }
        std::sort(res_.maps.begin(), res_.maps.end());
        res_.nodes = nodes_;
        return res_;
    }

private:
    // Assign c -> k and everything forced by power maps; returns false on conflict.
    bool assign(int c, int k, std::vector<int>& trail) {
        if (f_[c] >= 0) return f_[c] == k;
        if (std::find(cand_[c].begin(), cand_[c].end(), k) == cand_[c].end()) return false;
        for (const auto& [d, p] : pre_[c])  // d^p lies in c
            if (f_[d] >= 0) {
                auto it = big_.classes[f_[d]].power.find(p);
                if (it != big_.classes[f_[d]].power.end() && it->second != k) return false;
            }
        f_[c] = k;
        trail.push_back(c);
        update(c, k, +1);
        for (const auto& [p, d] : sub_.classes[c].power) {
            auto it = big_.classes[k].power.find(p);
            if (it == big_.classes[k].power.end()) continue;
            if (!assign(d, it->second, trail)) return false;
        }
        return true;
    }

    void update(int c, int k, int sign) {
        for (size_t i = 0; i < nb_; ++i) {
            const cplx v = bigv_[i][k];
            const double m = maxabs_[i][c];
            for (size_t j = 0; j < ns_; ++j) {
                sum_[i][j] += double(sign) * v * subw_[j][c];
                rem_[i][j] -= double(sign) * m * std::abs(subw_[j][c]);
            }
        }
    }

    void undo(std::vector<int>& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            update(*it, f_[*it], -1);
            f_[*it] = -1;
        }
        trail.clear();
    }

    // Could the partial restriction still complete to non-negative integral multiplicities?
    bool feasible() const {
        for (size_t i = 0; i < nb_; ++i)
            for (size_t j = 0; j < ns_; ++j) {
                const double slack = std::max(rem_[i][j], 0.0) + tol_[i][j];
                const cplx s = sum_[i][j];
                if (std::abs(s.imag()) > slack) return false;
                if (s.real() + slack < 0) return false;
                double lo = std::ceil(s.real() - slack);
                if (lo > s.real() + slack) return false;
            }
        return true;
    }

    void dfs(size_t pos) {
        while (pos < n_ && f_[order_[pos]] >= 0) ++pos;
        if (pos == n_) {
            if (restriction_ok(sub_, big_, f_)) res_.maps.push_back(f_);
            return;
        }
        const int c = order_[pos];
        for (int k : cand_[c]) {
            if (++nodes_ > opt_.node_limit) throw BudgetError("fusion node limit");
            std::vector<int> trail;
            if (assign(c, k, trail) && feasible()) dfs(pos + 1);
            undo(trail);
        }
    }

    const CharacterTable& sub_;
    const CharacterTable& big_;
    FusionOptions opt_;
    size_t n_, nb_ = 0, ns_ = 0;
    FusionMap f_;
    std::vector<std::vector<int>> cand_;
    std::vector<std::vector<std::pair<int, int>>> pre_;
    std::vector<int> order_;
    std::vector<std::vector<cplx>> bigv_, subw_, sum_;
    std::vector<std::vector<double>> maxabs_, rem_, tol_;
    uint64_t nodes_ = 0;
    FusionResult res_;
};

}  // namespace

bool is_admissible_fusion(const CharacterTable& sub, const CharacterTable& big, const FusionMap& f) {
    if (f.size() != sub.size()) return false;
    for (size_t c = 0; c < f.size(); ++c) {
        if (f[c] < 0 || size_t(f[c]) >= big.size()) return false;
        if (!static_ok(sub, big, int(c), f[c])) return false;
        for (const auto& [p, d] : sub.classes[c].power) {
            auto it = big.classes[f[c]].power.find(p);
            if (it != big.classes[f[c]].power.end() && it->second != f[d]) return false;
        }
    }
    return restriction_ok(sub, big, f);
}

FusionResult possible_fusions(const CharacterTable& sub, const CharacterTable& big, const std::map<int, int>& pins,
                              FusionOptions opt) {
    if (sub.size() == 0 || big.size() == 0) throw InputError("empty character table");
    if (!divides(sub.order, big.order))
        throw InputError("subgroup order " + sub.order.get_str() + " does not divide " + big.order.get_str());
    Search s(sub, big, opt);
    for (const auto& [c, k] : pins) s.pin(c, k);
    return s.run();
}

std::vector<std::string> fusion_images(const FusionResult& r, const CharacterTable& big, int sub_class) {
    std::set<int> ks;
    for (const auto& f : r.maps) ks.insert(f.at(sub_class));
    std::vector<std::string> out;
    for (int k : ks) out.push_back(big.classes[k].name);
    return out;
}

}  // namespace cusp
