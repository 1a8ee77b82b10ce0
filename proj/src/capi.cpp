#include "cusp/cusp.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "../vendor/json.hpp"
#include "chartab.hpp"
#include "chevalley.hpp"
#include "ctab.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "fusion.hpp"
#include "verify.hpp"

using json = nlohmann::ordered_json;
using namespace cusp;

struct cusp_table {
    CharacterTable t;
};

namespace {

thread_local std::string g_error;

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
cusp_status guard(F&& f) {
    g_error.clear();
    try {
        return f();
    } catch (const InputError& e) {
        g_error = e.what();
        return CUSP_INPUT;
    } catch (const MismatchError& e) {
        g_error = e.what();
        return CUSP_MISMATCH;
    } catch (const BudgetError& e) {
        g_error = e.what();
        return CUSP_BUDGET;
    } catch (const std::exception& e) {
        g_error = e.what();
        return CUSP_INTERNAL;
    } catch (...) {
        g_error = "unknown failure";
        return CUSP_INTERNAL;
    }
}

std::string need(const char* s, const char* what) {
    if (!s) throw InputError(std::string(what) + " is required");
    return s;
}

std::vector<std::string> split_list(const char* s) {
    std::vector<std::string> out;
    if (!s) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

json combination_json(const std::string& type, const std::string& key, const char* key_name,
                      const Combination& c) {
    json j;
    j["type"] = type;
    j[key_name] = key;
    j["terms"] = json::array();
    for (const auto& [name, coeff] : c) j["terms"].push_back({{"name", name}, {"coeff", coeff.str()}});
    return j;
}

json report_json(const ZetaReport& r) {
    return {{"type", r.type},         {"pair", r.pair},
            {"class", r.class_name},  {"R", r.r_value.str()},
            {"chi", r.chi_value.str()}, {"sign", r.sign},
            {"zeta", r.zeta.str()},   {"unit", r.unit},
            {"full_match", r.full_match}, {"R_norm", r.r_norm.str()},
            {"chi_norm", r.chi_norm.str()}, {"law", r.law},
            {"audit", r.audit}};
}

bool is_chevalley_name(const std::string& g) {
    return g == "C2" || g == "D4" || g == "F4" || g == "E6" || g == "f4_P" || g == "e6_L";
}

CharacterTable compute_table(std::string g) {
    if (g == "sp4f2") g = "C2";
    if (g.rfind("gamma:", 0) == 0) return GammaGroup::get(g.substr(6)).table();
    if (g.size() > 1 && (g[0] == 's' || g[0] == 'S') && g.find_first_not_of("0123456789", 1) == std::string::npos) {
        int n = std::stoi(g.substr(1));
        if (n < 1 || n > 10) throw InputError("symmetric groups are supported for 1 <= n <= 10");
        return symmetric_table(n);
    }
    if (is_chevalley_name(g)) {
        std::string type = g == "f4_P" ? "F4" : g == "e6_L" ? "E6" : g;
        Group G(chevalley_basis(type).dim(), subgroup_generators(g));
        return character_table(G, g == "C2" ? "Sp4(2)" : g);
    }
    throw InputError("unknown group '" + g + "' (expected sp4f2, sN, gamma:<id>, C2, D4, F4, E6, f4_P, e6_L)");
}

int class_index(const CharacterTable& t, const std::string& name, const char* which) {
    int k = t.find_class(name);
    if (k < 0) throw InputError(std::string("unknown ") + which + " class '" + name + "'");
    return k;
}

json fusion_json(const FusionResult& r, const CharacterTable& sub, const CharacterTable& big) {
    json j;
    j["complete"] = r.complete;
    j["nodes"] = r.nodes;
    j["count"] = r.maps.size();
    j["maps"] = json::array();
    for (const auto& m : r.maps) {
        json row = json::object();
        for (size_t i = 0; i < m.size(); ++i) row[sub.classes[i].name] = big.classes[m[i]].name;
        j["maps"].push_back(row);
    }
    json images = json::object();
    for (size_t i = 0; i < sub.size(); ++i) images[sub.classes[i].name] = fusion_images(r, big, int(i));
    j["images"] = images;
    return j;
}

}  // namespace

extern "C" {

const char* cusp_last_error(void) { return g_error.c_str(); }

void cusp_string_free(char* s) { std::free(s); }

cusp_status cusp_fourier_matrix(const char* gamma, char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!out) throw InputError("output pointer is null");
        FourierMatrix m = fourier_matrix(GammaGroup::get(need(gamma, "gamma")));
        std::string s;
        for (const auto& row : m.entries) {
            for (size_t k = 0; k < row.size(); ++k) s += (k ? " " : "") + row[k].str();
            s += '\n';
        }
        *out = dup(s);
        return CUSP_OK;
    });
}

cusp_status cusp_gamma_pairs(const char* gamma, char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!out) throw InputError("output pointer is null");
        json j = json::array();
        for (const auto& p : GammaGroup::get(need(gamma, "gamma")).pairs()) j.push_back(p.name);
        *out = dup(j.dump());
        return CUSP_OK;
    });
}

cusp_status cusp_family_row(const char* type, const char* pair, char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!out) throw InputError("output pointer is null");
        std::string ty = need(type, "type"), p = need(pair, "pair");
        json j = combination_json(ty, p, "pair", almost_character_row(ty, p));
        j["degree"] = almost_character_degree(ty, p).str();
        *out = dup(j.dump());
        return CUSP_OK;
    });
}

cusp_status cusp_unipotent_row(const char* type, const char* name, char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!out) throw InputError("output pointer is null");
        std::string ty = need(type, "type"), n = need(name, "name");
        *out = dup(combination_json(ty, n, "name", unipotent_character_row(ty, n)).dump());
        return CUSP_OK;
    });
}

cusp_status cusp_printed_rows_check(char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!out) throw InputError("output pointer is null");
        json rows = json::array();
        bool all = true;
        for (const auto& pr : printed_rows()) {
            Combination c = almost_character_row(pr.type, pr.pair);
            const auto& fam = family_data(pr.type);
            // every unipotent character of the family is compared, absent terms count as 0
            std::vector<std::string> diffs;
            for (const auto& e : fam.entries) {
                Cyclotomic want;
                for (const auto& [n, v] : pr.terms)
                    if (n == e.name) want = Cyclotomic::parse(v);
                Cyclotomic got;
                for (const auto& [n, v] : c)
                    if (n == e.name) got = v;
                if (!(got == want)) diffs.push_back(e.name + ": got " + got.str() + ", printed " + want.str());
            }
            all = all && diffs.empty();
            json r = combination_json(pr.type, pr.pair, "pair", c);
            r["match"] = diffs.empty();
            r["differences"] = diffs;
            rows.push_back(r);
        }
        *out = dup(json{{"all_match", all}, {"rows", rows}}.dump());
        return all ? CUSP_OK : CUSP_MISMATCH;
    });
}

cusp_status cusp_sp4_verify(char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!out) throw InputError("output pointer is null");
        ZetaReport r = verify_sp4();
        *out = dup(report_json(r).dump());
        return r.unit && r.full_match ? CUSP_OK : CUSP_MISMATCH;
    });
}

cusp_status cusp_table_compute(const char* group, cusp_table** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!out) throw InputError("output pointer is null");
        *out = new cusp_table{compute_table(need(group, "group"))};
        return CUSP_OK;
    });
}

cusp_status cusp_table_parse(const char* text, cusp_table** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!out) throw InputError("output pointer is null");
        *out = new cusp_table{parse_ctab(need(text, "text"))};
        return CUSP_OK;
    });
}

cusp_status cusp_table_load(const char* path, cusp_table** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!out) throw InputError("output pointer is null");
        *out = new cusp_table{read_ctab_file(need(path, "path"))};
        return CUSP_OK;
    });
}

void cusp_table_free(cusp_table* t) { delete t; }

size_t cusp_table_class_count(const cusp_table* t) { return t ? t->t.size() : 0; }

cusp_status cusp_table_serialize(const cusp_table* t, char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!t || !out) throw InputError("null argument");
        *out = dup(serialize_ctab(t->t));
        return CUSP_OK;
    });
}

cusp_status cusp_table_validate(const cusp_table* t, char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!t || !out) throw InputError("null argument");
        auto v = validate_ctab(t->t);
        json j{{"name", t->t.name}, {"order", t->t.order.get_str()}, {"classes", t->t.size()},
               {"valid", v.empty()}, {"violations", v}};
        *out = dup(j.dump());
        if (!v.empty()) g_error = v.front();
        return v.empty() ? CUSP_OK : CUSP_MISMATCH;
    });
}

cusp_status cusp_fusion(const cusp_table* sub, const cusp_table* big, const char* pins,
                        unsigned long long node_limit, char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!sub || !big || !out) throw InputError("null argument");
        std::map<int, int> pin;
        for (const auto& item : split_list(pins)) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw InputError("pin '" + item + "' is not of the form sub=big");
            pin[class_index(sub->t, item.substr(0, eq), "subgroup")] =
                class_index(big->t, item.substr(eq + 1), "ambient");
        }
        FusionOptions opt;
        if (node_limit) opt.node_limit = node_limit;
        FusionResult r = possible_fusions(sub->t, big->t, pin, opt);
        *out = dup(fusion_json(r, sub->t, big->t).dump());
        if (!r.complete) {
            g_error = "node limit reached after " + std::to_string(r.nodes) + " nodes; list may be partial";
            return CUSP_BUDGET;
        }
        if (r.maps.empty()) {
            g_error = "no admissible fusion";
            return CUSP_MISMATCH;
        }
        return CUSP_OK;
    });
}

cusp_status cusp_fusion_images(const cusp_table* sub, const cusp_table* big, const char* sub_class,
                               unsigned long long node_limit, char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!sub || !big || !out) throw InputError("null argument");
        int k = class_index(sub->t, need(sub_class, "class"), "subgroup");
        FusionOptions opt;
        if (node_limit) opt.node_limit = node_limit;
        FusionResult r = possible_fusions(sub->t, big->t, {}, opt);
        auto im = fusion_images(r, big->t, k);
        *out = dup(json{{"class", sub_class}, {"images", im}, {"maps", r.maps.size()}, {"complete", r.complete}}.dump());
        if (!r.complete) {
            g_error = "node limit reached; images may be incomplete";
            return CUSP_BUDGET;
        }
        return CUSP_OK;
    });
}

cusp_status cusp_zeta_verify(const char* type, const cusp_table* t, const char* pair, const char* class_name,
                             const char* support, char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!t || !out) throw InputError("null argument");
        TableVerifyOptions opt;
        opt.support = split_list(support);
        ZetaReport r = verify_from_table(need(type, "type"), t->t, need(pair, "pair"), need(class_name, "class"), opt);
        *out = dup(report_json(r).dump());
        if (!r.unit) g_error = "zeta " + r.zeta.str() + " is not a root of unity";
        else if (!r.full_match) g_error = "R differs from sign*zeta*chi away from the support";
        return r.unit && r.full_match ? CUSP_OK : CUSP_MISMATCH;
    });
}

cusp_status cusp_zeta_extrapolate(const char* zeta, unsigned long m, char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!out) throw InputError("output pointer is null");
        if (m == 0) throw InputError("m must be positive");
        Cyclotomic z = Cyclotomic::parse(need(zeta, "zeta"));
        if (!(z * z.conj() == Cyclotomic(1))) throw InputError("zeta " + z.str() + " is not a root of unity");
        *out = dup(zeta_extrapolate(z, m).str());
        return CUSP_OK;
    });
}

cusp_status cusp_chev(const char* what, int grids, char** out) {
    if (out) *out = nullptr;
    return guard([&] {
        if (!out) throw InputError("output pointer is null");
        std::string w = need(what, "name");
        json j;
        if (w == "C2" || w == "D4" || w == "F4" || w == "E6") {
            const auto& cb = chevalley_basis(w);
            const auto& rs = cb.roots();
            auto cc = check_commutators(w);
            j = {{"type", w}, {"rank", rs.rank}, {"positive_roots", rs.npos}, {"dim", cb.dim()},
                 {"commutator_pairs", cc.pairs}, {"commutator_failures", cc.failures}, {"failed", cc.failed}};
            json gens = json::array();
            for (int r = 0; r < rs.npos; ++r) {
                json g{{"root", root_label(rs.roots[r])}};
                if (grids) g["matrix"] = cb.generator(r).grid();
                gens.push_back(g);
            }
            j["generators"] = gens;
            if (cc.failures) g_error = std::to_string(cc.failures) + " commutator relations fail";
            *out = dup(j.dump());
            return cc.failures ? CUSP_MISMATCH : CUSP_OK;
        }
        if (w == "list") {
            *out = dup(json(representative_names()).dump());
            return CUSP_OK;
        }
        ClassRepresentative r = named_representative(w);
        json word = json::array();
        for (const auto& x : r.word) word.push_back(root_label(x));
        j = {{"name", r.name}, {"type", r.type}, {"word", word}, {"order", r.expected_order},
             {"class", r.expected_class}, {"note", r.note}};
        if (grids) j["matrix"] = r.matrix.grid();
        *out = dup(j.dump());
        return CUSP_OK;
    });
}

}  // extern "C"
