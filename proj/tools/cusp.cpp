// Command-line front end; talks to the library only through the C interface.
// Exit codes: 0 verified/ok, 1 mismatch, 2 input error, 3 budget, 4 internal.
#include <cusp/cusp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

namespace {

bool g_pretty = true;

struct Str {
    char* p = nullptr;
    ~Str() { cusp_string_free(p); }
};

struct Table {
    cusp_table* p = nullptr;
    ~Table() { cusp_table_free(p); }
};

int finish(cusp_status st, const char* text, bool is_json = true) {
    if (text) {
        if (is_json && g_pretty) std::cout << nlohmann::ordered_json::parse(text).dump(2) << "\n";
        else std::cout << text << (is_json ? "\n" : "");
    }
    if (st != CUSP_OK) std::cerr << "error: " << cusp_last_error() << "\n";
    return int(st);
}

// Loads a table from a file, or computes it when the argument is "compute:<group>".
int load(const std::string& arg, Table& t) {
    cusp_status st = arg.rfind("compute:", 0) == 0 ? cusp_table_compute(arg.c_str() + 8, &t.p)
                                                   : cusp_table_load(arg.c_str(), &t.p);
    if (st != CUSP_OK) std::cerr << "error: " << arg << ": " << cusp_last_error() << "\n";
    return int(st);
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier matrices, unipotent families, character tables and characteristic-function scalars"};
    app.require_subcommand(1);
    app.fallthrough();
    bool compact = false;
    app.add_flag("--compact", compact, "print JSON on one line");
    int rc = 0;

    std::string gamma;
    bool pairs_only = false;
    auto* fourier = app.add_subcommand("fourier", "Fourier matrix over M(Gamma), checked hermitian and involutive");
    fourier->add_option("--gamma", gamma, "Z2, Z3, Z4, S3, S4 or S5")->required();
    fourier->add_flag("--pairs", pairs_only, "list the pairs (row order) instead of the matrix");
    fourier->callback([&] {
        Str s;
        cusp_status st = pairs_only ? cusp_gamma_pairs(gamma.c_str(), &s.p) : cusp_fourier_matrix(gamma.c_str(), &s.p);
        rc = finish(st, s.p, pairs_only);
    });

    std::string type, pair, uname;
    auto* family = app.add_subcommand("family", "almost characters of the families");
    family->require_subcommand(1);
    auto* frow = family->add_subcommand("row", "R_pair as a combination of unipotent characters");
    frow->add_option("--type", type, "B2, D4, F4 or E6")->required();
    frow->add_option("--pair", pair, "e.g. \"(g3,theta)\"")->required();
    frow->callback([&] {
        Str s;
        cusp_status st = cusp_family_row(type.c_str(), pair.c_str(), &s.p);
        rc = finish(st, s.p);
    });
    auto* funi = family->add_subcommand("unipotent", "unipotent character in terms of almost characters");
    funi->add_option("--type", type)->required();
    funi->add_option("--name", uname)->required();
    funi->callback([&] {
        Str s;
        cusp_status st = cusp_unipotent_row(type.c_str(), uname.c_str(), &s.p);
        rc = finish(st, s.p);
    });
    auto* fcheck = family->add_subcommand("check", "compare with the published combinations");
    fcheck->callback([&] {
        Str s;
        cusp_status st = cusp_printed_rows_check(&s.p);
        rc = finish(st, s.p);
    });

    auto* sp4 = app.add_subcommand("sp4", "Sp4(F2) end-to-end replay");
    sp4->require_subcommand(1);
    sp4->add_subcommand("verify", "build group, table, family and solve for zeta")->callback([&] {
        Str s;
        cusp_status st = cusp_sp4_verify(&s.p);
        rc = finish(st, s.p);
    });

    auto* table = app.add_subcommand("table", "character tables");
    table->require_subcommand(1);
    std::string group, out_path, in_path;
    auto* tcomp = table->add_subcommand("compute", "compute and print a table in CTAB format");
    tcomp->add_option("--group", group, "sp4f2, sN (N<=10), gamma:<id>, C2, D4, F4, E6, f4_P, e6_L")->required();
    tcomp->add_option("-o,--output", out_path, "write to a file instead of stdout");
    tcomp->callback([&] {
        Table t;
        if ((rc = load("compute:" + group, t))) return;
        Str s;
        cusp_status st = cusp_table_serialize(t.p, &s.p);
        if (st == CUSP_OK && !out_path.empty()) {
            std::ofstream f(out_path);
            f << s.p;
            if (!f) {
                std::cerr << "error: cannot write " << out_path << "\n";
                rc = CUSP_INPUT;
                return;
            }
            rc = 0;
            return;
        }
        rc = finish(st, s.p, false);
    });
    auto* tval = table->add_subcommand("validate", "structural, arithmetic and orthogonality checks");
    tval->add_option("file", in_path)->required();
    tval->callback([&] {
        Table t;
        if ((rc = load(in_path, t))) return;
        Str s;
        cusp_status st = cusp_table_validate(t.p, &s.p);
        rc = finish(st, s.p);
    });

    std::string sub_path, big_path, image_class;
    std::vector<std::string> pins;
    unsigned long long limit = 0;
    auto* fusion = app.add_subcommand("fusion", "admissible class fusions of a subgroup table");
    fusion->add_option("--sub", sub_path, "CTAB file or compute:<group>")->required();
    fusion->add_option("--big", big_path, "CTAB file or compute:<group>")->required();
    fusion->add_option("--pin", pins, "fix an image, subclass=bigclass (repeatable)");
    fusion->add_option("--limit", limit, "search node limit");
    fusion->add_option("--images", image_class, "only report the images of this subgroup class");
    fusion->callback([&] {
        Table a, b;
        if ((rc = load(sub_path, a)) || (rc = load(big_path, b))) return;
        Str s;
        cusp_status st;
        if (!image_class.empty()) {
            st = cusp_fusion_images(a.p, b.p, image_class.c_str(), limit, &s.p);
        } else {
            std::string p = join(pins);
            st = cusp_fusion(a.p, b.p, p.empty() ? nullptr : p.c_str(), limit, &s.p);
        }
        rc = finish(st, s.p);
    });

    auto* zeta = app.add_subcommand("zeta", "scalar relating an almost character to a characteristic function");
    std::string table_path, cls;
    std::vector<std::string> support;
    zeta->add_option("--type", type, "B2, D4, F4 or E6");
    zeta->add_option("--table", table_path, "CTAB file or compute:<group>");
    zeta->add_option("--pair", pair);
    zeta->add_option("--class", cls, "class of the unipotent element");
    zeta->add_option("--support", support, "support classes of the characteristic function");
    zeta->callback([&] {
        if (zeta->get_subcommands().size()) return;
        if (type.empty() || table_path.empty() || pair.empty() || cls.empty()) {
            std::cerr << "error: zeta needs --type, --table, --pair and --class\n";
            rc = CUSP_INPUT;
            return;
        }
        Table t;
        if ((rc = load(table_path, t))) return;
        Str s;
        std::string sup = join(support);
        cusp_status st = cusp_zeta_verify(type.c_str(), t.p, pair.c_str(), cls.c_str(),
                                           sup.empty() ? nullptr : sup.c_str(), &s.p);
        rc = finish(st, s.p);
    });
    std::string zval;
    unsigned long m = 1;
    auto* zext = zeta->add_subcommand("extrapolate", "zeta for G(q^m) from zeta for G(q)");
    zext->add_option("--zeta", zval)->required();
    zext->add_option("--m", m)->required();
    zext->callback([&] {
        Str s;
        cusp_status st = cusp_zeta_extrapolate(zval.c_str(), m, &s.p);
        if (s.p) std::cout << s.p << "\n";
        rc = finish(st, nullptr);
    });

    std::string what;
    bool grids = false;
    auto* chev = app.add_subcommand("chev", "Chevalley generators and named class representatives");
    chev->add_option("what", what, "C2, D4, F4, E6, a representative name, or 'list'")->required();
    chev->add_flag("--grids", grids, "include 0/1 matrices");
    chev->callback([&] {
        Str s;
        cusp_status st = cusp_chev(what.c_str(), grids, &s.p);
        rc = finish(st, s.p);
    });

    app.parse_complete_callback([&] { g_pretty = !compact; });
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : CUSP_INPUT;
    }
    return rc;
}
