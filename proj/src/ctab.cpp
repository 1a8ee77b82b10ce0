#include "ctab.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace cusp {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct Token {
    std::string text;
    int col;  // 1-based
};

std::vector<Token> tokens(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back({line.substr(i, j - i), int(i) + 1});
        i = j;
    }
    return out;
}

BigInt parse_decimal(const Token& t, int line, const char* what) {
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
        throw CtabParseError(std::string("expected a non-negative integer ") + what + ", got '" + t.text + "'",
                             line, t.col);
    return BigInt(t.text);
}

}  // namespace

CharacterTable parse_ctab(const std::string& text) {
    CharacterTable t;
    bool have_name = false, have_order = false, have_classes = false, have_matrix = false;
    enum { Header, Classes, Matrix } state = Header;
    std::vector<std::vector<std::pair<int, Token>>> pending_power;  // per class: (prime, target token)
    std::vector<int> power_lines;
    std::istringstream in(text);
    std::string raw;
    int ln = 0;
    while (std::getline(in, raw)) {
        ++ln;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        int indent = int(raw.find_first_not_of(" \t")) + 1;
        if (state == Header) {
            if (line.rfind("name:", 0) == 0) {
                t.name = trim(line.substr(5));
                have_name = true;
            } else if (line.rfind("order:", 0) == 0) {
                std::string v = trim(line.substr(6));
                auto tk = tokens(v);
                if (tk.size() != 1) throw CtabParseError("order must be a single integer", ln, indent + 6);
                tk[0].col += int(raw.find(v));
                t.order = parse_decimal(tk[0], ln, "order");
                have_order = true;
            } else if (line == "begin classes") {
                if (have_classes) throw CtabParseError("duplicate classes block", ln, indent);
                state = Classes;
            } else if (line == "begin matrix") {
                if (have_matrix) throw CtabParseError("duplicate matrix block", ln, indent);
                state = Matrix;
            } else {
                throw CtabParseError("unexpected line '" + line + "'", ln, indent);
            }
            continue;
        }
        if (state == Classes) {
            if (line == "end classes") {
                state = Header;
                have_classes = true;
                continue;
            }
            auto tk = tokens(raw);
            if (tk.size() < 3) throw CtabParseError("class line needs name, size and element order", ln, indent);
            ClassRecord c;
            c.name = tk[0].text;
            if (t.find_class(c.name) >= 0) throw CtabParseError("duplicate class name '" + c.name + "'", ln, tk[0].col);
            c.size = parse_decimal(tk[1], ln, "class size");
            BigInt o = parse_decimal(tk[2], ln, "element order");
            if (o == 0 || !o.fits_sint_p()) throw CtabParseError("bad element order", ln, tk[2].col);
            c.order = int(o.get_si());
            std::vector<std::pair<int, Token>> pw;
            for (size_t k = 3; k < tk.size(); ++k) {
                const std::string& s = tk[k].text;
                size_t arrow = s.find("->");
                if (s.size() < 4 || s[0] != 'p' || arrow == std::string::npos)
                    throw CtabParseError("expected p<prime>-><index>, got '" + s + "'", ln, tk[k].col);
                Token pt{s.substr(1, arrow - 1), tk[k].col + 1};
                Token it{s.substr(arrow + 2), tk[k].col + int(arrow) + 2};
                BigInt p = parse_decimal(pt, ln, "prime");
                if (!p.fits_sint_p() || p < 2) throw CtabParseError("bad prime", ln, pt.col);
                if (c.power.count(int(p.get_si()))) throw CtabParseError("repeated power map", ln, tk[k].col);
                c.power[int(p.get_si())] = -1;
                pw.push_back({int(p.get_si()), it});
            }
            t.classes.push_back(c);
            pending_power.push_back(pw);
            power_lines.push_back(ln);
            continue;
        }
        // matrix
        if (line == "end matrix") {
            state = Header;
            have_matrix = true;
            continue;
        }
        std::vector<Cyclotomic> row;
        for (const auto& tk : tokens(raw)) {
            try {
                row.push_back(Cyclotomic::parse(tk.text));
            } catch (const ParseError& e) {
                throw CtabParseError(std::string("bad cyclotomic entry '") + tk.text + "': " + e.what(), ln,
                                     tk.col + int(e.pos));
            } catch (const InputError& e) {
                throw CtabParseError(std::string("bad cyclotomic entry '") + tk.text + "': " + e.what(), ln, tk.col);
            }
        }
        t.irr.push_back(std::move(row));
    }
    if (state != Header) throw CtabParseError("unterminated block", ln + 1, 1);
    if (!have_name) throw CtabParseError("missing 'name:' header", ln + 1, 1);
    if (!have_order) throw CtabParseError("missing 'order:' header", ln + 1, 1);
    if (!have_classes) throw CtabParseError("missing classes block", ln + 1, 1);
    if (!have_matrix) throw CtabParseError("missing matrix block", ln + 1, 1);
    for (size_t j = 0; j < t.classes.size(); ++j)
        for (const auto& [p, tok] : pending_power[j]) {
            BigInt idx = parse_decimal(tok, power_lines[j], "class index");
            if (idx < 1 || idx > BigInt((unsigned long)t.classes.size()))
                throw CtabParseError("power map index out of range", power_lines[j], tok.col);
            t.classes[j].power[p] = int(idx.get_si()) - 1;
        }
    for (size_t i = 0; i < t.irr.size(); ++i)
        if (t.irr[i].size() != t.classes.size())
            throw InputError("matrix row " + std::to_string(i + 1) + " has " + std::to_string(t.irr[i].size()) +
                             " entries, expected " + std::to_string(t.classes.size()));
    if (t.irr.size() != t.classes.size())
        throw InputError("matrix has " + std::to_string(t.irr.size()) + " rows for " +
                         std::to_string(t.classes.size()) + " classes");
    t.identity_class = 0;
    for (size_t j = 0; j < t.classes.size(); ++j)
        if (t.classes[j].order == 1) {
            t.identity_class = int(j);
            break;
        }
    return t;
}

CharacterTable read_ctab_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_ctab(ss.str());
}

std::string serialize_ctab(const CharacterTable& t) {
    std::ostringstream o;
    o << "name: " << t.name << "\n";
    o << "order: " << t.order.get_str() << "\n";
    o << "begin classes\n";
    for (const auto& c : t.classes) {
        o << c.name << ' ' << c.size.get_str() << ' ' << c.order;
        for (const auto& [p, k] : c.power) o << " p" << p << "->" << (k + 1);
        o << "\n";
    }
    o << "end classes\nbegin matrix\n";
    for (const auto& row : t.irr) {
        for (size_t j = 0; j < row.size(); ++j) o << (j ? " " : "") << row[j].str();
        o << "\n";
    }
    o << "end matrix\n";
    return o.str();
}

std::vector<std::string> validate_ctab(const CharacterTable& t) {
    std::vector<std::string> bad;
    const size_t r = t.classes.size();
    if (r == 0) {
        bad.push_back("table has no classes");
        return bad;
    }
    if (t.irr.size() != r) bad.push_back("matrix has " + std::to_string(t.irr.size()) + " rows for " +
                                         std::to_string(r) + " classes");
    for (size_t i = 0; i < t.irr.size(); ++i)
        if (t.irr[i].size() != r) bad.push_back("row " + std::to_string(i + 1) + " has wrong length");
    if (!bad.empty()) return bad;
    if (t.order <= 0) bad.push_back("group order must be positive");

    const auto& id = t.classes[t.identity_class];
    if (id.order != 1 || id.size != 1) bad.push_back("identity class must have size 1 and element order 1");
    std::set<std::string> names;
    BigInt total = 0;
    for (size_t j = 0; j < r; ++j) {
        const auto& c = t.classes[j];
        if (!names.insert(c.name).second) bad.push_back("duplicate class name " + c.name);
        if (c.size <= 0) bad.push_back("class " + c.name + " has non-positive size");
        else if (t.order > 0 && t.order % c.size != 0) bad.push_back("size of class " + c.name + " does not divide the order");
        total += c.size;
        for (const auto& [p, k] : c.power) {
            if (k < 0 || size_t(k) >= r) {
                bad.push_back("class " + c.name + ": p" + std::to_string(p) + " power map out of range");
                continue;
            }
            int want = c.order / std::gcd(c.order, p);
            if (t.classes[k].order != want)
                bad.push_back("class " + c.name + ": p" + std::to_string(p) + " power " + t.classes[k].name +
                              " has order " + std::to_string(t.classes[k].order) + ", expected " +
                              std::to_string(want));
        }
    }
    if (total != t.order)
        bad.push_back("class sizes sum to " + total.get_str() + ", expected " + t.order.get_str());
    BigInt sq = 0;
    for (size_t i = 0; i < r; ++i) {
        auto d = t.irr[i][t.identity_class].as_integer();
        if (!d || *d <= 0) {
            bad.push_back("row " + std::to_string(i + 1) + " has degree " + t.irr[i][t.identity_class].str());
            continue;
        }
        sq += *d * *d;
    }
    if (sq != t.order) bad.push_back("degree squares sum to " + sq.get_str() + ", expected " + t.order.get_str());
    if (!bad.empty()) return bad;  // orthogonality is meaningless on a broken skeleton
    auto orth = orthogonality_violations(t);
    bad.insert(bad.end(), orth.begin(), orth.end());
    return bad;
}

}  // namespace cusp
