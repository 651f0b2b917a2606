#include "surfcert/config.hpp"

#include "surfcert/quadratic_field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace surfcert {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// One signed term of a coordinate: rational [ * ] ( i | sqrt(n) ), or bare
// radical with implied coefficient 1.
struct CoordTerm {
    Rational coeff;
    long long radicand = 0;  // 0 = rational part, -1 = i, n = sqrt(n)
};

CoordTerm parse_coord_term(std::string t, int line) {
    t = trim(t);
    CoordTerm out;
    int sign = 1;
    size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
        if (t[i] == '-') sign = -1;
        ++i;
    }
    std::string numpart;
    while (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '/')) {
        numpart += t[i];
        ++i;
    }
    if (i < t.size() && t[i] == '*') ++i;
    std::string rest = trim(t.substr(i));
    if (rest.empty()) {
        if (numpart.empty()) throw ConfigError(line, "empty coordinate term");
        out.coeff = Rational(sign) * Rational::parse(numpart);
        out.radicand = 0;
        return out;
    }
    out.coeff = numpart.empty() ? Rational(sign) : Rational(sign) * Rational::parse(numpart);
    if (rest == "i") {
        out.radicand = -1;
        return out;
    }
    if (rest.rfind("sqrt(", 0) == 0 && rest.back() == ')') {
        std::string inside = rest.substr(5, rest.size() - 6);
        try {
            out.radicand = std::stoll(inside);
        } catch (...) {
            throw ConfigError(line, "bad radicand '" + inside + "'");
        }
        if (out.radicand == 0 || out.radicand == 1)
            throw ConfigError(line, "radicand must not be 0 or 1");
        return out;
    }
    throw ConfigError(line, "cannot parse coordinate factor '" + rest + "'");
}

Coordinate parse_coordinate(const std::string& text, int line) {
    // Split into at most two signed terms at top level.
    std::vector<std::string> parts;
    std::string cur;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if ((c == '+' || c == '-') && i > 0 && !cur.empty() && cur.find_first_not_of(" \t") != std::string::npos) {
            // Sign inside a term only occurs at the very start.
            parts.push_back(cur);
            cur = std::string(1, c);
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) parts.push_back(cur);
    if (parts.empty() || parts.size() > 2) throw ConfigError(line, "cannot parse coordinate '" + text + "'");

    Coordinate out;
    for (const auto& p : parts) {
        CoordTerm term = parse_coord_term(p, line);
        if (term.radicand == 0) {
            if (!out.a.is_zero()) throw ConfigError(line, "two rational parts in coordinate");
            out.a = term.coeff;
        } else {
            if (!out.b.is_zero()) throw ConfigError(line, "two radical parts in coordinate");
            out.b = term.coeff;
            out.radicand = term.radicand;
        }
    }
    return out;
}

std::vector<ClaimedPoint> parse_points(const std::string& text, int line) {
    std::vector<ClaimedPoint> out;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
        if (i >= text.size()) break;
        if (text[i] != '(') throw ConfigError(line, "expected '(' in point list");
        size_t close = i + 1;
        int depth = 1;
        while (close < text.size() && depth > 0) {
            if (text[close] == '(') ++depth;
            if (text[close] == ')') --depth;
            if (depth > 0) ++close;
        }
        if (depth != 0) throw ConfigError(line, "unterminated point");
        std::string body = text.substr(i + 1, close - i - 1);
        i = close + 1;
        std::vector<std::string> coords;
        std::string cur;
        int inner = 0;
        for (char c : body) {
            if (c == '(') ++inner;
            if (c == ')') --inner;
            if (c == ':' && inner == 0) {
                coords.push_back(cur);
                cur.clear();
            } else cur += c;
        }
        coords.push_back(cur);
        if (coords.size() != 3) throw ConfigError(line, "points need three coordinates");
        ClaimedPoint p{parse_coordinate(coords[0], line), parse_coordinate(coords[1], line),
                       parse_coordinate(coords[2], line)};
        out.push_back(p);
    }
    return out;
}

std::vector<P1Point> parse_p1_points(const std::string& text, int line) {
    std::vector<P1Point> out;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
        if (i >= text.size()) break;
        if (text[i] != '(') throw ConfigError(line, "expected '(' in P1 point list");
        size_t close = text.find(')', i);
        if (close == std::string::npos) throw ConfigError(line, "unterminated P1 point");
        std::string body = text.substr(i + 1, close - i - 1);
        i = close + 1;
        size_t colon = body.find(':');
        if (colon == std::string::npos) throw ConfigError(line, "P1 point needs two coordinates");
        Rational u = Rational::parse(trim(body.substr(0, colon)));
        Rational v = Rational::parse(trim(body.substr(colon + 1)));
        if (v.is_zero()) {
            if (u.is_zero()) throw ConfigError(line, "(0:0) is not a point");
            out.push_back(P1Point::at_infinity());
        } else {
            out.push_back(P1Point::finite(u / v));
        }
    }
    return out;
}

void check_vars(const PolyQ& p, const std::vector<std::string>& allowed, const std::string& field,
                int line) {
    PolyQ pruned = p.prune_vars();
    for (const auto& v : pruned.vars())
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
            throw ConfigError(line, field + ": unexpected variable '" + v + "'");
}

bool proportional(const PolyQ& f, const PolyQ& g) {
    if (f.is_zero() || g.is_zero()) return true;
    auto [a, b] = PolyQ::aligned(f, g);
    auto [ea, ca] = a.leading_term();
    auto [eb, cb] = b.leading_term();
    if (ea != eb) return false;
    return a * cb == b * ca;
}

}  // namespace

std::string Coordinate::str() const {
    if (is_rational() && b.is_zero()) return a.str();
    std::string rad = radicand == -1 ? "i" : "sqrt(" + std::to_string(radicand) + ")";
    std::string bs = b.is_one() ? rad : (b == Rational(-1) ? "-" + rad : b.str() + "*" + rad);
    if (a.is_zero()) return bs;
    return a.str() + (b.sign() >= 0 ? "+" : "") + bs;
}

PipelineConfig parse_config(const std::string& text) {
    PipelineConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool have_a = false, have_b = false, have_f = false, have_g = false;
    bool have_num = false, have_den = false;
    int last_line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        auto hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        last_line = line;
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (value.empty()) throw ConfigError(line, "empty value for '" + key + "'");
        try {
            if (key == "name") cfg.name = value;
            else if (key == "curve_a") { cfg.curve_a = Rational::parse(value); have_a = true; }
            else if (key == "curve_b") { cfg.curve_b = Rational::parse(value); have_b = true; }
            else if (key == "quad_d") cfg.quad_d = std::stoll(value);
            else if (key == "pencil_f") { cfg.pencil_f = parse_poly(value); have_f = true; }
            else if (key == "pencil_g") { cfg.pencil_g = parse_poly(value); have_g = true; }
            else if (key == "gamma_num") { cfg.gamma_num = parse_poly(value); have_num = true; }
            else if (key == "gamma_den") { cfg.gamma_den = parse_poly(value); have_den = true; }
            else if (key == "prime_bound") cfg.prime_bound = std::stoll(value);
            else if (key == "claimed_k_points") cfg.claimed_k_points = parse_points(value, line);
            else if (key == "claimed_l_points") cfg.claimed_l_points = parse_points(value, line);
            else if (key == "critical_locus") cfg.critical_locus_override = parse_p1_points(value, line);
            else throw ConfigError(line, "unknown key '" + key + "'");
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError(line, std::string(e.what()));
        }
    }
    if (!have_a || !have_b) throw ConfigError(last_line, "missing curve");
    cfg.has_curve = true;
    if (!have_f || !have_g) throw ConfigError(last_line, "missing pencil");
    if (!have_num || !have_den) throw ConfigError(last_line, "missing covering map");
    if (cfg.quad_d == 0 || cfg.quad_d == 1 || !is_squarefree_int(cfg.quad_d))
        throw ConfigError(last_line, "quad_d must be squarefree, not 0 or 1");

    check_vars(cfg.pencil_f, {"x0", "x1", "x2"}, "pencil_f", last_line);
    check_vars(cfg.pencil_g, {"x0", "x1", "x2"}, "pencil_g", last_line);
    check_vars(cfg.gamma_num, {"w0", "w1", "w2"}, "gamma_num", last_line);
    check_vars(cfg.gamma_den, {"w0", "w1", "w2"}, "gamma_den", last_line);
    if (proportional(cfg.pencil_f, cfg.pencil_g)) throw ConfigError(last_line, "pencil degenerate");
    if (cfg.prime_bound < 3) throw ConfigError(last_line, "prime_bound must be >= 3");
    return cfg;
}

std::string PipelineConfig::serialize() const {
    std::ostringstream out;
    out << "name = " << name << "\n";
    out << "curve_a = " << curve_a.str() << "\n";
    out << "curve_b = " << curve_b.str() << "\n";
    out << "quad_d = " << quad_d << "\n";
    out << "pencil_f = " << pencil_f.str() << "\n";
    out << "pencil_g = " << pencil_g.str() << "\n";
    out << "gamma_num = " << gamma_num.str() << "\n";
    out << "gamma_den = " << gamma_den.str() << "\n";
    out << "prime_bound = " << prime_bound << "\n";
    auto points = [](const std::vector<ClaimedPoint>& ps) {
        std::string s;
        for (size_t i = 0; i < ps.size(); ++i) {
            if (i) s += ", ";
            s += "(" + ps[i][0].str() + ":" + ps[i][1].str() + ":" + ps[i][2].str() + ")";
        }
        return s;
    };
    if (!claimed_k_points.empty()) out << "claimed_k_points = " << points(claimed_k_points) << "\n";
    if (!claimed_l_points.empty()) out << "claimed_l_points = " << points(claimed_l_points) << "\n";
    if (critical_locus_override) {
        out << "critical_locus = ";
        for (size_t i = 0; i < critical_locus_override->size(); ++i) {
            if (i) out << ", ";
            const P1Point& p = (*critical_locus_override)[i];
            out << (p.infinite ? "(1:0)" : "(" + p.t.str() + ":1)");
        }
        out << "\n";
    }
    return out.str();
}

PipelineConfig builtin_config(const std::string& which) {
    if (which != "wu-example")
        throw std::invalid_argument("unknown builtin '" + which + "'");
    PipelineConfig cfg;
    cfg.name = "wu-example";
    cfg.curve_a = Rational(0);
    cfg.curve_b = Rational(-16);
    cfg.quad_d = -1;
    cfg.pencil_f = parse_poly("x0^2 + x1^2 - x2^2");
    cfg.pencil_g = parse_poly("x0^2 - x1^2");
    cfg.gamma_num = parse_poly("w0*w2 + w1^2 + 16*w2^2");
    cfg.gamma_den = parse_poly("w0*w1 + w1*w2");
    cfg.prime_bound = 50;
    cfg.has_curve = true;
    Coordinate zero{Rational(0), Rational(0), 0};
    Coordinate one{Rational(1), Rational(0), 0};
    Coordinate fouri{Rational(0), Rational(4), -1};
    Coordinate mfouri{Rational(0), Rational(-4), -1};
    cfg.claimed_k_points = {{zero, one, zero}};
    cfg.claimed_l_points = {{zero, one, zero}, {zero, fouri, one}, {zero, mfouri, one}};
    return cfg;
}

}  // namespace surfcert
