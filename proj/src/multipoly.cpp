#include "surfcert/multipoly.hpp"

#include <cctype>

namespace surfcert {

namespace {

struct Tokenizer {
    const std::string& s;
    size_t i = 0;

    explicit Tokenizer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("polynomial parse: expected number at position " + std::to_string(i));
        return s.substr(start, i - start);
    }
    std::string ident() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (start == i) throw std::invalid_argument("polynomial parse: expected identifier at position " + std::to_string(i));
        return s.substr(start, i - start);
    }
};

}  // namespace

PolyQ parse_poly(const std::string& text) {
    Tokenizer t(text);
    struct RawTerm {
        Rational coeff;
        std::map<std::string, int> expo;
    };
    std::vector<RawTerm> raw;
    std::set<std::string> var_set;

    bool first = true;
    while (!t.done()) {
        int sign = 1;
        if (t.accept('+')) sign = 1;
        else if (t.accept('-')) sign = -1;
        else if (!first) throw std::invalid_argument("polynomial parse: expected '+' or '-' at position " + std::to_string(t.i));
        first = false;

        RawTerm term;
        term.coeff = Rational(sign);
        bool saw_factor = false;
        for (;;) {
            char c = t.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string n = t.number();
                if (t.accept('/')) {
                    std::string d = t.number();
                    term.coeff *= Rational(BigInt(n), BigInt(d));
                } else {
                    term.coeff *= Rational(BigInt(n));
                }
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string v = t.ident();
                int e = 1;
                if (t.accept('^')) e = std::stoi(t.number());
                term.expo[v] += e;
                var_set.insert(v);
                saw_factor = true;
            } else {
                throw std::invalid_argument("polynomial parse: unexpected character at position " + std::to_string(t.i));
            }
            if (!t.accept('*')) break;
        }
        if (!saw_factor) throw std::invalid_argument("polynomial parse: empty term");
        raw.push_back(std::move(term));
    }
    if (raw.empty()) throw std::invalid_argument("polynomial parse: empty input");

    std::vector<std::string> vars(var_set.begin(), var_set.end());
    PolyQ p(vars);
    for (const auto& term : raw) {
        PolyQ::Expo e(p.vars().size(), 0);
        for (const auto& [v, k] : term.expo) e[p.var_index(v)] = k;
        p.add_term(e, term.coeff);
    }
    return p;
}

}  // namespace surfcert
