#pragma once

#include "surfcert/rational.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfcert {

// Sparse multivariate polynomial with exact coefficients.
// Invariants: no stored zero coefficients; every exponent vector has the
// arity of the variable list; the variable list is sorted and duplicate-free.
template <typename F>
class MultiPoly {
public:
    using Expo = std::vector<int>;
    using TermMap = std::map<Expo, F>;

    MultiPoly() = default;

    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    }

    static MultiPoly constant(const F& c, std::vector<std::string> vars = {}) {
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_[Expo(p.vars_.size(), 0)] = c;
        return p;
    }

    static MultiPoly variable(const std::string& name) {
        MultiPoly p(std::vector<std::string>{name});
        Expo e{1};
        p.terms_[e] = F(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const Expo& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    }

    F constant_value() const {
        if (terms_.empty()) return F(0);
        if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
        return terms_.begin()->second;
    }

    void add_term(const Expo& e, const F& c) {
        if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int var_index(const std::string& v) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v) return -1;
        return static_cast<int>(it - vars_.begin());
    }

    int degree_in(const std::string& v) const {
        int idx = var_index(v);
        if (idx < 0) return 0;
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int k : e) s += k;
            d = std::max(d, s);
        }
        return terms_.empty() ? -1 : d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int k : e) s += k;
            if (d == -1) d = s;
            else if (s != d) return false;
        }
        return true;
    }

    // Degree in a group of variables (for bidegree checks).
    int degree_in_group(const std::vector<std::string>& group) const {
        std::vector<int> idx;
        for (const auto& v : group) {
            int i = var_index(v);
            if (i >= 0) idx.push_back(i);
        }
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int i : idx) s += e[i];
            d = std::max(d, s);
        }
        return d;
    }

    MultiPoly operator-() const {
        MultiPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) {
        auto [a, b] = aligned(x, y);
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) { return x + (-y); }
    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
        auto [a, b] = aligned(x, y);
        MultiPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Expo e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& x, const F& c) {
        MultiPoly r(x.vars_);
        if (c.is_zero()) return r;
        for (const auto& [e, coeff] : x.terms_) r.terms_[e] = coeff * c;
        return r;
    }
    friend MultiPoly operator*(const F& c, const MultiPoly& x) { return x * c; }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& x, const MultiPoly& y) {
        auto [a, b] = aligned(x, y);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& x, const MultiPoly& y) { return !(x == y); }

    MultiPoly pow(unsigned n) const {
        MultiPoly r = constant(F(1), vars_);
        MultiPoly base = *this;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    // Exact evaluation; the assignment must cover every variable.
    template <typename V>
    V eval(const std::map<std::string, V>& point, const std::function<V(const F&)>& embed) const {
        std::vector<V> vals;
        vals.reserve(vars_.size());
        for (const auto& v : vars_) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("MultiPoly: missing assignment for variable " + v);
            vals.push_back(it->second);
        }
        V acc = embed(F(0));
        for (const auto& [e, c] : terms_) {
            V t = embed(c);
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t = t * vals[i];
            acc = acc + t;
        }
        return acc;
    }

    F eval_same(const std::map<std::string, F>& point) const {
        return eval<F>(point, [](const F& c) { return c; });
    }

    // Partial evaluation: substitute values for a subset of variables.
    template <typename V>
    MultiPoly<V> specialize(const std::map<std::string, V>& sub,
                            const std::function<V(const F&)>& embed) const {
        std::vector<std::string> remaining;
        for (const auto& v : vars_)
            if (!sub.count(v)) remaining.push_back(v);
        MultiPoly<V> out(remaining);
        for (const auto& [e, c] : terms_) {
            V coeff = embed(c);
            typename MultiPoly<V>::Expo re;
            re.reserve(remaining.size());
            for (size_t i = 0; i < vars_.size(); ++i) {
                auto it = sub.find(vars_[i]);
                if (it != sub.end()) {
                    for (int k = 0; k < e[i]; ++k) coeff = coeff * it->second;
                } else {
                    re.push_back(e[i]);
                }
            }
            out.add_term(re, coeff);
        }
        return out;
    }

    MultiPoly derivative(const std::string& v) const {
        int idx = var_index(v);
        if (idx < 0) throw std::invalid_argument("MultiPoly: unknown variable " + v);
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Expo ne = e;
            ne[idx] -= 1;
            r.add_term(ne, c * F(e[idx]));
        }
        return r;
    }

    MultiPoly homogenize(const std::string& new_var, int degree) const {
        if (total_degree() > degree)
            throw std::invalid_argument("MultiPoly: homogenization degree below total degree");
        if (var_index(new_var) >= 0)
            throw std::invalid_argument("MultiPoly: homogenization variable already present");
        std::vector<std::string> nv = vars_;
        nv.push_back(new_var);
        MultiPoly r(nv);
        int pos = r.var_index(new_var);
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int k : e) s += k;
            Expo ne(r.vars_.size(), 0);
            size_t j = 0;
            for (size_t i = 0; i < r.vars_.size(); ++i) {
                if (static_cast<int>(i) == pos) continue;
                ne[i] = e[j++];
            }
            ne[pos] = degree - s;
            r.add_term(ne, c);
        }
        return r;
    }

    MultiPoly dehomogenize(const std::string& v) const {
        int idx = var_index(v);
        if (idx < 0) throw std::invalid_argument("MultiPoly: unknown variable " + v);
        std::vector<std::string> nv;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (static_cast<int>(i) != idx) nv.push_back(vars_[i]);
        MultiPoly r(nv);
        for (const auto& [e, c] : terms_) {
            Expo ne;
            ne.reserve(nv.size());
            for (size_t i = 0; i < e.size(); ++i)
                if (static_cast<int>(i) != idx) ne.push_back(e[i]);
            r.add_term(ne, c);
        }
        return r;
    }

    // Drop variables that do not occur (keeps prints tight).
    MultiPoly prune_vars() const {
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) used[i] = true;
        std::vector<std::string> nv;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nv.push_back(vars_[i]);
        MultiPoly r(nv);
        for (const auto& [e, c] : terms_) {
            Expo ne;
            for (size_t i = 0; i < e.size(); ++i)
                if (used[i]) ne.push_back(e[i]);
            r.add_term(ne, c);
        }
        return r;
    }

    MultiPoly with_vars(const std::vector<std::string>& extra) const {
        std::vector<std::string> nv = vars_;
        nv.insert(nv.end(), extra.begin(), extra.end());
        MultiPoly r(nv);
        return remap(*this, r.vars_);
    }

    // Leading term under graded-lex (total degree, then exponent tuple).
    std::pair<Expo, F> leading_term() const {
        if (terms_.empty()) throw std::logic_error("MultiPoly: leading term of zero");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (grlex_less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    static bool grlex_less(const Expo& a, const Expo& b) {
        int sa = 0, sb = 0;
        for (int k : a) sa += k;
        for (int k : b) sb += k;
        if (sa != sb) return sa < sb;
        return a < b;
    }

    // Canonical text form: terms in descending graded-lex order,
    // coefficients as integers or integer pairs "p/q".
    std::string str() const;

    static std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& x, const MultiPoly& y) {
        if (x.vars_ == y.vars_) return {x, y};
        std::vector<std::string> uv;
        std::set_union(x.vars_.begin(), x.vars_.end(), y.vars_.begin(), y.vars_.end(),
                       std::back_inserter(uv));
        return {remap(x, uv), remap(y, uv)};
    }

private:
    static MultiPoly remap(const MultiPoly& p, const std::vector<std::string>& nv) {
        MultiPoly r(nv);
        std::vector<int> pos(p.vars_.size());
        for (size_t i = 0; i < p.vars_.size(); ++i) {
            pos[i] = r.var_index(p.vars_[i]);
            if (pos[i] < 0) throw std::logic_error("MultiPoly: variable lost in remap");
        }
        for (const auto& [e, c] : p.terms_) {
            Expo ne(nv.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            r.terms_[ne] = c;
        }
        return r;
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

template <typename F>
std::string MultiPoly<F>::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Expo, F>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        return grlex_less(b->first, a->first);
    });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const Expo& e = t->first;
        const F& c = t->second;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string body;
        if (mono.empty()) body = cs;
        else if (cs == "1") body = mono;
        else body = cs + "*" + mono;
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

using PolyQ = MultiPoly<Rational>;

// Parser for the canonical text form over Q: sums of signed terms,
// each "coeff", "coeff*mono", or "mono" with mono = var[^e][*var[^e]...].
PolyQ parse_poly(const std::string& text);

}  // namespace surfcert
