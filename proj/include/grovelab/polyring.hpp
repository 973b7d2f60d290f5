#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace grovelab {

using Int = mpz_class;
using Rat = mpq_class;

/// Sparse exponent vector sorted by variable name.
using Monomial = std::vector<std::pair<std::string, unsigned>>;

inline unsigned degree(const Monomial& m) {
    unsigned d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

inline Monomial mono_mul(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) out.push_back(x[i++]);
        else if (i == x.size() || y[j].first < x[i].first) out.push_back(y[j++]);
        else {
            out.emplace_back(x[i].first, x[i].second + y[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

/// Graded lex, larger first; earlier variable names are more significant.
struct GrlexDescending {
    bool operator()(const Monomial& x, const Monomial& y) const {
        unsigned dx = degree(x), dy = degree(y);
        if (dx != dy) return dx > dy;
        std::size_t i = 0;
        for (; i < x.size() && i < y.size(); ++i) {
            if (x[i].first != y[i].first) return x[i].first < y[i].first;
            if (x[i].second != y[i].second) return x[i].second > y[i].second;
        }
        return i < x.size() && i == y.size();
    }
};

/// Multivariate polynomial with arbitrary-precision integer coefficients.
class MultiPoly {
public:
    using Terms = std::map<Monomial, Int, GrlexDescending>;

    MultiPoly() = default;
    MultiPoly(long c) { // NOLINT: implicit scalar promotion
        if (c != 0) t_[Monomial{}] = c;
    }
    explicit MultiPoly(const Int& c) {
        if (c != 0) t_[Monomial{}] = c;
    }

    static MultiPoly variable(const std::string& name, unsigned power = 1) { return monomial({{name, power}}); }

    static MultiPoly monomial(Monomial m, const Int& coeff = 1) {
        Monomial clean;
        for (auto& [v, e] : m) {
            if (v.empty()) throw InputError("empty variable name");
            if (e) clean.emplace_back(v, e);
        }
        std::sort(clean.begin(), clean.end());
        Monomial merged;
        for (auto& [v, e] : clean) {
            if (!merged.empty() && merged.back().first == v) merged.back().second += e;
            else merged.emplace_back(v, e);
        }
        MultiPoly p;
        if (coeff != 0) p.t_[merged] = coeff;
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    std::set<std::string> variables() const {
        std::set<std::string> out;
        for (auto& [m, c] : t_)
            for (auto& [v, e] : m) out.insert(v);
        return out;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = t_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const Int& k) {
        if (k == 0) t_.clear();
        else
            for (auto& [m, c] : t_) c *= k;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Int(-1); }
    friend MultiPoly operator*(MultiPoly a, const Int& k) { return a *= k; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) out.add_term(mono_mul(ma, mb), ca * cb);
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

    Rat eval(const std::map<std::string, Rat>& point) const {
        Rat total = 0;
        for (auto& [m, c] : t_) {
            Rat term = c;
            for (auto& [v, e] : m) {
                auto it = point.find(v);
                if (it == point.end()) throw InputError("no value for variable '" + v + "'");
                for (unsigned k = 0; k < e; ++k) term *= it->second;
            }
            total += term;
        }
        return total;
    }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [m, c] : t_) {
            Int a = abs(c);
            if (first) s += c < 0 ? "-" : "";
            else s += c < 0 ? " - " : " + ";
            first = false;
            std::string body;
            if (a != 1 || m.empty()) body = a.get_str();
            for (auto& [v, e] : m) {
                if (!body.empty()) body += '*';
                body += v;
                if (e > 1) body += '^' + std::to_string(e);
            }
            s += body;
        }
        return s;
    }

    static MultiPoly parse(std::string_view src) {
        std::size_t i = 0;
        auto skip = [&] {
            while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
        };
        auto fail = [&](const std::string& why) -> MultiPoly {
            throw InputError("cannot parse polynomial '" + std::string(src) + "': " + why);
        };
        auto read_uint = [&]() -> std::string {
            std::size_t b = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            return std::string(src.substr(b, i - b));
        };
        MultiPoly out;
        skip();
        if (i == src.size()) fail("empty input");
        bool first = true;
        while (true) {
            skip();
            if (i == src.size()) break;
            int sign = 1;
            if (src[i] == '+' || src[i] == '-') {
                sign = src[i] == '-' ? -1 : 1;
                ++i;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Int coeff = sign;
            Monomial mono;
            bool any = false;
            while (true) {
                skip();
                if (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                    coeff *= Int(read_uint());
                } else if (i < src.size() && (std::isalpha(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                    std::size_t b = i;
                    while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
                    std::string name(src.substr(b, i - b));
                    unsigned e = 1;
                    skip();
                    if (i < src.size() && src[i] == '^') {
                        ++i;
                        skip();
                        auto digits = read_uint();
                        if (digits.empty()) fail("missing exponent");
                        e = static_cast<unsigned>(std::stoul(digits));
                    }
                    mono.emplace_back(name, e);
                } else {
                    fail("expected a factor");
                }
                any = true;
                skip();
                if (i < src.size() && src[i] == '*') {
                    ++i;
                    continue;
                }
                break;
            }
            if (!any) fail("empty term");
            out += monomial(mono, coeff);
        }
        return out;
    }

private:
    Terms t_;
};

} // namespace grovelab
